//
// Copyright 2026 The rxscan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Whole-pattern comparisons between the analysis and the oracles, shared by
// the property tests and the acceptance suite. Each returns a description
// of every disagreement found (empty when everything agrees).

#ifndef RXSCAN_TESTS_ORACLE_CHECKS_H_
#define RXSCAN_TESTS_ORACLE_CHECKS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "rxscan/ast.h"

namespace rxscan::oracle {

// For every star: FindPumpable reports a witness iff some string over
// {a, b} of length <= max_len has two runs from the body back to the star,
// and then the witness length equals the shortest such string's.
std::vector<std::string> CheckPumpable(const AstNode& tree, size_t max_len);

// For every node p and every w over {a, b} with |w| <= max_len: the ends of
// EnumeratePaths(p, w) equal the nodes reachable by configuration search.
std::vector<std::string> CheckPathExistence(const AstNode& tree, size_t max_len);

// Evolve on every node and PwfRun on short inputs finish; PwfRun stays
// within `budget` and agrees with the language oracle; FindPumpable ends
// without hitting its cap.
std::vector<std::string> CheckNullableTermination(const AstNode& tree,
                                                  uint64_t budget);

}  // namespace rxscan::oracle

#endif  // RXSCAN_TESTS_ORACLE_CHECKS_H_

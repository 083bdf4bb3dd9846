// Copyright 2026 The mcg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MCG_SELFTEST_HPP
#define MCG_SELFTEST_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace mcg {

struct SelftestStats {
    uint64_t graphs = 0;
    uint64_t bipartite_graphs = 0;
    uint64_t allowed_comparisons = 0;
    uint64_t tutte_comparisons = 0;
    uint64_t tight_shore_comparisons = 0;
    uint64_t brace_comparisons = 0;
    uint64_t structured_cut_comparisons = 0;
    uint64_t failures = 0;
    std::vector<std::string> failure_samples;  // capped at 20
};

/// Cross-validates the solver paths against exhaustive oracles:
///   - blossom reachability vs. full perfect-matching enumeration,
///   - deficiency-form matchability and the matching-size identity,
///   - the pairwise tight-cut test vs. the definitional one, on every
///     proper shore,
///   - brace recognition vs. 2-extendability (bipartite graphs up to
///     max_n + 2 vertices),
///   - structured tight-cut discovery vs. the exhaustive shore scan.
/// Every connected graph with at most max_n vertices is visited.
SelftestStats run_selftest(int max_n, std::ostream* progress = nullptr);

}  // namespace mcg

#endif  // MCG_SELFTEST_HPP

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

#ifndef MCG_MATCHING_HPP
#define MCG_MATCHING_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "mcg/graph.hpp"

namespace mcg {

/// A matching as a set of edge ids of the host graph.
struct Matching {
    std::vector<EdgeId> edge_ids;  // sorted

    int size() const { return static_cast<int>(edge_ids.size()); }
    bool contains(EdgeId id) const;
};

inline constexpr int kDefaultEnumerationBound = 16;

/// Maximum-cardinality matching (Edmonds blossom search on the underlying
/// simple graph; matched pairs map to the lowest parallel edge id).
Matching max_matching(const Multigraph& g);

bool has_perfect_matching(const Multigraph& g);

/// o(G - S): number of odd components after deleting S.
int odd_components(const Multigraph& g, const VertexSet& s);

/// All perfect matchings, by backtracking on the lowest-index uncovered
/// vertex; edges are tried in ascending id order, so the output order is
/// deterministic. Rejects graphs larger than max_vertices.
std::vector<Matching> enumerate_perfect_matchings(const Multigraph& g,
                                                  int max_vertices = kDefaultEnumerationBound);

/// Perfect matchings as bitmasks over edge positions (edges() order).
std::vector<uint64_t> enumerate_pm_masks(const Multigraph& g,
                                         int max_vertices = kDefaultEnumerationBound);

/// True iff some perfect matching contains e.
bool is_allowed(const Multigraph& g, EdgeId e);

/// True iff |V| >= 3 and G - v has a perfect matching for every v.
bool is_factor_critical(const Multigraph& g);

/// True iff |V| >= 2n+2, G has a matching of size n, and every matching of
/// size n extends to a perfect matching. Requires n >= 1 and G connected.
bool is_n_extendable(const Multigraph& g, int n);

/// Matching queries against one (simple) adjacency structure. Holds all the
/// blossom scratch in fixed arrays, so construction never allocates; a base
/// perfect matching is cached so single-edge and vertex-pair queries cost
/// one augmenting search instead of a full solve.
class MatchKit {
public:
    explicit MatchKit(const Multigraph& g);
    MatchKit(int n, const uint64_t* adj_rows);

    int max_matching_size(uint64_t active_mask);
    bool has_pm(uint64_t active_mask);
    bool has_pm_full();

    /// G - {u, v} has a perfect matching (u != v).
    bool pm_avoiding_pair(VertexId u, VertexId v);

    /// An edge joining u and v would lie in some perfect matching.
    bool allowed_pair(VertexId u, VertexId v) { return pm_avoiding_pair(u, v); }

    bool bicritical();
    bool factor_critical();

    /// The graph restricted to `mask` is factor-critical. Decided by one
    /// maximum matching plus a single alternating-forest search: with
    /// deficiency one, the vertices reachable on even alternating paths
    /// from the exposed vertex are exactly those some maximum matching
    /// misses, so factor-critical means the whole mask is reached.
    bool factor_critical_masked(uint64_t mask);

    /// Partner array of a maximum matching on the full vertex set (-1 when
    /// exposed). Computed once and cached.
    const int* base_matching();

private:
    int n_;
    uint64_t full_;
    std::array<uint64_t, kMaxVertices> rows_;
    std::array<int, kMaxVertices> base_;
    bool base_ready_ = false;
    bool base_perfect_ = false;

    // blossom scratch
    int match_[kMaxVertices];
    int parent_[kMaxVertices];
    int base_v_[kMaxVertices];
    int queue_[kMaxVertices];
    bool used_[kMaxVertices];
    bool blossom_[kMaxVertices];
    bool path_mark_[kMaxVertices];

    int find_augmenting(int root, uint64_t mask);
    void do_augment(int leaf);
    int lca(int a, int b);
    void mark_path(int v, int b, int child);
    int solve(uint64_t mask);  // max matching continuing from match_
    void ensure_base();
};

}  // namespace mcg

#endif  // MCG_MATCHING_HPP

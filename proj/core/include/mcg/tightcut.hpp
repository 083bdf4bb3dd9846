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

#ifndef MCG_TIGHTCUT_HPP
#define MCG_TIGHTCUT_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mcg/classify.hpp"
#include "mcg/graph.hpp"

namespace mcg {

/// Largest graph for which the exhaustive odd-shore scan runs. Beyond this
/// the structured passes (barrier cuts, 2-separation cuts) decide alone.
inline constexpr int kShoreScanBound = 14;

struct TightCut {
    enum class Provenance { BarrierCut, TwoSepCut, BruteForce };

    Cut cut;
    Provenance provenance;
    // BarrierCut payload
    Barrier barrier;
    VertexSet component;
    // TwoSepCut payload
    VertexSet pair;
    VertexSet side;
};

/// Every perfect matching crosses the cut exactly once. Implemented as the
/// pairwise test: the shore is odd and no two disjoint cut edges lie in a
/// common perfect matching.
bool is_tight_cut(const Multigraph& g, const VertexSet& x);

/// Definitional tightness over an explicit list of perfect-matching edge
/// masks (positions in g.edges()).
bool is_tight_cut_pm_masks(const Multigraph& g, const std::vector<uint64_t>& pms,
                           const VertexSet& x);

/// For every barrier B and odd component Q of G - B, the cut around Q.
std::vector<TightCut> barrier_cuts(const Multigraph& g,
                                   int max_vertices = kBarrierEnumerationBound);

/// For every 2-separation {u,v} and grouping of the components into two
/// nonempty sides G1/G2, the cuts around G1+u and G1+v. Tightness is
/// verified at emission.
std::vector<TightCut> two_separation_cuts(const Multigraph& g);

/// A nontrivial tight cut if one exists. Structured passes run first;
/// within the scan bound the exhaustive odd-shore scan is the authority.
std::optional<TightCut> find_nontrivial_tight_cut(const Multigraph& g);

/// 3-connected and bicritical.
bool is_brick(const Multigraph& g);

/// Bipartite, matching covered, and free of nontrivial tight cuts.
bool is_brace(const Multigraph& g);

struct DecompLeaf {
    Multigraph graph;
    bool brick;  // nonbipartite leaf
};

struct AppliedCut {
    VertexSet shore;
    std::vector<EdgeId> cut_edges;
};

struct DecompResult {
    std::vector<DecompLeaf> leaves;
    std::vector<AppliedCut> tree;  // cuts in application (pre-)order
};

/// Repeatedly splits along nontrivial tight cuts until none remain. Seed 0
/// picks the lexicographically least tight shore (within the scan bound);
/// other seeds permute the candidate order. The leaf multiset is unique up
/// to parallel edges regardless of seed.
DecompResult tight_cut_decomposition(const Multigraph& g, uint32_t seed = 0);

/// Bipartite quotient by a nontrivial barrier: every nontrivial odd
/// component of G - B contracts to a single vertex.
struct QuotientH {
    Multigraph graph;
    Barrier barrier_in_g;
    VertexSet barrier;  // in quotient indexing
    VertexSet i_side;   // the non-barrier partite set
    VertexSet u_set;    // members of i_side with degree >= 3 and at most 2
                        // nonremovable incident edges
    std::vector<int> vertex_map;  // G index -> quotient index
    std::vector<std::pair<int, VertexSet>> component_map;  // quotient vertex -> original component
};

QuotientH quotient_H(const Multigraph& g, const Barrier& b);

/// Hub vertex h such that every removable class meets the star of h exactly
/// once; the least such vertex, if any. Requires a brick.
std::optional<VertexId> is_wheel_like(const Multigraph& g);

/// An edge pair whose removal leaves a bipartite matching covered graph.
/// Requires a matching covered nonbipartite input.
std::optional<std::pair<EdgeId, EdgeId>> is_near_bipartite(const Multigraph& g);

}  // namespace mcg

#endif  // MCG_TIGHTCUT_HPP

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

#ifndef MCG_CLASSIFY_HPP
#define MCG_CLASSIFY_HPP

#include <optional>
#include <vector>

#include "mcg/graph.hpp"
#include "mcg/matching.hpp"

namespace mcg {

/// A removable edge, or a removable doubleton {e, f}.
struct RemovableClass {
    enum class Kind { Single, Doubleton };
    Kind kind;
    EdgeId e;
    EdgeId f = -1;  // only for doubletons

    static RemovableClass single(EdgeId e) { return {Kind::Single, e, -1}; }
    static RemovableClass doubleton(EdgeId e, EdgeId f)
    {
        return {Kind::Doubleton, e < f ? e : f, e < f ? f : e};
    }
    friend bool operator==(const RemovableClass&, const RemovableClass&) = default;
};

struct Barrier {
    VertexSet members;
    friend bool operator==(const Barrier&, const Barrier&) = default;
};

/// Witness that an edge of a bipartite matching covered graph is not
/// removable: A1 and B1 with G[A1 + B1] matching covered, u in A1,
/// v outside B1, and uv the only edge from A1 into B minus B1.
struct PSetCert {
    VertexSet a1;
    VertexSet b1;
    EdgeId edge;
};

bool is_matching_covered(const Multigraph& g);

/// G minus the edge at this position of g.edges() is matching covered.
/// Avoids materializing the deleted graph; used by all removability scans.
bool is_mc_without_edge_pos(const Multigraph& g, int pos);
bool is_mc_without_edge_pair_pos(const Multigraph& g, int pos1, int pos2);

bool is_removable_edge(const Multigraph& g, EdgeId e);

/// All removable edges (as Singles) and removable doubletons, exhaustively.
std::vector<RemovableClass> removable_classes(const Multigraph& g);

std::vector<EdgeId> removable_edges(const Multigraph& g);

/// Number of removable edges, stopping once `limit` have been found.
int count_removable_edges_up_to(const Multigraph& g, int limit);

bool is_minimal_mc(const Multigraph& g);

bool is_bicritical(const Multigraph& g);

inline constexpr int kBarrierEnumerationBound = 20;

/// All (or all maximal) nonempty vertex sets B with o(G - B) = |B|.
/// `prune_independent` skips dependent candidates, which is only sound for
/// matching covered hosts; it is off by default so that the independence of
/// barriers stays an observable conclusion rather than an assumption.
std::vector<Barrier> barriers(const Multigraph& g, bool only_maximal,
                              int max_vertices = kBarrierEnumerationBound,
                              bool prune_independent = false);

/// All 2-element vertex sets whose removal leaves only even components.
std::vector<VertexSet> two_separations(const Multigraph& g);

/// Hall-with-surplus test for balanced connected bipartite graphs with at
/// least 4 vertices: |N(S)| >= |S|+1 for every nonempty proper S inside A.
bool hall_surplus_ok(const Multigraph& g);

/// Certificate of nonremovability for an edge of a bipartite matching
/// covered graph, or nullopt when the edge is removable. Deterministic:
/// smallest A1 first.
std::optional<PSetCert> p_set_certificate(const Multigraph& g, EdgeId e);

struct ForestReport {
    bool is_forest;
    std::vector<EdgeId> nonremovable_edges;
    std::vector<EdgeId> witness_cycle;  // nonempty iff not a forest
};

/// Acyclicity of the subgraph formed by all nonremovable edges.
ForestReport nonremovable_subgraph_is_forest(const Multigraph& g);

/// Cycle detection on the subgraph formed by the given edges; a parallel
/// pair counts as a cycle. Returns (is_forest, witness cycle edge ids).
std::pair<bool, std::vector<EdgeId>> forest_check(const Multigraph& g,
                                                  const std::vector<EdgeId>& edge_ids);

}  // namespace mcg

#endif  // MCG_CLASSIFY_HPP

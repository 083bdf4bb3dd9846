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

#ifndef MCG_GRAPH_HPP
#define MCG_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mcg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using VertexId = int;
using EdgeId = int;

// Graphs handled by this library are small (desk scale); vertex sets fit in
// one machine word.
inline constexpr int kMaxVertices = 64;

/// A set of vertex indices, stored as a bitmask.
struct VertexSet {
    uint64_t bits = 0;

    VertexSet() = default;
    explicit VertexSet(uint64_t b) : bits(b) {}
    VertexSet(std::initializer_list<int> vs)
    {
        for (int v : vs) add(v);
    }

    bool contains(int v) const { return (bits >> v) & 1u; }
    void add(int v) { bits |= uint64_t(1) << v; }
    void remove(int v) { bits &= ~(uint64_t(1) << v); }
    int size() const { return __builtin_popcountll(bits); }
    bool empty() const { return bits == 0; }
    bool subset_of(const VertexSet& o) const { return (bits & ~o.bits) == 0; }
    std::vector<int> members() const
    {
        std::vector<int> out;
        for (uint64_t b = bits; b; b &= b - 1) out.push_back(__builtin_ctzll(b));
        return out;
    }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend bool operator<(const VertexSet& a, const VertexSet& b) { return a.bits < b.bits; }
};

struct Edge {
    EdgeId id;
    VertexId u, v;

    VertexId other(VertexId w) const { return w == u ? v : u; }
    bool touches(VertexId w) const { return u == w || v == w; }
};

/// An edge cut ∂(X): the shore X and the edges with exactly one end in X.
struct Cut {
    VertexSet shore;
    std::vector<EdgeId> edge_ids;  // sorted
    bool trivial = false;          // |X| == 1 or |complement| == 1
};

/// Loopless multigraph with stable edge identities.
///
/// Edge ids are unique within a graph and survive derived constructions
/// (deletion, contraction). The edge list is kept sorted by id. Values are
/// immutable after construction and safe to share between threads.
class Multigraph {
public:
    Multigraph() = default;
    Multigraph(int vertex_count, const std::vector<std::pair<int, int>>& endpoint_pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Edge lookup by id; throws for unknown ids.
    const Edge& edge(EdgeId id) const;
    bool has_edge(EdgeId id) const { return find_edge(id) >= 0; }
    int find_edge(EdgeId id) const;  // position in edges(), or -1

    int degree(VertexId v) const { return degree_[v]; }  // counts multiplicity
    int min_degree() const;
    int max_degree() const;

    /// Simple-adjacency bitmask of v's neighbours.
    uint64_t neighbors(VertexId v) const { return adj_[v]; }
    const std::vector<uint64_t>& adjacency() const { return adj_; }

    /// (neighbor, edge id) pairs at v, in edge-id order.
    const std::vector<std::pair<VertexId, EdgeId>>& incident(VertexId v) const
    {
        return inc_[v];
    }

    /// Number of parallel edges joining u and v.
    int multiplicity(VertexId u, VertexId v) const;

    uint64_t full_mask() const
    {
        return n_ == 64 ? ~uint64_t(0) : ((uint64_t(1) << n_) - 1);
    }

    /// Copy with one edge removed; all other edge ids are preserved.
    Multigraph without_edge(EdgeId id) const;
    Multigraph without_edges(const std::vector<EdgeId>& ids) const;

    /// Rebuilds a graph from explicit edge records (ids preserved as given).
    static Multigraph from_edge_records(int vertex_count, std::vector<Edge> edges);

private:
    int n_ = 0;
    std::vector<Edge> edges_;  // sorted by id
    std::vector<int> degree_;
    std::vector<uint64_t> adj_;
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> inc_;

    void index();
};

/// Builds a graph from endpoint pairs; edge ids are assigned in input order.
Multigraph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& endpoint_pairs);

struct Contraction {
    Multigraph graph;
    std::vector<VertexId> vertex_map;  // old index -> new index
    VertexId merged_vertex;            // the fresh highest index
    std::vector<EdgeId> kept_edge_ids; // sorted; ids are unchanged
};

/// Contracts X to a single vertex, dropping the edges inside X. The merged
/// vertex takes the fresh highest index; vertices outside X keep their
/// relative order.
Contraction contract(const Multigraph& g, const VertexSet& x);

Cut edge_cut(const Multigraph& g, const VertexSet& x);

/// Exact vertex connectivity of the underlying simple graph.
int connectivity(const Multigraph& g);

/// 2-coloring (A, B) with vertex 0 in A, if the graph is bipartite.
/// Requires a connected input.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Multigraph& g);

/// 2-colorability, connected or not.
bool is_bipartite(const Multigraph& g);

/// Edges whose two endpoints both have degree exactly k.
std::vector<EdgeId> k_lines(const Multigraph& g, int k);

/// One representative edge per endpoint pair (lowest id survives).
Multigraph underlying_simple(const Multigraph& g);

/// Exact multigraph isomorphism by permutation search with degree pruning.
/// Both graphs must have at most 16 vertices.
bool are_isomorphic(const Multigraph& g, const Multigraph& h);

// Connectivity helpers shared by several modules. A "mask" selects the
// active vertex subset; edges with an endpoint outside the mask are ignored.
bool is_connected(const Multigraph& g);
bool is_connected_masked(const Multigraph& g, uint64_t mask);
std::vector<uint64_t> component_masks(const Multigraph& g, uint64_t mask);
int odd_component_count(const Multigraph& g, uint64_t mask);
std::pair<int, int> component_parity_counts(const Multigraph& g, uint64_t mask);

/// Connectivity >= 3, by scanning vertex pairs; much cheaper than the exact
/// flow computation when only the threshold matters.
bool is_three_connected(const Multigraph& g);

}  // namespace mcg

#endif  // MCG_GRAPH_HPP

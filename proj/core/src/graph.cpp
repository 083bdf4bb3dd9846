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

#include "mcg/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace mcg {

Multigraph::Multigraph(int vertex_count, const std::vector<std::pair<int, int>>& endpoint_pairs)
{
    if (vertex_count < 0) throw Error("vertex_count must be nonnegative");
    if (vertex_count > kMaxVertices)
        throw Error("vertex_count " + std::to_string(vertex_count) + " exceeds limit " +
                    std::to_string(kMaxVertices));
    n_ = vertex_count;
    edges_.reserve(endpoint_pairs.size());
    for (size_t i = 0; i < endpoint_pairs.size(); ++i) {
        auto [u, v] = endpoint_pairs[i];
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw Error("endpoint out of range at pair index " + std::to_string(i));
        if (u == v) throw Error("loop at pair index " + std::to_string(i));
        edges_.push_back(Edge{static_cast<EdgeId>(i), u, v});
    }
    index();
}

void Multigraph::index()
{
    degree_.assign(n_, 0);
    adj_.assign(n_, 0);
    inc_.assign(n_, {});
    for (const Edge& e : edges_) {
        degree_[e.u]++;
        degree_[e.v]++;
        adj_[e.u] |= uint64_t(1) << e.v;
        adj_[e.v] |= uint64_t(1) << e.u;
        inc_[e.u].push_back({e.v, e.id});
        inc_[e.v].push_back({e.u, e.id});
    }
}

const Edge& Multigraph::edge(EdgeId id) const
{
    int pos = find_edge(id);
    if (pos < 0) throw Error("unknown edge id " + std::to_string(id));
    return edges_[pos];
}

int Multigraph::find_edge(EdgeId id) const
{
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& e, EdgeId x) { return e.id < x; });
    if (it == edges_.end() || it->id != id) return -1;
    return static_cast<int>(it - edges_.begin());
}

int Multigraph::min_degree() const
{
    if (n_ == 0) return 0;
    return *std::min_element(degree_.begin(), degree_.end());
}

int Multigraph::max_degree() const
{
    if (n_ == 0) return 0;
    return *std::max_element(degree_.begin(), degree_.end());
}

int Multigraph::multiplicity(VertexId u, VertexId v) const
{
    int c = 0;
    for (const auto& [w, id] : inc_[u])
        if (w == v) c++;
    return c;
}

Multigraph Multigraph::without_edge(EdgeId id) const
{
    int pos = find_edge(id);
    if (pos < 0) throw Error("unknown edge id " + std::to_string(id));
    Multigraph out;
    out.n_ = n_;
    out.edges_.reserve(edges_.size() - 1);
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i)
        if (i != pos) out.edges_.push_back(edges_[i]);
    out.index();
    return out;
}

Multigraph Multigraph::without_edges(const std::vector<EdgeId>& ids) const
{
    std::vector<EdgeId> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    for (EdgeId id : sorted)
        if (find_edge(id) < 0) throw Error("unknown edge id " + std::to_string(id));
    Multigraph out;
    out.n_ = n_;
    for (const Edge& e : edges_)
        if (!std::binary_search(sorted.begin(), sorted.end(), e.id)) out.edges_.push_back(e);
    out.index();
    return out;
}

Multigraph Multigraph::from_edge_records(int vertex_count, std::vector<Edge> edges)
{
    if (vertex_count < 0 || vertex_count > kMaxVertices) throw Error("bad vertex count");
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    for (size_t i = 0; i + 1 < edges.size(); ++i)
        if (edges[i].id == edges[i + 1].id) throw Error("duplicate edge id");
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count)
            throw Error("endpoint out of range");
        if (e.u == e.v) throw Error("loop edge");
    }
    Multigraph out;
    out.n_ = vertex_count;
    out.edges_ = std::move(edges);
    out.index();
    return out;
}

Multigraph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& endpoint_pairs)
{
    return Multigraph(vertex_count, endpoint_pairs);
}

Contraction contract(const Multigraph& g, const VertexSet& x)
{
    int n = g.vertex_count();
    if (x.empty()) throw Error("contract: X must be nonempty");
    uint64_t full = g.full_mask();
    if ((x.bits & ~full) != 0) throw Error("contract: X has out-of-range vertices");
    if (x.bits == full) throw Error("contract: X must be a proper subset");

    Contraction out;
    out.vertex_map.assign(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!x.contains(v)) out.vertex_map[v] = next++;
    out.merged_vertex = next;
    for (int v = 0; v < n; ++v)
        if (x.contains(v)) out.vertex_map[v] = out.merged_vertex;

    std::vector<Edge> kept;
    for (const Edge& e : g.edges()) {
        bool iu = x.contains(e.u), iv = x.contains(e.v);
        if (iu && iv) continue;  // becomes a loop
        kept.push_back(Edge{e.id, out.vertex_map[e.u], out.vertex_map[e.v]});
        out.kept_edge_ids.push_back(e.id);
    }
    out.graph = Multigraph::from_edge_records(next + 1, std::move(kept));
    return out;
}

Cut edge_cut(const Multigraph& g, const VertexSet& x)
{
    uint64_t full = g.full_mask();
    if (x.empty() || (x.bits & ~full) != 0 || x.bits == full)
        throw Error("edge_cut: X must be a nonempty proper subset");
    Cut cut;
    cut.shore = x;
    for (const Edge& e : g.edges())
        if (x.contains(e.u) != x.contains(e.v)) cut.edge_ids.push_back(e.id);
    int k = x.size();
    cut.trivial = (k == 1 || k == g.vertex_count() - 1);
    return cut;
}

namespace {

// Unit-capacity max flow on the vertex-split digraph, used for exact vertex
// connectivity. Node 2v = "in", 2v+1 = "out".
struct FlowNet {
    struct Arc {
        int to, rev;
        int cap;
    };
    std::vector<std::vector<Arc>> arcs;

    explicit FlowNet(int nodes) : arcs(nodes) {}
    void add(int a, int b, int cap)
    {
        arcs[a].push_back({b, static_cast<int>(arcs[b].size()), cap});
        arcs[b].push_back({a, static_cast<int>(arcs[a].size()) - 1, 0});
    }

    int augment_bfs(int s, int t)
    {
        std::vector<std::pair<int, int>> pred(arcs.size(), {-1, -1});
        std::vector<int> queue{s};
        pred[s] = {s, 0};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            if (v == t) break;
            for (size_t ai = 0; ai < arcs[v].size(); ++ai) {
                const Arc& a = arcs[v][ai];
                if (a.cap > 0 && pred[a.to].first < 0) {
                    pred[a.to] = {v, static_cast<int>(ai)};
                    queue.push_back(a.to);
                }
            }
        }
        if (pred[t].first < 0) return 0;
        int v = t;
        while (v != s) {
            auto [pv, pai] = pred[v];
            arcs[pv][pai].cap--;
            arcs[arcs[pv][pai].to][arcs[pv][pai].rev].cap++;
            v = pv;
        }
        return 1;
    }

    int max_flow(int s, int t, int stop_at)
    {
        int f = 0;
        while (f < stop_at && augment_bfs(s, t)) f++;
        return f;
    }
};

int vertex_cut_size(const Multigraph& g, int s, int t)
{
    int n = g.vertex_count();
    FlowNet net(2 * n);
    for (int v = 0; v < n; ++v) net.add(2 * v, 2 * v + 1, (v == s || v == t) ? n : 1);
    for (int v = 0; v < n; ++v) {
        uint64_t nb = g.neighbors(v);
        for (uint64_t b = nb; b; b &= b - 1) {
            int w = __builtin_ctzll(b);
            net.add(2 * v + 1, 2 * w, 1);
        }
    }
    return net.max_flow(2 * s + 1, 2 * t, n);
}

}  // namespace

int connectivity(const Multigraph& g)
{
    int n = g.vertex_count();
    if (n < 2) throw Error("connectivity requires at least 2 vertices");
    int best = n - 1;  // complete graph
    bool any_nonadjacent = false;
    for (int s = 0; s < n && best > 0; ++s)
        for (int t = 0; t < n && best > 0; ++t) {
            if (s == t || ((g.neighbors(s) >> t) & 1)) continue;
            any_nonadjacent = true;
            best = std::min(best, vertex_cut_size(g, s, t));
        }
    if (!any_nonadjacent) return n - 1;
    return best;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Multigraph& g)
{
    int n = g.vertex_count();
    if (n == 0) throw Error("bipartition: empty graph");
    if (!is_connected(g)) throw Error("bipartition requires a connected graph");
    std::vector<int> color(n, -1);
    std::vector<int> queue{0};
    color[0] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        uint64_t nb = g.neighbors(v);
        for (uint64_t b = nb; b; b &= b - 1) {
            int w = __builtin_ctzll(b);
            if (color[w] < 0) {
                color[w] = 1 - color[v];
                queue.push_back(w);
            } else if (color[w] == color[v]) {
                return std::nullopt;
            }
        }
    }
    VertexSet a, bset;
    for (int v = 0; v < n; ++v) (color[v] == 0 ? a : bset).add(v);
    return std::make_pair(a, bset);
}

bool is_bipartite(const Multigraph& g)
{
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> queue{s};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            uint64_t nb = g.neighbors(v);
            for (uint64_t b = nb; b; b &= b - 1) {
                int w = __builtin_ctzll(b);
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<EdgeId> k_lines(const Multigraph& g, int k)
{
    if (k < 1) throw Error("k_lines: k must be >= 1");
    std::vector<EdgeId> out;
    for (const Edge& e : g.edges())
        if (g.degree(e.u) == k && g.degree(e.v) == k) out.push_back(e.id);
    return out;
}

Multigraph underlying_simple(const Multigraph& g)
{
    std::vector<Edge> kept;
    std::vector<uint64_t> seen(g.vertex_count(), 0);
    for (const Edge& e : g.edges()) {  // edge list is id-sorted, lowest id wins
        if ((seen[e.u] >> e.v) & 1) continue;
        seen[e.u] |= uint64_t(1) << e.v;
        seen[e.v] |= uint64_t(1) << e.u;
        kept.push_back(e);
    }
    return Multigraph::from_edge_records(g.vertex_count(), std::move(kept));
}

namespace {

struct IsoState {
    int n;
    std::array<std::array<uint8_t, 16>, 16> mg, mh;
    std::array<int, 16> order;    // g vertices in search order
    std::array<int, 16> map;      // g vertex -> h vertex
    std::array<bool, 16> used;    // h vertex already assigned
    std::array<int, 16> deg_g, deg_h;

    bool dfs(int depth)
    {
        if (depth == n) return true;
        int v = order[depth];
        for (int w = 0; w < n; ++w) {
            if (used[w] || deg_g[v] != deg_h[w]) continue;
            bool ok = true;
            for (int i = 0; i < depth && ok; ++i) {
                int pv = order[i];
                if (mg[v][pv] != mh[w][map[pv]]) ok = false;
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = true;
            if (dfs(depth + 1)) return true;
            used[w] = false;
        }
        return false;
    }
};

}  // namespace

bool are_isomorphic(const Multigraph& g, const Multigraph& h)
{
    if (g.vertex_count() > 16 || h.vertex_count() > 16)
        throw Error("are_isomorphic supports at most 16 vertices");
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    int n = g.vertex_count();
    if (n == 0) return true;

    IsoState st{};
    st.n = n;
    for (auto& row : st.mg) row.fill(0);
    for (auto& row : st.mh) row.fill(0);
    for (const Edge& e : g.edges()) {
        st.mg[e.u][e.v]++;
        st.mg[e.v][e.u]++;
    }
    for (const Edge& e : h.edges()) {
        st.mh[e.u][e.v]++;
        st.mh[e.v][e.u]++;
    }
    std::vector<int> dg, dh;
    for (int v = 0; v < n; ++v) {
        st.deg_g[v] = g.degree(v);
        st.deg_h[v] = h.degree(v);
        dg.push_back(g.degree(v));
        dh.push_back(h.degree(v));
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;

    // Search rare-degree vertices first; keeps the branching factor down.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> freq(17, 0);
    for (int v = 0; v < n; ++v) freq[st.deg_g[v]]++;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (freq[st.deg_g[a]] != freq[st.deg_g[b]]) return freq[st.deg_g[a]] < freq[st.deg_g[b]];
        if (st.deg_g[a] != st.deg_g[b]) return st.deg_g[a] > st.deg_g[b];
        return a < b;
    });
    for (int i = 0; i < n; ++i) st.order[i] = order[i];
    st.used.fill(false);
    return st.dfs(0);
}

bool is_connected(const Multigraph& g)
{
    return is_connected_masked(g, g.full_mask());
}

namespace {

// expands a seed to its whole component; every vertex row is OR'd once
inline uint64_t spread(const std::vector<uint64_t>& rows, uint64_t mask, uint64_t seed)
{
    uint64_t comp = seed, frontier = seed;
    while (frontier) {
        uint64_t next = 0;
        do {
            next |= rows[__builtin_ctzll(frontier)];
            frontier &= frontier - 1;
        } while (frontier);
        frontier = next & mask & ~comp;
        comp |= frontier;
    }
    return comp;
}

}  // namespace

bool is_connected_masked(const Multigraph& g, uint64_t mask)
{
    if (mask == 0) return false;
    return spread(g.adjacency(), mask, mask & (~mask + 1)) == mask;
}

std::vector<uint64_t> component_masks(const Multigraph& g, uint64_t mask)
{
    std::vector<uint64_t> out;
    uint64_t rest = mask;
    while (rest) {
        uint64_t comp = spread(g.adjacency(), mask, rest & (~rest + 1));
        out.push_back(comp);
        rest &= ~comp;
    }
    return out;
}

int odd_component_count(const Multigraph& g, uint64_t mask)
{
    int odd = 0;
    uint64_t rest = mask;
    while (rest) {
        uint64_t comp = spread(g.adjacency(), mask, rest & (~rest + 1));
        if (__builtin_popcountll(comp) & 1) odd++;
        rest &= ~comp;
    }
    return odd;
}

std::pair<int, int> component_parity_counts(const Multigraph& g, uint64_t mask)
{
    int odd = 0, even = 0;
    uint64_t rest = mask;
    while (rest) {
        uint64_t comp = spread(g.adjacency(), mask, rest & (~rest + 1));
        (__builtin_popcountll(comp) & 1 ? odd : even)++;
        rest &= ~comp;
    }
    return {odd, even};
}

bool is_three_connected(const Multigraph& g)
{
    int n = g.vertex_count();
    if (n < 4) return false;
    uint64_t full = g.full_mask();
    if (!is_connected_masked(g, full)) return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            uint64_t rest = full & ~(uint64_t(1) << u) & ~(uint64_t(1) << v);
            if (rest && !is_connected_masked(g, rest)) return false;
        }
    return true;
}

}  // namespace mcg

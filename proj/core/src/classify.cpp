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

#include "mcg/classify.hpp"

#include <algorithm>
#include <array>

namespace mcg {

namespace {

bool rows_connected(int n, const uint64_t* rows)
{
    if (n == 0) return false;
    uint64_t all = (n == 64) ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
    uint64_t reach = 1;
    while (true) {
        uint64_t grow = reach;
        for (uint64_t b = reach; b; b &= b - 1) grow |= rows[__builtin_ctzll(b)];
        grow &= all;
        if (grow == reach) break;
        reach = grow;
    }
    return reach == all;
}

// Adjacency rows of g minus up to two edges (positions into g.edges()).
void rows_without(const Multigraph& g, int pos1, int pos2, uint64_t* rows)
{
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v) rows[v] = g.neighbors(v);
    const Edge& e1 = g.edges()[pos1];
    int mult1 = g.multiplicity(e1.u, e1.v);
    int drop1 = 1;
    if (pos2 >= 0) {
        const Edge& e2 = g.edges()[pos2];
        bool same_pair = (e2.u == e1.u && e2.v == e1.v) || (e2.u == e1.v && e2.v == e1.u);
        if (same_pair) {
            drop1 = 2;
        } else if (g.multiplicity(e2.u, e2.v) == 1) {
            rows[e2.u] &= ~(uint64_t(1) << e2.v);
            rows[e2.v] &= ~(uint64_t(1) << e2.u);
        }
    }
    if (mult1 == drop1) {
        rows[e1.u] &= ~(uint64_t(1) << e1.v);
        rows[e1.v] &= ~(uint64_t(1) << e1.u);
    }
}

// Matching coveredness over explicit adjacency rows; `skip1`/`skip2` mark
// deleted edge positions.
bool mc_over_rows(const Multigraph& g, const uint64_t* rows, int skip1, int skip2)
{
    int n = g.vertex_count();
    if (n < 2 || (n & 1)) return false;
    if (!rows_connected(n, rows)) return false;
    MatchKit kit(n, rows);
    if (!kit.has_pm_full()) return false;
    std::array<uint64_t, kMaxVertices> seen{};
    const auto& edges = g.edges();
    for (int pos = 0; pos < static_cast<int>(edges.size()); ++pos) {
        if (pos == skip1 || pos == skip2) continue;
        const Edge& e = edges[pos];
        if (!((rows[e.u] >> e.v) & 1)) continue;  // pair fully deleted
        if ((seen[e.u] >> e.v) & 1) continue;
        seen[e.u] |= uint64_t(1) << e.v;
        seen[e.v] |= uint64_t(1) << e.u;
        if (!kit.allowed_pair(e.u, e.v)) return false;
    }
    return true;
}

}  // namespace

bool is_matching_covered(const Multigraph& g)
{
    int n = g.vertex_count();
    if (n < 2 || (n & 1) || !is_connected(g)) return false;
    MatchKit kit(g);
    if (!kit.has_pm_full()) return false;
    std::array<uint64_t, kMaxVertices> seen{};
    for (const Edge& e : g.edges()) {
        if ((seen[e.u] >> e.v) & 1) continue;
        seen[e.u] |= uint64_t(1) << e.v;
        seen[e.v] |= uint64_t(1) << e.u;
        if (!kit.allowed_pair(e.u, e.v)) return false;
    }
    return true;
}

bool is_mc_without_edge_pos(const Multigraph& g, int pos)
{
    std::array<uint64_t, kMaxVertices> rows;
    rows_without(g, pos, -1, rows.data());
    return mc_over_rows(g, rows.data(), pos, -1);
}

bool is_mc_without_edge_pair_pos(const Multigraph& g, int pos1, int pos2)
{
    std::array<uint64_t, kMaxVertices> rows;
    rows_without(g, pos1, pos2, rows.data());
    return mc_over_rows(g, rows.data(), pos1, pos2);
}

bool is_removable_edge(const Multigraph& g, EdgeId e)
{
    int pos = g.find_edge(e);
    if (pos < 0) throw Error("unknown edge id " + std::to_string(e));
    return is_mc_without_edge_pos(g, pos);
}

std::vector<EdgeId> removable_edges(const Multigraph& g)
{
    std::vector<EdgeId> out;
    for (int pos = 0; pos < g.edge_count(); ++pos)
        if (is_mc_without_edge_pos(g, pos)) out.push_back(g.edges()[pos].id);
    return out;
}

int count_removable_edges_up_to(const Multigraph& g, int limit)
{
    int found = 0;
    for (int pos = 0; pos < g.edge_count() && found < limit; ++pos)
        if (is_mc_without_edge_pos(g, pos)) found++;
    return found;
}

std::vector<RemovableClass> removable_classes(const Multigraph& g)
{
    std::vector<RemovableClass> out;
    int m = g.edge_count();
    std::vector<bool> removable(m, false);
    for (int pos = 0; pos < m; ++pos) {
        removable[pos] = is_mc_without_edge_pos(g, pos);
        if (removable[pos]) out.push_back(RemovableClass::single(g.edges()[pos].id));
    }
    for (int i = 0; i < m; ++i) {
        if (removable[i]) continue;
        for (int j = i + 1; j < m; ++j) {
            if (removable[j]) continue;
            if (is_mc_without_edge_pair_pos(g, i, j))
                out.push_back(RemovableClass::doubleton(g.edges()[i].id, g.edges()[j].id));
        }
    }
    return out;
}

bool is_minimal_mc(const Multigraph& g)
{
    if (!is_matching_covered(g)) return false;
    return count_removable_edges_up_to(g, 1) == 0;
}

bool is_bicritical(const Multigraph& g)
{
    MatchKit kit(g);
    return kit.bicritical();
}

std::vector<Barrier> barriers(const Multigraph& g, bool only_maximal, int max_vertices,
                              bool prune_independent)
{
    int n = g.vertex_count();
    if (n > max_vertices || n > 62)
        throw Error("barriers: graph exceeds the " + std::to_string(std::min(max_vertices, 62)) +
                    "-vertex enumeration bound");
    if (!has_perfect_matching(g)) throw Error("barriers requires a graph with a perfect matching");

    std::vector<Barrier> all;
    uint64_t full = g.full_mask();
    uint64_t limit = uint64_t(1) << n;
    for (uint64_t mask = 1; mask < limit; ++mask) {
        int k = __builtin_popcountll(mask);
        if (2 * k > n) continue;
        if (prune_independent) {
            bool dependent = false;
            for (uint64_t b = mask; b && !dependent; b &= b - 1)
                if (g.neighbors(__builtin_ctzll(b)) & mask) dependent = true;
            if (dependent) continue;
        }
        if (odd_component_count(g, full & ~mask) == k) all.push_back(Barrier{VertexSet(mask)});
    }
    if (!only_maximal) return all;
    std::vector<Barrier> maximal;
    for (const Barrier& b : all) {
        bool contained = false;
        for (const Barrier& c : all)
            if (c.members.bits != b.members.bits &&
                (b.members.bits & ~c.members.bits) == 0) {
                contained = true;
                break;
            }
        if (!contained) maximal.push_back(b);
    }
    return maximal;
}

std::vector<VertexSet> two_separations(const Multigraph& g)
{
    std::vector<VertexSet> out;
    int n = g.vertex_count();
    uint64_t full = g.full_mask();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            uint64_t rest = full & ~(uint64_t(1) << u) & ~(uint64_t(1) << v);
            if (rest == 0) continue;
            auto [odd, even] = component_parity_counts(g, rest);
            if (odd == 0 && even >= 2)
                out.push_back(VertexSet((uint64_t(1) << u) | (uint64_t(1) << v)));
        }
    return out;
}

bool hall_surplus_ok(const Multigraph& g)
{
    int n = g.vertex_count();
    if (n < 4) throw Error("hall_surplus_ok requires at least 4 vertices");
    auto parts = bipartition(g);  // throws when disconnected
    if (!parts) throw Error("hall_surplus_ok requires a bipartite graph");
    auto [a, b] = *parts;
    if (a.size() != b.size()) throw Error("hall_surplus_ok requires balanced sides");
    std::vector<int> av = a.members();
    int k = static_cast<int>(av.size());
    if (k > 20) throw Error("hall_surplus_ok: side too large to enumerate");
    for (uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
        uint64_t nbhd = 0;
        int size = 0;
        for (uint32_t m = mask; m; m &= m - 1) {
            nbhd |= g.neighbors(av[__builtin_ctz(m)]);
            size++;
        }
        if (__builtin_popcountll(nbhd) < size + 1) return false;
    }
    return true;
}

std::optional<PSetCert> p_set_certificate(const Multigraph& g, EdgeId e)
{
    int pos = g.find_edge(e);
    if (pos < 0) throw Error("unknown edge id " + std::to_string(e));
    if (g.edge_count() < 2) throw Error("p_set_certificate requires at least 2 edges");
    auto parts = bipartition(g);
    if (!parts) throw Error("p_set_certificate requires a bipartite graph");
    VertexSet a = parts->first, b = parts->second;
    VertexId u = g.edges()[pos].u, v = g.edges()[pos].v;
    if (b.contains(u)) std::swap(u, v);  // u on the A side

    std::vector<int> av = a.members();
    int k = static_cast<int>(av.size());
    if (k > 16) throw Error("p_set_certificate: side too large to enumerate");

    std::vector<uint32_t> masks;
    for (uint32_t mask = 1; mask < (1u << k); ++mask) masks.push_back(mask);
    std::stable_sort(masks.begin(), masks.end(), [](uint32_t x, uint32_t y) {
        int px = __builtin_popcount(x), py = __builtin_popcount(y);
        return px != py ? px < py : x < y;
    });

    for (uint32_t mask : masks) {
        uint64_t a1 = 0;
        uint64_t nbhd = 0;
        for (uint32_t m = mask; m; m &= m - 1) {
            int x = av[__builtin_ctz(m)];
            a1 |= uint64_t(1) << x;
            nbhd |= g.neighbors(x);
        }
        if (!((a1 >> u) & 1)) continue;
        if (a1 == a.bits) continue;  // A1 must be proper
        uint64_t b1 = nbhd & ~(uint64_t(1) << v);
        if (b1 == 0 || b1 == b.bits) continue;  // B1 nonempty proper
        if (__builtin_popcountll(b1) != __builtin_popcountll(a1)) continue;

        // exactly one edge from A1 into B minus B1, namely uv
        int crossing = 0;
        bool is_uv = false;
        for (uint64_t m = a1; m && crossing < 2; m &= m - 1) {
            int x = __builtin_ctzll(m);
            for (const auto& [w, id] : g.incident(x)) {
                if ((b1 >> w) & 1) continue;
                crossing++;
                is_uv = (x == u && w == v);
                if (crossing >= 2) break;
            }
        }
        if (crossing != 1 || !is_uv) continue;

        // induced subgraph on A1 + B1 must be matching covered
        uint64_t sub = a1 | b1;
        std::vector<int> relabel(g.vertex_count(), -1);
        int idx = 0;
        for (uint64_t m = sub; m; m &= m - 1) relabel[__builtin_ctzll(m)] = idx++;
        std::vector<std::pair<int, int>> pairs;
        for (const Edge& ed : g.edges())
            if (((sub >> ed.u) & 1) && ((sub >> ed.v) & 1))
                pairs.push_back({relabel[ed.u], relabel[ed.v]});
        if (!is_matching_covered(Multigraph(idx, pairs))) continue;

        return PSetCert{VertexSet(a1), VertexSet(b1), e};
    }
    return std::nullopt;
}

std::pair<bool, std::vector<EdgeId>> forest_check(const Multigraph& g,
                                                  const std::vector<EdgeId>& edge_ids)
{
    int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, EdgeId>>> adj(n);
    for (EdgeId id : edge_ids) {
        const Edge& e = g.edge(id);
        adj[e.u].push_back({e.v, id});
        adj[e.v].push_back({e.u, id});
    }
    std::vector<int> state(n, 0);
    std::vector<std::pair<int, EdgeId>> via(n, {-1, -1});  // parent vertex + edge
    for (int s = 0; s < n; ++s) {
        if (state[s]) continue;
        std::vector<int> stack{s};
        state[s] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (const auto& [y, id] : adj[x]) {
                if (id == via[x].second) continue;  // the edge we arrived by
                if (state[y]) {
                    // cycle: walk both endpoints up to their common ancestor
                    std::vector<EdgeId> cyc{id};
                    std::vector<int> px, py;
                    for (int t = x; t != -1; t = via[t].first) px.push_back(t);
                    for (int t = y; t != -1; t = via[t].first) py.push_back(t);
                    int i = static_cast<int>(px.size()) - 1, j = static_cast<int>(py.size()) - 1;
                    while (i > 0 && j > 0 && px[i - 1] == py[j - 1]) i--, j--;
                    for (int t = 0; t < i; ++t) cyc.push_back(via[px[t]].second);
                    for (int t = 0; t < j; ++t) cyc.push_back(via[py[t]].second);
                    std::sort(cyc.begin(), cyc.end());
                    return {false, cyc};
                }
                state[y] = 1;
                via[y] = {x, id};
                stack.push_back(y);
            }
        }
    }
    return {true, {}};
}

ForestReport nonremovable_subgraph_is_forest(const Multigraph& g)
{
    ForestReport rep;
    for (int pos = 0; pos < g.edge_count(); ++pos)
        if (!is_mc_without_edge_pos(g, pos)) rep.nonremovable_edges.push_back(g.edges()[pos].id);
    auto [ok, cycle] = forest_check(g, rep.nonremovable_edges);
    rep.is_forest = ok;
    rep.witness_cycle = cycle;
    return rep;
}

}  // namespace mcg

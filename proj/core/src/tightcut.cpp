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

#include "mcg/tightcut.hpp"

#include <algorithm>
#include <random>

namespace mcg {

namespace {

uint64_t cut_edge_positions(const Multigraph& g, uint64_t shore)
{
    uint64_t mask = 0;
    const auto& edges = g.edges();
    for (int pos = 0; pos < static_cast<int>(edges.size()); ++pos) {
        bool iu = (shore >> edges[pos].u) & 1;
        bool iv = (shore >> edges[pos].v) & 1;
        if (iu != iv) mask |= uint64_t(1) << pos;
    }
    return mask;
}

bool rows_bipartite(int n, const uint64_t* rows)
{
    std::vector<int8_t> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> queue{s};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            uint64_t nb = rows[v];
            while (nb) {
                int w = __builtin_ctzll(nb);
                nb &= nb - 1;
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

bool graph_is_bipartite(const Multigraph& g)
{
    return rows_bipartite(g.vertex_count(), g.adjacency().data());
}

}  // namespace

bool is_tight_cut(const Multigraph& g, const VertexSet& x)
{
    Cut cut = edge_cut(g, x);  // validates the shore
    if (!(x.size() & 1)) return false;
    MatchKit kit(g);
    int k = static_cast<int>(cut.edge_ids.size());
    for (int i = 0; i < k; ++i) {
        const Edge& a = g.edge(cut.edge_ids[i]);
        for (int j = i + 1; j < k; ++j) {
            const Edge& b = g.edge(cut.edge_ids[j]);
            if (a.touches(b.u) || a.touches(b.v)) continue;
            uint64_t mask = g.full_mask();
            mask &= ~(uint64_t(1) << a.u) & ~(uint64_t(1) << a.v);
            mask &= ~(uint64_t(1) << b.u) & ~(uint64_t(1) << b.v);
            if (kit.has_pm(mask)) return false;
        }
    }
    return true;
}

bool is_tight_cut_pm_masks(const Multigraph& g, const std::vector<uint64_t>& pms,
                           const VertexSet& x)
{
    uint64_t cut = cut_edge_positions(g, x.bits);
    for (uint64_t pm : pms)
        if (__builtin_popcountll(pm & cut) != 1) return false;
    return !pms.empty();
}

std::vector<TightCut> barrier_cuts(const Multigraph& g, int max_vertices)
{
    std::vector<TightCut> out;
    for (const Barrier& b : barriers(g, /*only_maximal=*/false, max_vertices)) {
        for (uint64_t comp : component_masks(g, g.full_mask() & ~b.members.bits)) {
            if (!(__builtin_popcountll(comp) & 1)) continue;
            TightCut tc;
            tc.cut = edge_cut(g, VertexSet(comp));
            tc.provenance = TightCut::Provenance::BarrierCut;
            tc.barrier = b;
            tc.component = VertexSet(comp);
            out.push_back(std::move(tc));
        }
    }
    return out;
}

std::vector<TightCut> two_separation_cuts(const Multigraph& g)
{
    std::vector<TightCut> out;
    for (const VertexSet& sep : two_separations(g)) {
        auto comps = component_masks(g, g.full_mask() & ~sep.bits);
        auto mem = sep.members();
        int u = mem[0], v = mem[1];
        int k = static_cast<int>(comps.size());
        if (k > 24) throw Error("two_separation_cuts: too many components to enumerate");
        // every nonempty proper grouping of the components forms a side G1
        for (uint32_t pick = 1; pick + 1 < (1u << k); ++pick) {
            uint64_t side = 0;
            for (int c = 0; c < k; ++c)
                if ((pick >> c) & 1) side |= comps[c];
            for (int s : {u, v}) {
                VertexSet shore(side | (uint64_t(1) << s));
                if (!is_tight_cut(g, shore))
                    throw Error("2-separation cut failed the tightness check");
                TightCut tc;
                tc.cut = edge_cut(g, shore);
                if (tc.cut.trivial) throw Error("2-separation cut is trivial");
                tc.provenance = TightCut::Provenance::TwoSepCut;
                tc.pair = sep;
                tc.side = VertexSet(side);
                out.push_back(std::move(tc));
            }
        }
    }
    return out;
}

namespace {

bool pm_enumerable(const Multigraph& g)
{
    return g.vertex_count() <= kDefaultEnumerationBound && g.edge_count() <= 64;
}

// Nontrivial tight shores found by the exhaustive scan, in ascending
// bitmask order. Only shores containing vertex 0 are scanned (a cut equals
// the cut of the complementary shore); both orientations are emitted.
std::vector<uint64_t> scan_tight_shores(const Multigraph& g, const std::vector<uint64_t>& pms)
{
    std::vector<uint64_t> shores;
    int n = g.vertex_count();
    uint64_t full = g.full_mask();
    uint64_t limit = uint64_t(1) << (n - 1);
    for (uint64_t half = 0; half < limit; ++half) {
        uint64_t shore = (half << 1) | 1;  // contains vertex 0
        int k = __builtin_popcountll(shore);
        if (!(k & 1) || k < 3 || n - k < 3) continue;
        if (is_tight_cut_pm_masks(g, pms, VertexSet(shore))) {
            shores.push_back(shore);
            shores.push_back(full & ~shore);
        }
    }
    std::sort(shores.begin(), shores.end());
    return shores;
}

std::optional<TightCut> pick_cut(const Multigraph& g, uint32_t seed)
{
    int n = g.vertex_count();
    if (n <= kShoreScanBound && pm_enumerable(g)) {
        auto pms = enumerate_pm_masks(g);
        std::vector<uint64_t> shores = scan_tight_shores(g, pms);
        if (shores.empty()) return std::nullopt;
        uint64_t choice = shores.front();
        if (seed != 0) {
            std::mt19937 rng(seed);
            choice = shores[rng() % shores.size()];
        }
        TightCut tc;
        tc.cut = edge_cut(g, VertexSet(choice));
        tc.provenance = TightCut::Provenance::BruteForce;
        return tc;
    }

    // beyond the scan bound: structured candidates only
    std::vector<TightCut> candidates;
    for (TightCut& tc : barrier_cuts(g))
        if (!tc.cut.trivial && is_tight_cut(g, tc.cut.shore)) candidates.push_back(std::move(tc));
    for (TightCut& tc : two_separation_cuts(g)) candidates.push_back(std::move(tc));
    if (candidates.empty()) return std::nullopt;
    std::sort(candidates.begin(), candidates.end(), [](const TightCut& a, const TightCut& b) {
        return a.cut.shore.bits < b.cut.shore.bits;
    });
    size_t pick = 0;
    if (seed != 0) {
        std::mt19937 rng(seed);
        pick = rng() % candidates.size();
    }
    return candidates[pick];
}

}  // namespace

std::optional<TightCut> find_nontrivial_tight_cut(const Multigraph& g)
{
    bool can_enum = pm_enumerable(g);
    std::vector<uint64_t> pms;
    if (can_enum) pms = enumerate_pm_masks(g);
    auto tight = [&](const VertexSet& shore) {
        return can_enum ? is_tight_cut_pm_masks(g, pms, shore) : is_tight_cut(g, shore);
    };

    // Accelerating structured passes: maximal-barrier cuts, then
    // 2-separation cuts.
    for (const Barrier& b : barriers(g, /*only_maximal=*/true)) {
        for (uint64_t comp : component_masks(g, g.full_mask() & ~b.members.bits)) {
            int k = __builtin_popcountll(comp);
            if (!(k & 1) || k < 3 || g.vertex_count() - k < 3) continue;
            VertexSet shore(comp);
            if (!tight(shore)) continue;
            TightCut tc;
            tc.cut = edge_cut(g, shore);
            tc.provenance = TightCut::Provenance::BarrierCut;
            tc.barrier = b;
            tc.component = shore;
            return tc;
        }
    }
    {
        auto cuts = two_separation_cuts(g);
        if (!cuts.empty()) return cuts.front();
    }
    // The scan is the authority within its bound.
    if (g.vertex_count() <= kShoreScanBound && can_enum) {
        std::vector<uint64_t> shores = scan_tight_shores(g, pms);
        if (!shores.empty()) {
            TightCut tc;
            tc.cut = edge_cut(g, VertexSet(shores.front()));
            tc.provenance = TightCut::Provenance::BruteForce;
            return tc;
        }
    }
    return std::nullopt;
}

bool is_brick(const Multigraph& g)
{
    if (g.vertex_count() < 4) return false;
    if (!is_bicritical(g)) return false;
    return is_three_connected(g);
}

bool is_brace(const Multigraph& g)
{
    if (!is_matching_covered(g)) return false;
    if (!graph_is_bipartite(g)) return false;
    return !find_nontrivial_tight_cut(g).has_value();
}

namespace {

void decompose_rec(const Multigraph& g, std::mt19937& rng, bool seeded, DecompResult& out)
{
    uint32_t sub_seed = seeded ? (rng() | 1u) : 0;
    std::optional<TightCut> cut = pick_cut(g, sub_seed);
    if (!cut) {
        bool bip = is_connected(g) && graph_is_bipartite(g);
        out.leaves.push_back(DecompLeaf{g, !bip});
        return;
    }
    out.tree.push_back(AppliedCut{cut->cut.shore, cut->cut.edge_ids});
    VertexSet shore = cut->cut.shore;
    VertexSet other(g.full_mask() & ~shore.bits);
    decompose_rec(contract(g, other).graph, rng, seeded, out);
    decompose_rec(contract(g, shore).graph, rng, seeded, out);
}

}  // namespace

DecompResult tight_cut_decomposition(const Multigraph& g, uint32_t seed)
{
    if (!is_matching_covered(g))
        throw Error("tight_cut_decomposition requires a matching covered graph");
    DecompResult out;
    std::mt19937 rng(seed);
    decompose_rec(g, rng, seed != 0, out);
    return out;
}

QuotientH quotient_H(const Multigraph& g, const Barrier& b)
{
    if (b.members.size() < 2) throw Error("quotient_H requires a nontrivial barrier");
    if (!is_matching_covered(g)) throw Error("quotient_H requires a matching covered graph");
    if (graph_is_bipartite(g)) throw Error("quotient_H requires a nonbipartite graph");
    uint64_t rest = g.full_mask() & ~b.members.bits;
    auto comps = component_masks(g, rest);
    int odd = 0;
    for (uint64_t c : comps) {
        if (!(__builtin_popcountll(c) & 1)) throw Error("quotient_H: even component beside a barrier");
        odd++;
    }
    if (odd != b.members.size()) throw Error("quotient_H: the vertex set is not a barrier");

    QuotientH out;
    out.barrier_in_g = b;
    out.vertex_map.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) out.vertex_map[v] = v;

    Multigraph cur = g;
    std::sort(comps.begin(), comps.end());
    for (uint64_t comp : comps) {
        if (__builtin_popcountll(comp) < 3) continue;
        uint64_t mapped = 0;
        for (uint64_t m = comp; m; m &= m - 1)
            mapped |= uint64_t(1) << out.vertex_map[__builtin_ctzll(m)];
        Contraction c = contract(cur, VertexSet(mapped));
        cur = c.graph;
        for (int v = 0; v < g.vertex_count(); ++v)
            out.vertex_map[v] = c.vertex_map[out.vertex_map[v]];
        out.component_map.push_back({-1, VertexSet(comp)});
        // fix up earlier component vertices and record this one afterwards
        for (auto& [plc, orig] : out.component_map)
            plc = out.vertex_map[__builtin_ctzll(orig.bits)];
    }

    if (!is_matching_covered(cur)) throw Error("quotient_H: quotient is not matching covered");
    auto parts = bipartition(cur);
    if (!parts) throw Error("quotient_H: quotient is not bipartite");
    uint64_t bimg = 0;
    for (uint64_t m = b.members.bits; m; m &= m - 1)
        bimg |= uint64_t(1) << out.vertex_map[__builtin_ctzll(m)];
    uint64_t aset = parts->first.bits, bset = parts->second.bits;
    if (bimg == aset)
        out.i_side = VertexSet(bset);
    else if (bimg == bset)
        out.i_side = VertexSet(aset);
    else
        throw Error("quotient_H: barrier is not a partite set of the quotient");
    out.barrier = VertexSet(bimg);

    for (uint64_t m = out.i_side.bits; m; m &= m - 1) {
        int u = __builtin_ctzll(m);
        if (cur.degree(u) < 3) continue;
        int nonremovable = 0;
        for (const auto& [w, id] : cur.incident(u))
            if (!is_removable_edge(cur, id)) nonremovable++;
        if (nonremovable <= 2) out.u_set.add(u);
    }
    out.graph = std::move(cur);
    return out;
}

std::optional<VertexId> is_wheel_like(const Multigraph& g)
{
    if (!is_brick(g)) throw Error("is_wheel_like requires a brick");
    auto classes = removable_classes(g);
    for (int h = 0; h < g.vertex_count(); ++h) {
        bool ok = true;
        for (const RemovableClass& rc : classes) {
            int meets = g.edge(rc.e).touches(h) ? 1 : 0;
            if (rc.kind == RemovableClass::Kind::Doubleton && g.edge(rc.f).touches(h)) meets++;
            if (meets != 1) {
                ok = false;
                break;
            }
        }
        if (ok) return h;
    }
    return std::nullopt;
}

std::optional<std::pair<EdgeId, EdgeId>> is_near_bipartite(const Multigraph& g)
{
    if (graph_is_bipartite(g)) throw Error("is_near_bipartite requires a nonbipartite graph");
    int m = g.edge_count();
    std::array<uint64_t, kMaxVertices> rows;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            for (int v = 0; v < g.vertex_count(); ++v) rows[v] = g.neighbors(v);
            const Edge& a = g.edges()[i];
            const Edge& b = g.edges()[j];
            bool same_pair = (a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u);
            if (same_pair) {
                if (g.multiplicity(a.u, a.v) == 2) {
                    rows[a.u] &= ~(uint64_t(1) << a.v);
                    rows[a.v] &= ~(uint64_t(1) << a.u);
                }
            } else {
                if (g.multiplicity(a.u, a.v) == 1) {
                    rows[a.u] &= ~(uint64_t(1) << a.v);
                    rows[a.v] &= ~(uint64_t(1) << a.u);
                }
                if (g.multiplicity(b.u, b.v) == 1) {
                    rows[b.u] &= ~(uint64_t(1) << b.v);
                    rows[b.v] &= ~(uint64_t(1) << b.u);
                }
            }
            if (!rows_bipartite(g.vertex_count(), rows.data())) continue;
            if (!is_mc_without_edge_pair_pos(g, i, j)) continue;
            return std::make_pair(a.id, b.id);
        }
    return std::nullopt;
}

}  // namespace mcg

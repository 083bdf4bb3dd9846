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

#include "mcg/families.hpp"

#include <algorithm>

namespace mcg {

std::optional<Family> family_from_string(const std::string& name)
{
    if (name == "gn") return Family::Gn;
    if (name == "hn") return Family::Hn;
    if (name == "c4plus") return Family::C4Plus;
    if (name == "k4") return Family::K4;
    if (name == "prism") return Family::Prism;
    if (name == "r8") return Family::R8;
    if (name == "wheel") return Family::Wheel;
    if (name == "cycle") return Family::Cycle;
    if (name == "k33") return Family::K33;
    if (name == "k2") return Family::K2;
    return std::nullopt;
}

const char* family_name(Family f)
{
    switch (f) {
        case Family::Gn: return "gn";
        case Family::Hn: return "hn";
        case Family::C4Plus: return "c4plus";
        case Family::K4: return "k4";
        case Family::Prism: return "prism";
        case Family::R8: return "r8";
        case Family::Wheel: return "wheel";
        case Family::Cycle: return "cycle";
        case Family::K33: return "k33";
        case Family::K2: return "k2";
    }
    return "?";
}

bool family_takes_n(Family f)
{
    return f == Family::Gn || f == Family::Hn || f == Family::Wheel || f == Family::Cycle;
}

namespace {

Multigraph gen_gn(int n)
{
    // two paths u_1..u_n (0..n-1) and v_1..v_n (n..2n-1), rungs u_1v_1 and
    // u_nv_n, and crossing edges u_i v_{i+1}, v_i u_{i+1}
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    for (int i = 0; i + 1 < n; ++i) e.push_back({n + i, n + i + 1});
    e.push_back({0, n});
    e.push_back({n - 1, 2 * n - 1});
    for (int i = 0; i + 1 < n; ++i) {
        e.push_back({i, n + i + 1});
        e.push_back({n + i, i + 1});
    }
    return build_graph(2 * n, e);
}

Multigraph gen_c4plus()
{
    // 4-cycle w a a' a'' with the two edges at w doubled; d(w) = 4
    return build_graph(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 0}});
}

// The exceptional cubic 8-vertex near-bipartite brick whose removable edges
// are pairwise adjacent. It is the unique such graph of its order, so the
// constant is pinned by exhaustive search over all connected 8-vertex graphs
// (see the family validation tests).
constexpr int kR8Edges[][2] = {
    {0, 3}, {0, 5}, {0, 6}, {1, 4}, {1, 5}, {1, 7}, {2, 4}, {2, 6}, {2, 7}, {3, 5}, {3, 7}, {4, 6},
};

Multigraph gen_r8()
{
    std::vector<std::pair<int, int>> e;
    for (auto& p : kR8Edges) e.push_back({p[0], p[1]});
    return build_graph(8, e);
}

}  // namespace

Multigraph gen_family(Family f, std::optional<int> n)
{
    if (family_takes_n(f)) {
        if (!n) throw Error(std::string(family_name(f)) + " requires n");
    } else if (n) {
        throw Error(std::string(family_name(f)) + " does not take n");
    }
    switch (f) {
        case Family::Gn:
            if (*n < 3) throw Error("gn requires n >= 3");
            return gen_gn(*n);
        case Family::Hn: {
            if (*n < 3) throw Error("hn requires n >= 3");
            return splice_default(gen_gn(*n), 1, gen_c4plus(), 0);
        }
        case Family::C4Plus:
            return gen_c4plus();
        case Family::K4:
            return build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        case Family::Prism: {
            // complement of the 6-cycle 0-1-2-3-4-5
            std::vector<std::pair<int, int>> e;
            for (int i = 0; i < 6; ++i)
                for (int j = i + 1; j < 6; ++j) {
                    int d = j - i;
                    if (d != 1 && d != 5) e.push_back({i, j});
                }
            return build_graph(6, e);
        }
        case Family::R8:
            return gen_r8();
        case Family::Wheel: {
            if (*n < 3 || (*n % 2) == 0) throw Error("wheel requires odd rim length n >= 3");
            std::vector<std::pair<int, int>> e;
            for (int i = 0; i < *n; ++i) e.push_back({i, (i + 1) % *n});
            for (int i = 0; i < *n; ++i) e.push_back({i, *n});
            return build_graph(*n + 1, e);
        }
        case Family::Cycle: {
            if (*n < 3) throw Error("cycle requires n >= 3");
            std::vector<std::pair<int, int>> e;
            for (int i = 0; i < *n; ++i) e.push_back({i, (i + 1) % *n});
            return build_graph(*n, e);
        }
        case Family::K33: {
            std::vector<std::pair<int, int>> e;
            for (int i = 0; i < 3; ++i)
                for (int j = 3; j < 6; ++j) e.push_back({i, j});
            return build_graph(6, e);
        }
        case Family::K2:
            return build_graph(2, {{0, 1}});
    }
    throw Error("unknown family");
}

SpliceMap default_splice_map(const Multigraph& g, VertexId u, const Multigraph& h, VertexId v)
{
    auto star = [](const Multigraph& gr, VertexId x) {
        std::vector<std::pair<VertexId, EdgeId>> s = gr.incident(x);
        std::sort(s.begin(), s.end());
        return s;
    };
    auto su = star(g, u);
    auto sv = star(h, v);
    if (su.size() != sv.size()) throw Error("splice: degree mismatch");
    SpliceMap m;
    m.u = u;
    m.v = v;
    for (size_t i = 0; i < su.size(); ++i) m.pairing.push_back({sv[i].second, su[i].second});
    return m;
}

Multigraph splice(const Multigraph& g, const Multigraph& h, const SpliceMap& m)
{
    int ng = g.vertex_count(), nh = h.vertex_count();
    if (m.u < 0 || m.u >= ng || m.v < 0 || m.v >= nh) throw Error("splice: vertex out of range");
    if (g.degree(m.u) != h.degree(m.v)) throw Error("splice: degree mismatch");
    if (static_cast<int>(m.pairing.size()) != g.degree(m.u))
        throw Error("splice: pairing is not a bijection between the stars");

    std::vector<EdgeId> star_g, star_h;
    for (const auto& [w, id] : g.incident(m.u)) star_g.push_back(id);
    for (const auto& [w, id] : h.incident(m.v)) star_h.push_back(id);
    std::sort(star_g.begin(), star_g.end());
    std::sort(star_h.begin(), star_h.end());
    std::vector<EdgeId> seen_g, seen_h;
    for (const auto& [eh, eg] : m.pairing) {
        seen_h.push_back(eh);
        seen_g.push_back(eg);
    }
    std::sort(seen_g.begin(), seen_g.end());
    std::sort(seen_h.begin(), seen_h.end());
    if (seen_g != star_g || seen_h != star_h)
        throw Error("splice: pairing is not a bijection between the stars");

    // G - u first, then H - v
    std::vector<int> gmap(ng, -1), hmap(nh, -1);
    int next = 0;
    for (int x = 0; x < ng; ++x)
        if (x != m.u) gmap[x] = next++;
    for (int x = 0; x < nh; ++x)
        if (x != m.v) hmap[x] = next++;

    std::vector<std::pair<int, int>> pairs;
    for (const Edge& e : g.edges())
        if (!e.touches(m.u)) pairs.push_back({gmap[e.u], gmap[e.v]});
    for (const Edge& e : h.edges())
        if (!e.touches(m.v)) pairs.push_back({hmap[e.u], hmap[e.v]});
    for (const auto& [eh, eg] : m.pairing) {
        const Edge& a = h.edge(eh);
        const Edge& b = g.edge(eg);
        if (!a.touches(m.v) || !b.touches(m.u)) throw Error("splice: pairing edge not in star");
        pairs.push_back({hmap[a.other(m.v)], gmap[b.other(m.u)]});
    }
    return build_graph(ng + nh - 2, pairs);
}

Multigraph splice_default(const Multigraph& g, VertexId u, const Multigraph& h, VertexId v)
{
    return splice(g, h, default_splice_map(g, u, h, v));
}

}  // namespace mcg

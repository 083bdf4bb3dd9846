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

#include "mcg/canon.hpp"

#include <algorithm>
#include <vector>

namespace mcg::canon {

namespace {

// Canonical labelling by individualization-refinement. The search minimises
// the packed upper-triangle adjacency string over the leaves of the
// refinement tree; discovered automorphisms prune sibling branches that fix
// the individualized prefix.

struct Search {
    const SimpleGraph* g;
    int n;
    Cert best;
    bool have_best = false;
    std::array<int, kMaxN> first_leaf{};  // label -> vertex of the first leaf
    bool have_first = false;
    Cert first_cert = 0;
    std::vector<std::array<int, kMaxN>> autos;  // found automorphisms (vertex -> vertex)

    // Equitable refinement: repeatedly split colour classes by the multiset
    // of neighbour colours until stable. Colour values are renumbered in an
    // isomorphism-invariant order at every round.
    void refine(std::array<uint8_t, kMaxN>& color) const
    {
        // Key = (own colour, 4-bit histogram of neighbour colours). Colours
        // stay below 16, so the histogram digits never collide, and keeping
        // the own colour separate guarantees the partition only ever splits.
        std::array<std::pair<uint8_t, uint64_t>, kMaxN> key{};
        std::array<int, kMaxN> order{};
        // Individualization doubles colour values; compact them below 16 so
        // the histogram shifts stay in range.
        {
            std::array<uint8_t, 64> remap{};
            std::array<bool, 64> seen{};
            for (int v = 0; v < n; ++v) seen[color[v]] = true;
            uint8_t c = 0;
            for (int i = 0; i < 64; ++i)
                if (seen[i]) remap[i] = c++;
            for (int v = 0; v < n; ++v) color[v] = remap[color[v]];
        }
        while (true) {
            for (int v = 0; v < n; ++v) {
                uint64_t hist = 0;
                uint16_t nb = g->adj[v];
                while (nb) {
                    int w = __builtin_ctz(nb);
                    nb &= nb - 1;
                    hist += uint64_t(1) << (4 * color[w]);
                }
                key[v] = {color[v], hist};
            }
            for (int v = 0; v < n; ++v) order[v] = v;
            std::sort(order.begin(), order.begin() + n,
                      [&](int a, int b) { return key[a] < key[b]; });
            std::array<uint8_t, kMaxN> next{};
            int c = 0;
            for (int i = 0; i < n; ++i) {
                if (i > 0 && key[order[i]] != key[order[i - 1]]) c++;
                next[order[i]] = static_cast<uint8_t>(c);
            }
            if (next == color) return;
            color = next;
        }
    }

    Cert leaf_cert(const std::array<uint8_t, kMaxN>& color,
                   std::array<int, kMaxN>& vertex_of_label) const
    {
        for (int v = 0; v < n; ++v) vertex_of_label[color[v]] = v;
        Cert bits = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (g->has(vertex_of_label[i], vertex_of_label[j]))
                    bits |= Cert(1) << (j * (j - 1) / 2 + i);
        return bits;
    }

    void dfs(std::array<uint8_t, kMaxN> color, const std::array<int, kMaxN>& path, int depth)
    {
        refine(color);
        // locate the first colour class with >= 2 members
        std::array<int, kMaxN> count{};
        for (int v = 0; v < n; ++v) count[color[v]]++;
        int cell_color = -1;
        for (int c = 0; c < n; ++c)
            if (count[c] >= 2) {
                cell_color = c;
                break;
            }
        if (cell_color < 0) {
            std::array<int, kMaxN> vertex_of_label{};
            Cert bits = leaf_cert(color, vertex_of_label);
            if (!have_first) {
                have_first = true;
                first_leaf = vertex_of_label;
                first_cert = bits;
            } else if (bits == first_cert) {
                std::array<int, kMaxN> gamma{};
                for (int i = 0; i < n; ++i) gamma[first_leaf[i]] = vertex_of_label[i];
                autos.push_back(gamma);
            }
            if (!have_best || bits < best) {
                best = bits;
                have_best = true;
            }
            return;
        }

        std::array<int, kMaxN> tried{};
        int tried_count = 0;
        for (int v = 0; v < n; ++v) {
            if (color[v] != cell_color) continue;
            bool skip = false;
            for (const auto& gamma : autos) {
                bool fixes_path = true;
                for (int d = 0; d < depth && fixes_path; ++d)
                    if (gamma[path[d]] != path[d]) fixes_path = false;
                if (!fixes_path) continue;
                for (int t = 0; t < tried_count && !skip; ++t)
                    if (gamma[v] == tried[t] || gamma[tried[t]] == v) skip = true;
                if (skip) break;
            }
            if (skip) continue;
            tried[tried_count++] = v;
            // individualize v ahead of its classmates
            std::array<uint8_t, kMaxN> child{};
            for (int u = 0; u < n; ++u)
                child[u] = static_cast<uint8_t>(2 * color[u] + (u == v ? 0 : 1));
            std::array<int, kMaxN> next_path = path;
            next_path[depth] = v;
            dfs(child, next_path, depth + 1);
        }
    }
};

}  // namespace

Cert certificate(const SimpleGraph& g)
{
    if (g.n == 0) return 0;
    Search s;
    s.g = &g;
    s.n = g.n;
    std::array<uint8_t, kMaxN> color{};
    std::array<int, kMaxN> path{};
    s.dfs(color, path, 0);
    return (Cert(g.n) << 120) | s.best;
}

SimpleGraph cert_graph(Cert c)
{
    SimpleGraph g;
    g.n = static_cast<int>(c >> 120);
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i)
            if ((c >> (j * (j - 1) / 2 + i)) & 1) g.add(i, j);
    return g;
}

SimpleGraph from_multigraph_simple(const Multigraph& g)
{
    if (g.vertex_count() > kMaxN) throw Error("graph too large for canonical labelling");
    SimpleGraph out;
    out.n = g.vertex_count();
    for (const Edge& e : g.edges())
        out.adj[e.u] |= uint16_t(1) << e.v, out.adj[e.v] |= uint16_t(1) << e.u;
    return out;
}

Multigraph to_multigraph(const SimpleGraph& g)
{
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.has(i, j)) pairs.push_back({i, j});
    return build_graph(g.n, pairs);
}

}  // namespace mcg::canon

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

#include "mcg/enumerate.hpp"

#include <algorithm>
#include <array>

namespace mcg {

namespace {

using canon::Cert;
using canon::SimpleGraph;

bool sg_connected(const SimpleGraph& g)
{
    if (g.n == 0) return false;
    uint16_t all = static_cast<uint16_t>((1u << g.n) - 1);
    uint16_t reach = 1;
    while (true) {
        uint16_t grow = reach;
        for (uint16_t b = reach; b; b &= b - 1) grow |= g.adj[__builtin_ctz(b)];
        grow &= all;
        if (grow == reach) break;
        reach = grow;
    }
    return reach == all;
}

bool sg_bipartite(const SimpleGraph& g)
{
    std::array<int8_t, canon::kMaxN> color;
    color.fill(-1);
    for (int s = 0; s < g.n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::array<int, canon::kMaxN> queue;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            int v = queue[head++];
            uint16_t nb = g.adj[v];
            while (nb) {
                int w = __builtin_ctz(nb);
                nb &= nb - 1;
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    queue[tail++] = w;
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Packed invariant of the degree multiset of g minus one vertex, built from
// a degree histogram. Degrees fit in a nibble for n <= 16.
uint64_t packed_degseq_minus(const std::array<uint8_t, 16>& hist_base,
                             const std::array<uint8_t, canon::kMaxN>& deg, const SimpleGraph& g,
                             int v)
{
    std::array<uint8_t, 16> hist = hist_base;
    hist[deg[v]]--;
    uint16_t nb = g.adj[v];
    while (nb) {
        int w = __builtin_ctz(nb);
        nb &= nb - 1;
        hist[deg[w]]--;
        hist[deg[w] - 1]++;
    }
    uint64_t packed = 0;
    int shift = 0;
    for (int d = 0; d < 16; ++d)
        for (int c = 0; c < hist[d]; ++c) {
            packed |= uint64_t(d) << shift;
            shift += 4;
        }
    return packed;
}

uint64_t packed_neighbor_degrees(const std::array<uint8_t, canon::kMaxN>& deg,
                                 const SimpleGraph& g, int v)
{
    std::array<uint8_t, 16> hist{};
    uint16_t nb = g.adj[v];
    while (nb) {
        int w = __builtin_ctz(nb);
        nb &= nb - 1;
        hist[deg[w]]++;
    }
    uint64_t packed = 0;
    int shift = 0;
    for (int d = 0; d < 16; ++d)
        for (int c = 0; c < hist[d]; ++c) {
            packed |= uint64_t(d) << shift;
            shift += 4;
        }
    return packed;
}

SimpleGraph sg_delete_vertex(const SimpleGraph& g, int v)
{
    SimpleGraph out;
    out.n = g.n - 1;
    for (int u = 0; u < g.n; ++u) {
        if (u == v) continue;
        uint16_t row = g.adj[u];
        uint16_t low = row & ((1u << v) - 1);
        uint16_t high = (row >> (v + 1)) << v;
        out.adj[u < v ? u : u - 1] = static_cast<uint16_t>(low | high);
    }
    return out;
}

}  // namespace

GraphEnumerator::GraphEnumerator(bool bipartite_universe) : bipartite_(bipartite_universe)
{
    levels_.resize(2);
    level_certs_.resize(2);
    SimpleGraph k1;
    k1.n = 1;
    levels_[1] = {k1};
    level_certs_[1] = {canon::certificate(k1)};
}

void GraphEnumerator::ensure_level(int n)
{
    while (static_cast<int>(levels_.size()) <= n) {
        int next = static_cast<int>(levels_.size());
        std::vector<SimpleGraph> graphs;
        std::vector<Cert> certs;
        visit_level(next, false, [&](const SimpleGraph& g) { graphs.push_back(g); });
        certs.reserve(graphs.size());
        for (const SimpleGraph& g : graphs) certs.push_back(canon::certificate(g));
        levels_.push_back(std::move(graphs));
        level_certs_.push_back(std::move(certs));
    }
}

void GraphEnumerator::visit_level(int n, bool connected_only,
                                  const std::function<void(const canon::SimpleGraph&)>& fn)
{
    if (n == 1) {
        SimpleGraph k1;
        k1.n = 1;
        if (!connected_only || sg_connected(k1)) fn(k1);
        return;
    }
    ensure_level(n - 1);
    const auto& parents = levels_[n - 1];
    const auto& parent_certs = level_certs_[n - 1];
    const int x = n - 1;  // index of the added vertex
    const uint32_t subsets = 1u << (n - 1);

    std::vector<Cert> emitted;  // per-parent dedupe of accepted children
    std::array<int, canon::kMaxN> tie{};

    for (size_t pi = 0; pi < parents.size(); ++pi) {
        const SimpleGraph& p = parents[pi];
        const Cert cert_p = parent_certs[pi];
        std::array<uint8_t, canon::kMaxN> pdeg{};
        for (int v = 0; v < p.n; ++v) pdeg[v] = static_cast<uint8_t>(p.degree(v));
        emitted.clear();

        for (uint32_t s = 0; s < subsets; ++s) {
            SimpleGraph h = p;
            h.n = n;
            h.adj[x] = static_cast<uint16_t>(s);
            for (uint32_t b = s; b; b &= b - 1) h.adj[__builtin_ctz(b)] |= uint16_t(1) << x;

            if (bipartite_ && !sg_bipartite(h)) continue;

            std::array<uint8_t, canon::kMaxN> deg{};
            std::array<uint8_t, 16> hist{};
            for (int v = 0; v < p.n; ++v) {
                deg[v] = static_cast<uint8_t>(pdeg[v] + ((s >> v) & 1));
                hist[deg[v]]++;
            }
            deg[x] = static_cast<uint8_t>(__builtin_popcount(s));
            hist[deg[x]]++;

            // Stage 1: the added vertex must minimize the cheap invariant
            // (degree sequence after deletion, then neighbour degrees).
            uint64_t kx = packed_degseq_minus(hist, deg, h, x);
            bool reject = false;
            int tie_count = 0;
            for (int v = 0; v < x; ++v) {
                uint64_t kv = packed_degseq_minus(hist, deg, h, v);
                if (kv < kx) {
                    reject = true;
                    break;
                }
                if (kv == kx) tie[tie_count++] = v;
            }
            if (reject) continue;
            if (tie_count > 0) {
                uint64_t nx = packed_neighbor_degrees(deg, h, x);
                int kept = 0;
                for (int t = 0; t < tie_count && !reject; ++t) {
                    uint64_t nv = packed_neighbor_degrees(deg, h, tie[t]);
                    if (nv < nx) reject = true;
                    else if (nv == nx) tie[kept++] = tie[t];
                }
                if (reject) continue;
                tie_count = kept;
            }
            // Stage 2: break remaining ties with full certificates. The
            // deletion at x reproduces the parent, whose certificate we know.
            for (int t = 0; t < tie_count && !reject; ++t) {
                Cert cv = canon::certificate(sg_delete_vertex(h, tie[t]));
                if (cv < cert_p) reject = true;
            }
            if (reject) continue;
            if (connected_only && !sg_connected(h)) continue;

            Cert ch = canon::certificate(h);
            if (std::find(emitted.begin(), emitted.end(), ch) != emitted.end()) continue;
            emitted.push_back(ch);
            fn(h);
        }
    }
}

void GraphEnumerator::for_each(int n, GraphClass cls,
                               const std::function<void(const canon::SimpleGraph&)>& fn)
{
    if (n < 1 || n > canon::kMaxN) throw Error("enumeration supports 1..16 vertices");
    if ((cls == GraphClass::Bipartite || cls == GraphClass::BipartiteConnected) != bipartite_)
        throw Error("graph class does not match the enumerator universe");
    bool connected_only = (cls == GraphClass::Connected || cls == GraphClass::BipartiteConnected);
    visit_level(n, connected_only, fn);
}

uint64_t GraphEnumerator::count(int n, GraphClass cls)
{
    uint64_t c = 0;
    for_each(n, cls, [&](const SimpleGraph&) { c++; });
    return c;
}

void for_each_graph(int n, GraphClass cls,
                    const std::function<void(const canon::SimpleGraph&)>& fn)
{
    bool bip = (cls == GraphClass::Bipartite || cls == GraphClass::BipartiteConnected);
    GraphEnumerator e(bip);
    e.for_each(n, cls, fn);
}

}  // namespace mcg

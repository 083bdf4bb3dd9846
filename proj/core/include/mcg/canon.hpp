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

#ifndef MCG_CANON_HPP
#define MCG_CANON_HPP

#include <array>
#include <cstdint>
#include <string>

#include "mcg/graph.hpp"

namespace mcg::canon {

inline constexpr int kMaxN = 16;

/// Compact simple graph on at most 16 vertices; row i holds the neighbour
/// bits of vertex i.
struct SimpleGraph {
    int n = 0;
    std::array<uint16_t, kMaxN> adj{};

    bool has(int i, int j) const { return (adj[i] >> j) & 1; }
    void add(int i, int j)
    {
        adj[i] |= uint16_t(1) << j;
        adj[j] |= uint16_t(1) << i;
    }
    int degree(int v) const { return __builtin_popcount(adj[v]); }
    int edge_count() const
    {
        int s = 0;
        for (int v = 0; v < n; ++v) s += degree(v);
        return s / 2;
    }
};

/// Canonical certificate: 5 bits of order plus the upper-triangle adjacency
/// bits of the canonically labelled graph. Equal certificates = isomorphic.
using Cert = unsigned __int128;

Cert certificate(const SimpleGraph& g);

/// Rebuilds the canonically labelled graph encoded by a certificate.
SimpleGraph cert_graph(Cert c);

SimpleGraph from_multigraph_simple(const Multigraph& g);
Multigraph to_multigraph(const SimpleGraph& g);

}  // namespace mcg::canon

#endif  // MCG_CANON_HPP

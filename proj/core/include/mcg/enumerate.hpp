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

#ifndef MCG_ENUMERATE_HPP
#define MCG_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "mcg/canon.hpp"

namespace mcg {

enum class GraphClass {
    All,
    Connected,
    Bipartite,
    BipartiteConnected,
};

/// Isomorph-free exhaustive generation of small simple graphs by canonical
/// deletion: a graph is emitted by exactly one (parent, added-vertex)
/// augmentation, decided by an isomorphism-invariant choice of deletion
/// vertex. Bipartite classes restrict the whole construction universe to
/// bipartite graphs, which keeps 11- and 12-vertex runs cheap.
class GraphEnumerator {
public:
    explicit GraphEnumerator(bool bipartite_universe);

    /// Visits one representative per isomorphism class with exactly n
    /// vertices. The order is deterministic.
    void for_each(int n, GraphClass cls, const std::function<void(const canon::SimpleGraph&)>& fn);

    uint64_t count(int n, GraphClass cls);

private:
    bool bipartite_;
    // universe graphs (including disconnected ones) per vertex count
    std::vector<std::vector<canon::SimpleGraph>> levels_;
    std::vector<std::vector<canon::Cert>> level_certs_;

    void ensure_level(int n);
    void visit_level(int n, bool connected_only,
                     const std::function<void(const canon::SimpleGraph&)>& fn);
};

/// One-shot convenience wrapper around GraphEnumerator.
void for_each_graph(int n, GraphClass cls,
                    const std::function<void(const canon::SimpleGraph&)>& fn);

}  // namespace mcg

#endif  // MCG_ENUMERATE_HPP

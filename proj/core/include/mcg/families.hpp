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

#ifndef MCG_FAMILIES_HPP
#define MCG_FAMILIES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcg/graph.hpp"

namespace mcg {

enum class Family { Gn, Hn, C4Plus, K4, Prism, R8, Wheel, Cycle, K33, K2 };

std::optional<Family> family_from_string(const std::string& name);
const char* family_name(Family f);
bool family_takes_n(Family f);

/// Named graphs. `gn` is the double ladder with crossed rungs (2n vertices,
/// 4n-2 edges); `hn` is gn spliced with the doubled 4-cycle c4plus at the
/// second top vertex. In `gn`, vertex i is u_{i+1} and vertex n+i is
/// v_{i+1}; in `hn` the last three vertices are the c4plus remnant a, a',
/// a''. Wheel takes the odd rim length; cycle any length >= 3.
Multigraph gen_family(Family f, std::optional<int> n = std::nullopt);

/// Splice description: u in G and v in H have equal degree, and `pairing`
/// is a bijection from the star of v in H to the star of u in G.
struct SpliceMap {
    VertexId u;
    VertexId v;
    std::vector<std::pair<EdgeId, EdgeId>> pairing;  // (edge at v in H, edge at u in G)
};

/// Deterministic bijection: both stars sorted by opposite endpoint, then id.
SpliceMap default_splice_map(const Multigraph& g, VertexId u, const Multigraph& h, VertexId v);

/// Glues G - u to H - v: each edge at v joins its remaining endpoint to the
/// remaining endpoint of its partner edge at u. Vertices of G - u keep
/// their relative order, followed by those of H - v.
Multigraph splice(const Multigraph& g, const Multigraph& h, const SpliceMap& m);

Multigraph splice_default(const Multigraph& g, VertexId u, const Multigraph& h, VertexId v);

}  // namespace mcg

#endif  // MCG_FAMILIES_HPP

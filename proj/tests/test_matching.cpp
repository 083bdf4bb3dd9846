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

#include <doctest.h>

#include <random>
#include <set>

#include "mcg/enumerate.hpp"
#include "mcg/families.hpp"
#include "mcg/matching.hpp"

using namespace mcg;

namespace {

// Permanent-style expansion: counts perfect matchings as vertex pairings
// weighted by edge multiplicity. Independent of the backtracking order used
// by the library enumerator.
long pm_count_oracle(const Multigraph& g, uint64_t uncovered)
{
    if (!uncovered) return 1;
    int v = 63 - __builtin_clzll(uncovered);  // highest uncovered vertex
    uint64_t rest = uncovered & ~(uint64_t(1) << v);
    long total = 0;
    for (uint64_t b = g.neighbors(v) & rest; b; b &= b - 1) {
        int w = __builtin_ctzll(b);
        total += g.multiplicity(v, w) * pm_count_oracle(g, rest & ~(uint64_t(1) << w));
    }
    return total;
}

long pm_count_oracle(const Multigraph& g)
{
    if (g.vertex_count() % 2) return 0;
    return pm_count_oracle(g, g.full_mask());
}

int max_tutte_deficiency(const Multigraph& g)
{
    int n = g.vertex_count();
    int best = -n - 1;
    for (uint64_t s = 0; s < (uint64_t(1) << n); ++s)
        best = std::max(best,
                        odd_component_count(g, g.full_mask() & ~s) - __builtin_popcountll(s));
    return best;
}

Multigraph p4()
{
    return build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
}

}  // namespace

TEST_SUITE_BEGIN("matching");

TEST_CASE("max_matching sizes")
{
    CHECK(max_matching(gen_family(Family::Cycle, 6)).size() == 3);
    CHECK(max_matching(p4()).size() == 2);
    CHECK(max_matching(gen_family(Family::Gn, 5)).size() == 5);
    CHECK(max_matching(build_graph(3, {})).size() == 0);
    // the result is a matching and uses lowest parallel ids
    Multigraph par = build_graph(2, {{0, 1}, {0, 1}});
    Matching m = max_matching(par);
    REQUIRE(m.size() == 1);
    CHECK(m.edge_ids[0] == 0);
}

TEST_CASE("has_perfect_matching")
{
    CHECK(has_perfect_matching(gen_family(Family::K4)));
    CHECK_FALSE(has_perfect_matching(gen_family(Family::Cycle, 5)));  // odd order
    CHECK(has_perfect_matching(gen_family(Family::Wheel, 5)));
    CHECK(has_perfect_matching(gen_family(Family::Prism)));
    CHECK_FALSE(has_perfect_matching(p4().without_edge(0)));  // isolates an end vertex
    CHECK_FALSE(has_perfect_matching(build_graph(4, {{0, 1}, {0, 2}, {0, 3}})));
}

TEST_CASE("odd_components")
{
    Multigraph c6 = gen_family(Family::Cycle, 6);
    CHECK(odd_components(c6, VertexSet{0, 2, 4}) == 3);
    CHECK(odd_components(gen_family(Family::K4), VertexSet{1}) == 1);
    Multigraph c8 = gen_family(Family::Cycle, 8);
    CHECK(odd_components(c8, VertexSet{0, 4}) == 2);
    CHECK(odd_components(c8, VertexSet{}) == 0);
}

TEST_CASE("enumerate_perfect_matchings")
{
    CHECK(enumerate_perfect_matchings(gen_family(Family::Cycle, 6)).size() == 2);
    CHECK(enumerate_perfect_matchings(gen_family(Family::K4)).size() == 3);
    auto prism_pms = enumerate_perfect_matchings(gen_family(Family::Prism));
    CHECK(prism_pms.size() == 4);
    CHECK(pm_count_oracle(gen_family(Family::Prism)) == 4);
    // parallel edges produce distinct matchings
    Multigraph par = build_graph(2, {{0, 1}, {0, 1}});
    CHECK(enumerate_perfect_matchings(par).size() == 2);
    CHECK(pm_count_oracle(par) == 2);
    CHECK_THROWS_AS(enumerate_perfect_matchings(build_graph(18, {})), Error);
    CHECK(enumerate_perfect_matchings(build_graph(18, {}), 18).empty());
}

TEST_CASE("enumeration agrees with the permanent-style oracle")
{
    std::mt19937 rng(31);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 2 + 2 * static_cast<int>(rng() % 4);
        std::vector<std::pair<int, int>> pairs;
        int m = static_cast<int>(rng() % 14);
        for (int i = 0; i < m; ++i) {
            int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
            if (u != v) pairs.push_back({u, v});
        }
        Multigraph g = build_graph(n, pairs);
        CHECK(static_cast<long>(enumerate_perfect_matchings(g).size()) == pm_count_oracle(g));
    }
}

TEST_CASE("is_allowed")
{
    Multigraph c4 = gen_family(Family::Cycle, 4);
    for (const Edge& e : c4.edges()) CHECK(is_allowed(c4, e.id));
    CHECK_FALSE(is_allowed(p4(), 1));  // middle edge strands the ends
    CHECK(is_allowed(p4(), 0));
    CHECK_THROWS_AS(is_allowed(c4, 99), Error);

    // u2u3 stops being allowed once u1v1 is deleted
    Multigraph g5 = gen_family(Family::Gn, 5);
    EdgeId u1v1 = -1, u2u3 = -1;
    for (const Edge& e : g5.edges()) {
        if ((e.u == 0 && e.v == 5) || (e.u == 5 && e.v == 0)) u1v1 = e.id;
        if ((e.u == 1 && e.v == 2) || (e.u == 2 && e.v == 1)) u2u3 = e.id;
    }
    REQUIRE(u1v1 >= 0);
    REQUIRE(u2u3 >= 0);
    CHECK(is_allowed(g5, u2u3));
    CHECK_FALSE(is_allowed(g5.without_edge(u1v1), u2u3));
}

TEST_CASE("parallel copies agree on allowedness")
{
    std::mt19937 rng(47);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + 2 * static_cast<int>(rng() % 3);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < 10; ++i) {
            int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
            if (u != v) pairs.push_back({u, v});
        }
        Multigraph g = build_graph(n, pairs);
        for (const Edge& a : g.edges())
            for (const Edge& b : g.edges())
                if (a.id < b.id && ((a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u)))
                    CHECK(is_allowed(g, a.id) == is_allowed(g, b.id));
    }
}

TEST_CASE("is_factor_critical")
{
    CHECK(is_factor_critical(gen_family(Family::Cycle, 3)));
    CHECK(is_factor_critical(gen_family(Family::Cycle, 5)));
    CHECK_FALSE(is_factor_critical(gen_family(Family::Cycle, 4)));  // bipartite
    CHECK_FALSE(is_factor_critical(gen_family(Family::K2)));        // below 3 vertices
    CHECK_FALSE(is_factor_critical(gen_family(Family::Wheel, 5)));  // even order
    Multigraph k5 = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
                                    {2, 3}, {2, 4}, {3, 4}});
    CHECK(is_factor_critical(k5));
}

TEST_CASE("is_n_extendable")
{
    Multigraph c6 = gen_family(Family::Cycle, 6);
    CHECK(is_n_extendable(c6, 1));
    CHECK_FALSE(is_n_extendable(c6, 2));
    CHECK(is_n_extendable(gen_family(Family::K33), 2));
    CHECK(is_n_extendable(gen_family(Family::K4), 1));
    CHECK_THROWS_AS(is_n_extendable(c6, 0), Error);
    CHECK_THROWS_AS(is_n_extendable(build_graph(4, {{0, 1}, {2, 3}}), 1), Error);
}

TEST_CASE("Tutte and Berge identities on small connected graphs")
{
    GraphEnumerator gen(false);
    for (int n = 1; n <= 6; ++n) {
        gen.for_each(n, GraphClass::Connected, [&](const canon::SimpleGraph& sg) {
            Multigraph g = canon::to_multigraph(sg);
            int maxdef = max_tutte_deficiency(g);
            CHECK(has_perfect_matching(g) == (maxdef <= 0));
            CHECK(2 * max_matching(g).size() == g.vertex_count() - maxdef);
        });
    }
}

TEST_SUITE_END();

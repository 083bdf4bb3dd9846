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

#include <algorithm>
#include <map>

#include "mcg/canon.hpp"
#include "mcg/enumerate.hpp"
#include "mcg/families.hpp"
#include "mcg/matching.hpp"
#include "mcg/tightcut.hpp"

using namespace mcg;

TEST_SUITE_BEGIN("tightcut");

TEST_CASE("is_tight_cut basics")
{
    Multigraph c6 = gen_family(Family::Cycle, 6);
    CHECK(is_tight_cut(c6, VertexSet{1, 2, 3}));
    CHECK_FALSE(is_tight_cut(c6, VertexSet{1, 2}));     // even shore
    CHECK_FALSE(is_tight_cut(c6, VertexSet{1, 3, 5}));  // color class is not tight

    Multigraph k4 = gen_family(Family::K4);
    for (int v = 0; v < 4; ++v) CHECK(is_tight_cut(k4, VertexSet{v}));

    Multigraph h5 = gen_family(Family::Hn, 5);
    int n = h5.vertex_count();
    CHECK(is_tight_cut(h5, VertexSet{n - 3, n - 2, n - 1}));
}

TEST_CASE("barrier cuts")
{
    Multigraph c8 = gen_family(Family::Cycle, 8);
    auto cuts = barrier_cuts(c8);
    bool found = false;
    for (const TightCut& tc : cuts) {
        if (tc.barrier.members == VertexSet{0, 4} && !tc.cut.trivial) {
            found = true;
            CHECK(is_tight_cut(c8, tc.cut.shore));
        }
    }
    CHECK(found);

    for (const TightCut& tc : barrier_cuts(gen_family(Family::K4))) CHECK(tc.cut.trivial);

    Multigraph c6 = gen_family(Family::Cycle, 6);
    int trivial_from_color_class = 0;
    for (const TightCut& tc : barrier_cuts(c6))
        if (tc.barrier.members == VertexSet{0, 2, 4}) {
            CHECK(tc.cut.trivial);
            trivial_from_color_class++;
        }
    CHECK(trivial_from_color_class == 3);
}

TEST_CASE("two-separation cuts")
{
    Multigraph c8 = gen_family(Family::Cycle, 8);
    auto cuts = two_separation_cuts(c8);
    CHECK_FALSE(cuts.empty());
    for (const TightCut& tc : cuts) {
        CHECK_FALSE(tc.cut.trivial);
        CHECK(is_tight_cut(c8, tc.cut.shore));
    }
    // pair {0,3} splits the cycle into sides {1,2} and {4..7}; the cuts
    // around side+endpoint have odd shores and are tight
    bool has_expected = false;
    for (const TightCut& tc : cuts)
        if (tc.pair == VertexSet{0, 3} &&
            (tc.cut.shore == VertexSet{0, 1, 2} || tc.cut.shore == VertexSet{1, 2, 3}))
            has_expected = true;
    CHECK(has_expected);

    CHECK(two_separation_cuts(gen_family(Family::K4)).empty());

    Multigraph g5 = gen_family(Family::Gn, 5);
    bool isolates_first_block = false;
    for (const TightCut& tc : two_separation_cuts(g5))
        if (tc.pair == VertexSet{1, 6} &&
            (tc.cut.shore == VertexSet{0, 5, 1} || tc.cut.shore == VertexSet{0, 5, 6}))
            isolates_first_block = true;
    CHECK(isolates_first_block);
}

TEST_CASE("find_nontrivial_tight_cut")
{
    auto c6cut = find_nontrivial_tight_cut(gen_family(Family::Cycle, 6));
    REQUIRE(c6cut.has_value());
    CHECK_FALSE(c6cut->cut.trivial);
    CHECK(is_tight_cut(gen_family(Family::Cycle, 6), c6cut->cut.shore));

    CHECK_FALSE(find_nontrivial_tight_cut(gen_family(Family::K4)).has_value());
    CHECK_FALSE(find_nontrivial_tight_cut(gen_family(Family::Prism)).has_value());
    CHECK(find_nontrivial_tight_cut(gen_family(Family::Gn, 5)).has_value());
}

TEST_CASE("brick and brace recognition")
{
    CHECK(is_brick(gen_family(Family::K4)));
    CHECK(is_brick(gen_family(Family::Prism)));
    CHECK(is_brick(gen_family(Family::Wheel, 5)));
    CHECK_FALSE(is_brick(gen_family(Family::Cycle, 6)));
    CHECK_FALSE(is_brick(gen_family(Family::K33)));

    CHECK(is_brace(gen_family(Family::Cycle, 4)));
    CHECK(is_brace(gen_family(Family::K33)));
    CHECK_FALSE(is_brace(gen_family(Family::Cycle, 6)));
    CHECK_FALSE(is_brace(gen_family(Family::K4)));
}

TEST_CASE("tight cut decomposition")
{
    auto k4d = tight_cut_decomposition(gen_family(Family::K4), 0);
    REQUIRE(k4d.leaves.size() == 1);
    CHECK(k4d.leaves[0].brick);
    CHECK(k4d.tree.empty());

    auto c6d = tight_cut_decomposition(gen_family(Family::Cycle, 6), 0);
    REQUIRE(c6d.leaves.size() == 2);
    for (const auto& lf : c6d.leaves) {
        CHECK_FALSE(lf.brick);
        CHECK(are_isomorphic(underlying_simple(lf.graph), gen_family(Family::Cycle, 4)));
    }

    CHECK_THROWS_AS(tight_cut_decomposition(build_graph(4, {{0, 1}, {1, 2}, {2, 3}}), 0), Error);
}

TEST_CASE("decomposition leaf multiset is seed-independent")
{
    Multigraph k4 = gen_family(Family::K4);
    for (auto fam : {Family::Gn, Family::Hn}) {
        for (int n : {3, 4, 5}) {
            Multigraph g = gen_family(fam, n);
            std::map<std::pair<canon::Cert, bool>, int> reference;
            for (uint32_t seed = 0; seed < 6; ++seed) {
                std::map<std::pair<canon::Cert, bool>, int> leaves;
                for (const auto& lf : tight_cut_decomposition(g, seed).leaves) {
                    Multigraph us = underlying_simple(lf.graph);
                    leaves[{canon::certificate(canon::from_multigraph_simple(us)), lf.brick}]++;
                }
                if (seed == 0)
                    reference = leaves;
                else
                    CHECK(leaves == reference);
            }
        }
    }
    // G5 decomposes into 4 bricks over K4
    auto d = tight_cut_decomposition(gen_family(Family::Gn, 5), 0);
    REQUIRE(d.leaves.size() == 4);
    for (const auto& lf : d.leaves) {
        CHECK(lf.brick);
        CHECK(are_isomorphic(underlying_simple(lf.graph), k4));
    }
}

TEST_CASE("contractions of found tight cuts stay matching covered")
{
    GraphEnumerator gen(false);
    for (int n = 4; n <= 7; ++n) {
        gen.for_each(n, GraphClass::Connected, [&](const canon::SimpleGraph& sg) {
            Multigraph g = canon::to_multigraph(sg);
            if (!is_matching_covered(g)) return;
            auto cut = find_nontrivial_tight_cut(g);
            if (!cut) return;
            VertexSet shore = cut->cut.shore;
            VertexSet other(g.full_mask() & ~shore.bits);
            CHECK(is_matching_covered(contract(g, other).graph));
            CHECK(is_matching_covered(contract(g, shore).graph));
        });
    }
}

TEST_CASE("removability transports across tight cuts")
{
    // for every edge: removable in G iff removable in both contractions
    // keeping it
    GraphEnumerator gen(false);
    for (int n = 6; n <= 7; ++n) {
        gen.for_each(n, GraphClass::Connected, [&](const canon::SimpleGraph& sg) {
            Multigraph g = canon::to_multigraph(sg);
            if (!is_matching_covered(g)) return;
            auto cut = find_nontrivial_tight_cut(g);
            if (!cut) return;
            VertexSet shore = cut->cut.shore;
            VertexSet other(g.full_mask() & ~shore.bits);
            Multigraph g1 = contract(g, other).graph;
            Multigraph g2 = contract(g, shore).graph;
            for (const Edge& e : g.edges()) {
                bool in1 = g1.has_edge(e.id), in2 = g2.has_edge(e.id);
                bool rem = is_removable_edge(g, e.id);
                bool rem_contracted = true;
                if (in1 && !is_removable_edge(g1, e.id)) rem_contracted = false;
                if (in2 && !is_removable_edge(g2, e.id)) rem_contracted = false;
                if (in1 || in2) CHECK(rem == rem_contracted);
            }
        });
    }
}

TEST_CASE("quotient by a barrier")
{
    CHECK_THROWS_AS(quotient_H(gen_family(Family::Cycle, 8), Barrier{VertexSet{0, 4}}), Error);

    Multigraph h5 = gen_family(Family::Hn, 5);
    int n = h5.vertex_count();
    // the neighbours {a, a''} of the degree-2 vertex a' form a barrier
    Barrier b{VertexSet{n - 3, n - 1}};
    REQUIRE(odd_components(h5, b.members) == 2);
    QuotientH q = quotient_H(h5, b);
    CHECK(q.graph.vertex_count() == 4);
    CHECK(q.barrier.size() == 2);
    CHECK(q.i_side.size() == 2);
    REQUIRE(q.component_map.size() == 1);
    CHECK(q.component_map[0].second.size() == 9);
    CHECK(is_matching_covered(q.graph));
    CHECK(is_bipartite(q.graph));

    CHECK_THROWS_AS(quotient_H(h5, Barrier{VertexSet{0}}), Error);  // trivial barrier
}

TEST_CASE("wheel-like hubs")
{
    auto hub = is_wheel_like(gen_family(Family::Wheel, 5));
    REQUIRE(hub.has_value());
    CHECK(*hub == 5);
    CHECK_THROWS_AS(is_wheel_like(gen_family(Family::K33)), Error);  // not a brick
    // the prism has three doubletons and no qualifying hub
    CHECK_FALSE(is_wheel_like(gen_family(Family::Prism)).has_value());
    // K4's three doubletons all meet every vertex exactly once
    auto k4hub = is_wheel_like(gen_family(Family::K4));
    REQUIRE(k4hub.has_value());
    CHECK(*k4hub == 0);
}

TEST_CASE("near-bipartite recognition")
{
    Multigraph k4 = gen_family(Family::K4);
    auto pair = is_near_bipartite(k4);
    REQUIRE(pair.has_value());
    auto [e, f] = *pair;
    CHECK_FALSE(k4.edge(e).touches(k4.edge(f).u));
    CHECK_FALSE(k4.edge(e).touches(k4.edge(f).v));
    Multigraph left = k4.without_edge(e).without_edge(f);
    CHECK(is_bipartite(left));
    CHECK(is_matching_covered(left));

    CHECK(is_near_bipartite(gen_family(Family::Prism)).has_value());
    CHECK_FALSE(is_near_bipartite(gen_family(Family::Wheel, 5)).has_value());
    CHECK_THROWS_AS(is_near_bipartite(gen_family(Family::Cycle, 6)), Error);
}

TEST_SUITE_END();

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
#include <sstream>

#include "mcg/families.hpp"
#include "mcg/io.hpp"

using namespace mcg;

namespace {

using PairSet = std::multiset<std::pair<int, int>>;

PairSet endpoint_multiset(const Multigraph& g)
{
    PairSet s;
    for (const Edge& e : g.edges()) s.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
    return s;
}

Multigraph random_simple(std::mt19937& rng, int max_n)
{
    int n = 1 + static_cast<int>(rng() % max_n);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() & 1) pairs.push_back({i, j});
    return build_graph(n, pairs);
}

Multigraph random_multi(std::mt19937& rng, int max_n)
{
    int n = 1 + static_cast<int>(rng() % max_n);
    std::vector<std::pair<int, int>> pairs;
    int m = static_cast<int>(rng() % 16);
    for (int i = 0; i < m && n >= 2; ++i) {
        int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
        if (u != v) pairs.push_back({u, v});
    }
    return build_graph(n, pairs);
}

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("graph6 known values")
{
    Multigraph k4 = parse_graph("C~", GraphFormat::Graph6);
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);
    CHECK(emit_graph(gen_family(Family::K4), GraphFormat::Graph6) == "C~");

    Multigraph c4 = parse_graph("Cl", GraphFormat::Graph6);
    CHECK(endpoint_multiset(c4) == PairSet{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
    CHECK(emit_graph(gen_family(Family::Cycle, 4), GraphFormat::Graph6) == "Cl");

    // header prefix accepted
    CHECK(parse_graph(">>graph6<<C~", GraphFormat::Graph6).edge_count() == 6);
}

TEST_CASE("graph6 rejections")
{
    CHECK_THROWS_AS(parse_graph("C", GraphFormat::Graph6), ParseError);        // truncated
    CHECK_THROWS_AS(parse_graph("C~~", GraphFormat::Graph6), ParseError);      // overlong
    CHECK_THROWS_AS(parse_graph("C\x1f@", GraphFormat::Graph6), ParseError);   // bad byte
    CHECK_THROWS_AS(parse_graph("B~", GraphFormat::Graph6), ParseError);       // nonzero padding
    CHECK_THROWS_AS(emit_graph(build_graph(2, {{0, 1}, {0, 1}}), GraphFormat::Graph6), Error);
}

TEST_CASE("edge list")
{
    Multigraph g = parse_graph("4 2\n0 1\n0 1\n", GraphFormat::EdgeList);
    CHECK(g.vertex_count() == 4);
    CHECK(g.multiplicity(0, 1) == 2);
    Multigraph h = parse_graph("# comment\n3 1\n\n0 2\n", GraphFormat::EdgeList);
    CHECK(h.edge_count() == 1);
    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n", GraphFormat::EdgeList), ParseError);
    CHECK_THROWS_AS(parse_graph("oops\n", GraphFormat::EdgeList), ParseError);
    CHECK_THROWS_AS(parse_graph("3 1\n0 0\n", GraphFormat::EdgeList), Error);  // loop
}

TEST_CASE("sparse6 carries multigraphs")
{
    Multigraph par = build_graph(2, {{0, 1}, {0, 1}});
    std::string s = emit_graph(par, GraphFormat::Sparse6);
    CHECK(s[0] == ':');
    Multigraph back = parse_graph(s, GraphFormat::Sparse6);
    CHECK(endpoint_multiset(back) == endpoint_multiset(par));

    Multigraph h5 = gen_family(Family::Hn, 5);
    CHECK(endpoint_multiset(parse_graph(emit_graph(h5, GraphFormat::Sparse6),
                                        GraphFormat::Sparse6)) == endpoint_multiset(h5));
}

TEST_CASE("sparse6 padding corner: power-of-two orders")
{
    // triangle plus an isolated vertex: the last edge tops out at v = n-2,
    // which is the case where naive all-ones padding would decode as a loop
    Multigraph tri = build_graph(4, {{0, 1}, {0, 2}, {1, 2}});
    std::string s = emit_graph(tri, GraphFormat::Sparse6);
    Multigraph back = parse_graph(s, GraphFormat::Sparse6);
    CHECK(endpoint_multiset(back) == endpoint_multiset(tri));

    std::mt19937 rng(53);
    for (int n : {2, 4, 8, 16}) {
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<std::pair<int, int>> pairs;
            int m = static_cast<int>(rng() % 10);
            for (int i = 0; i < m && n >= 2; ++i) {
                int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
                if (u != v) pairs.push_back({u, v});
            }
            Multigraph g = build_graph(n, pairs);
            Multigraph back2 = parse_graph(emit_graph(g, GraphFormat::Sparse6),
                                           GraphFormat::Sparse6);
            CHECK(back2.vertex_count() == n);
            CHECK(endpoint_multiset(back2) == endpoint_multiset(g));
        }
    }
}

TEST_CASE("round trips, 1000 random graphs per format")
{
    std::mt19937 rng(2026);
    for (int trial = 0; trial < 1000; ++trial) {
        Multigraph g = random_simple(rng, 10);
        std::string s = emit_graph(g, GraphFormat::Graph6);
        Multigraph back = parse_graph(s, GraphFormat::Graph6);
        CHECK(endpoint_multiset(back) == endpoint_multiset(g));
        CHECK(emit_graph(back, GraphFormat::Graph6) == s);  // emit-parse-emit fixpoint
    }
    for (int trial = 0; trial < 1000; ++trial) {
        Multigraph g = random_multi(rng, 10);
        std::string s = emit_graph(g, GraphFormat::Sparse6);
        Multigraph back = parse_graph(s, GraphFormat::Sparse6);
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(endpoint_multiset(back) == endpoint_multiset(g));
        CHECK(emit_graph(back, GraphFormat::Sparse6) == s);
    }
    for (int trial = 0; trial < 1000; ++trial) {
        Multigraph g = random_multi(rng, 10);
        std::string s = emit_graph(g, GraphFormat::EdgeList);
        Multigraph back = parse_graph(s, GraphFormat::EdgeList);
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(endpoint_multiset(back) == endpoint_multiset(g));
        CHECK(emit_graph(back, GraphFormat::EdgeList) == s);
    }
}

TEST_CASE("stream reading")
{
    std::stringstream ss;
    ss << emit_graph(gen_family(Family::K4), GraphFormat::Graph6) << "\n";
    ss << emit_graph(gen_family(Family::Cycle, 4), GraphFormat::Graph6) << "\n";
    GraphReader reader(ss, GraphFormat::Graph6);
    Multigraph g;
    std::string label;
    REQUIRE(reader.next(g, label));
    CHECK(g.edge_count() == 6);
    CHECK(label == "line 1");
    REQUIRE(reader.next(g, label));
    CHECK(g.edge_count() == 4);
    CHECK_FALSE(reader.next(g, label));

    // edge-list records back to back, with comments
    std::stringstream es;
    es << "# first\n2 1\n0 1\n# second\n4 2\n0 1\n2 3\n";
    GraphReader er(es, GraphFormat::EdgeList);
    REQUIRE(er.next(g, label));
    CHECK(g.vertex_count() == 2);
    REQUIRE(er.next(g, label));
    CHECK(g.vertex_count() == 4);
    CHECK_FALSE(er.next(g, label));

    // malformed record throws but the stream continues
    std::stringstream bad;
    bad << "C~\nzzzzzzzzz\nCl\n";
    GraphReader br(bad, GraphFormat::Graph6);
    REQUIRE(br.next(g, label));
    CHECK_THROWS_AS(br.next(g, label), ParseError);
    REQUIRE(br.next(g, label));
    CHECK(g.edge_count() == 4);
}

TEST_CASE("format names")
{
    CHECK(format_from_string("g6") == GraphFormat::Graph6);
    CHECK(format_from_string("sparse6") == GraphFormat::Sparse6);
    CHECK(format_from_string("elist") == GraphFormat::EdgeList);
    CHECK_FALSE(format_from_string("xml").has_value());
}

TEST_SUITE_END();

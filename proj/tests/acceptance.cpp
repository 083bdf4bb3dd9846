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

// Acceptance suite: exercises every gate the project commits to, end to
// end, and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mcg/canon.hpp"
#include "mcg/classify.hpp"
#include "mcg/enumerate.hpp"
#include "mcg/families.hpp"
#include "mcg/io.hpp"
#include "mcg/matching.hpp"
#include "mcg/props.hpp"
#include "mcg/tightcut.hpp"

using namespace mcg;

namespace {

const std::string kBin = MCG_BIN;
const std::string kEnumBin = MCG_ENUM_BIN;

int criteria_failed = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double secs() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(int number, const std::string& name, bool ok, double secs, double budget,
            const std::string& detail = "")
{
    bool in_budget = secs < budget;
    bool pass = ok && in_budget;
    if (!pass) criteria_failed++;
    printf("criterion %d (%s): %s  [%.1fs, budget %.0fs]%s%s\n", number, name.c_str(),
           pass ? "PASS" : "FAIL", secs, budget, detail.empty() ? "" : " — ", detail.c_str());
    if (ok && !in_budget) printf("  note: checks passed but the time budget was exceeded\n");
    fflush(stdout);
}

struct CmdResult {
    int status;
    std::string out;
};

CmdResult run_cmd(const std::string& cmd)
{
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    char buf[8192];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int rc = pclose(pipe);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

struct Tally {
    long pass = 0, fail = 0, na = 0;
};

// parses "check <id>: pass=N fail=M not_applicable=K" lines
std::map<std::string, Tally> parse_summary(const std::string& out)
{
    std::map<std::string, Tally> tallies;
    std::istringstream lines(out);
    std::string line;
    while (std::getline(lines, line)) {
        char id[128];
        long p, f, na;
        if (sscanf(line.c_str(), "check %127[^:]: pass=%ld fail=%ld not_applicable=%ld", id, &p,
                   &f, &na) == 4)
            tallies[id] = Tally{p, f, na};
    }
    return tallies;
}

int degree_count(const Multigraph& g, int d)
{
    int c = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == d) c++;
    return c;
}

// --------------------------------------------------------------------------

void criterion1_families()
{
    Timer t;
    bool ok = true;
    std::string detail;
    for (int n = 3; n <= 8 && ok; ++n) {
        Multigraph g = gen_family(Family::Gn, n);
        auto three = k_lines(g, 3);
        ok = is_minimal_mc(g) && three.size() == 2 && degree_count(g, 3) == 4;
        if (ok) {
            // the two 3-lines are the end rungs
            ok = g.edge(three[0]).touches(0) && g.edge(three[0]).touches(n) &&
                 g.edge(three[1]).touches(n - 1) && g.edge(three[1]).touches(2 * n - 1);
        }
        if (!ok) detail = "gn n=" + std::to_string(n);
        if (!ok) break;
        Multigraph h = gen_family(Family::Hn, n);
        ok = is_minimal_mc(h) && degree_count(h, 2) == 1 && k_lines(h, 2).empty();
        if (!ok) detail = "hn n=" + std::to_string(n);
    }
    report(1, "family reproduction", ok, t.secs(), 10.0, detail);
}

void criterion2_decomposition()
{
    Timer t;
    bool ok = true;
    std::string detail;
    Multigraph k4 = gen_family(Family::K4);
    for (int n = 3; n <= 8 && ok; ++n) {
        Multigraph g = gen_family(Family::Gn, n);
        std::map<std::pair<canon::Cert, bool>, int> reference;
        for (uint32_t seed = 0; seed < 5 && ok; ++seed) {
            DecompResult d = tight_cut_decomposition(g, seed);
            if (static_cast<int>(d.leaves.size()) != n - 1) ok = false;
            std::map<std::pair<canon::Cert, bool>, int> multiset;
            for (const auto& lf : d.leaves) {
                if (!lf.brick || !are_isomorphic(underlying_simple(lf.graph), k4)) ok = false;
                Multigraph us = underlying_simple(lf.graph);
                multiset[{canon::certificate(canon::from_multigraph_simple(us)), lf.brick}]++;
            }
            if (seed == 0)
                reference = multiset;
            else if (multiset != reference)
                ok = false;
            if (!ok) detail = "gn n=" + std::to_string(n) + " seed=" + std::to_string(seed);
        }
    }
    report(2, "decomposition reproduction", ok, t.secs(), 30.0, detail);
}

void criterion3_sweeps()
{
    Timer t;
    bool ok = true;
    std::string detail;

    struct Run {
        std::string corpus;
        std::string checks;
    };
    const std::vector<Run> runs = {
        {kEnumBin + " --class connected --max-n 10 2>/dev/null",
         "main-3lines,two-or-three,delta-2-or-3,bicrit-nore-cubic,bicrit-nore-3lines,"
         "tight-contract-mc,barrier-indep,maxbarrier-fc,twosep-bicritical,twosep-degree,"
         "twosep-brick-shores"},
        {kEnumBin + " --class connected --max-n 9 2>/dev/null", "brick-classes,nearbi-nonadj"},
        {kEnumBin + " --class bipartite-connected --max-n 12 2>/dev/null",
         "bip-2lines,nonre-forest,nonre-two-per-side"},
    };
    for (size_t i = 0; i < runs.size() && ok; ++i) {
        std::string cmd = runs[i].corpus + " | " + kBin + " check --check " + runs[i].checks +
                          " --input - --format g6 --jobs 8 --summary --counterexample-out " +
                          "acc3_counterexamples.elist 2>/dev/null";
        CmdResult r = run_cmd(cmd);
        printf("%s", r.out.c_str());
        fflush(stdout);
        if (r.status != 0) {
            ok = false;
            detail = "run " + std::to_string(i) + " exited " + std::to_string(r.status);
            break;
        }
        auto tallies = parse_summary(r.out);
        std::stringstream ids(runs[i].checks);
        std::string id;
        while (std::getline(ids, id, ',')) {
            if (tallies[id].fail != 0) {
                ok = false;
                detail = id + " has counterexamples";
            }
            if (tallies[id].pass == 0) {
                ok = false;
                detail = id + " never fired";
            }
        }
    }
    report(3, "theorem sweeps", ok, t.secs(), 1800.0, detail);
}

void criterion4_selftest()
{
    Timer t;
    CmdResult r = run_cmd(kBin + " selftest --max-n 8 2>/dev/null");
    printf("%s", r.out.c_str());
    report(4, "oracle equivalence", r.status == 0, t.secs(), 900.0,
           r.status == 0 ? "" : "selftest exited " + std::to_string(r.status));
}

void criterion5_exceptions()
{
    Timer t;
    bool ok = true;
    std::string detail;

    auto count_kinds = [](const Multigraph& g) {
        auto cl = removable_classes(g);
        int s = 0;
        for (const auto& rc : cl)
            if (rc.kind == RemovableClass::Kind::Single) s++;
        return std::pair<int, int>(s, static_cast<int>(cl.size()));
    };
    auto [k4s, k4total] = count_kinds(gen_family(Family::K4));
    if (!(k4s == 0 && k4total == 3)) {
        ok = false;
        detail = "k4 classes";
    }
    auto [ps, ptotal] = count_kinds(gen_family(Family::Prism));
    if (!(ps == 0 && ptotal >= 3)) {
        ok = false;
        detail = "prism classes";
    }

    Multigraph r8 = gen_family(Family::R8);
    bool r8_simple = true;
    for (const Edge& e : r8.edges())
        if (r8.multiplicity(e.u, e.v) > 1) r8_simple = false;
    auto rem = removable_edges(r8);
    bool no_nonadjacent = true;
    for (size_t i = 0; i < rem.size(); ++i)
        for (size_t j = i + 1; j < rem.size(); ++j) {
            const Edge& a = r8.edge(rem[i]);
            const Edge& b = r8.edge(rem[j]);
            if (!a.touches(b.u) && !a.touches(b.v)) no_nonadjacent = false;
        }
    if (!(r8_simple && is_brick(r8) && is_near_bipartite(r8).has_value() && no_nonadjacent)) {
        ok = false;
        detail = "r8 validation";
    }

    // r8 is the unique simple near-bipartite brick of order 8 whose
    // removable edges are pairwise adjacent
    if (ok) {
        int candidates = 0;
        bool matches_r8 = false;
        GraphEnumerator gen(false);
        gen.for_each(8, GraphClass::Connected, [&](const canon::SimpleGraph& sg) {
            Multigraph g = canon::to_multigraph(sg);
            if (!is_brick(g)) return;
            if (!is_near_bipartite(g).has_value()) return;
            auto re = removable_edges(g);
            for (size_t i = 0; i < re.size(); ++i)
                for (size_t j = i + 1; j < re.size(); ++j) {
                    const Edge& a = g.edge(re[i]);
                    const Edge& b = g.edge(re[j]);
                    if (!a.touches(b.u) && !a.touches(b.v)) return;
                }
            candidates++;
            if (are_isomorphic(g, r8)) matches_r8 = true;
        });
        if (!(candidates == 1 && matches_r8)) {
            ok = false;
            detail = "r8 uniqueness search found " + std::to_string(candidates);
        }
    }
    report(5, "exception tightness", ok, t.secs(), 120.0, detail);
}

void criterion6_conjectures()
{
    Timer t;
    std::string cmd = kEnumBin + " --class bipartite-connected --max-n 12 2>/dev/null | " + kBin +
                      " check --check conj-minimal-brace,lou-cubic --input - --format g6 "
                      "--jobs 8 --summary --counterexample-out acc6_counterexamples.elist "
                      "2>/dev/null";
    CmdResult r = run_cmd(cmd);
    printf("%s", r.out.c_str());
    bool ok = r.status == 0;
    std::string detail = ok ? "" : "check exited " + std::to_string(r.status);
    auto tallies = parse_summary(r.out);
    for (const char* id : {"conj-minimal-brace", "lou-cubic"}) {
        if (tallies[id].fail != 0) {
            ok = false;
            detail = std::string(id) + " found a counterexample (see the artifact file)";
        }
        if (tallies[id].pass == 0) {
            ok = false;
            detail = std::string(id) + " never fired";
        }
    }
    report(6, "conjecture scan", ok, t.secs(), 1800.0, detail);
}

void criterion7_determinism()
{
    Timer t;
    bool ok = true;
    std::string detail;

    // codec round trips: 1000 random graphs per format
    std::mt19937 rng(20260809);
    auto multiset = [](const Multigraph& g) {
        std::multiset<std::pair<int, int>> s;
        for (const Edge& e : g.edges()) s.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
        return s;
    };
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        std::vector<std::pair<int, int>> pairs, multi;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() & 1) pairs.push_back({i, j});
        for (int i = 0; i < 12 && n >= 2; ++i) {
            int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
            if (u != v) multi.push_back({u, v});
        }
        Multigraph simple = build_graph(n, pairs);
        Multigraph multig = build_graph(n, multi);
        std::string g6 = emit_graph(simple, GraphFormat::Graph6);
        ok = ok && emit_graph(parse_graph(g6, GraphFormat::Graph6), GraphFormat::Graph6) == g6;
        ok = ok && multiset(parse_graph(g6, GraphFormat::Graph6)) == multiset(simple);
        std::string s6 = emit_graph(multig, GraphFormat::Sparse6);
        ok = ok && emit_graph(parse_graph(s6, GraphFormat::Sparse6), GraphFormat::Sparse6) == s6;
        ok = ok && multiset(parse_graph(s6, GraphFormat::Sparse6)) == multiset(multig);
        std::string el = emit_graph(multig, GraphFormat::EdgeList);
        ok = ok &&
             emit_graph(parse_graph(el, GraphFormat::EdgeList), GraphFormat::EdgeList) == el;
        if (!ok) detail = "codec round trip";
    }

    // byte-identical reports across --jobs with a fixed seed
    if (ok) {
        CmdResult gen =
            run_cmd(kEnumBin + " --class bipartite-connected --max-n 8 2>/dev/null > acc7.g6");
        ok = gen.status == 0;
        CmdResult one = run_cmd(kBin + " check --check all --input acc7.g6 --format g6 "
                                       "--seed 7 --jobs 1 2>/dev/null");
        CmdResult eight = run_cmd(kBin + " check --check all --input acc7.g6 --format g6 "
                                         "--seed 7 --jobs 8 2>/dev/null");
        ok = ok && one.status == 0 && eight.status == 0 && one.out == eight.out &&
             !one.out.empty();
        if (!ok) detail = "jobs determinism";
        remove("acc7.g6");
    }
    report(7, "determinism and codecs", ok, t.secs(), 600.0, detail);
}

}  // namespace

int main()
{
    printf("acceptance suite — binaries: %s / %s\n", kBin.c_str(), kEnumBin.c_str());
    Timer total;
    criterion1_families();
    criterion2_decomposition();
    criterion5_exceptions();
    criterion7_determinism();
    criterion4_selftest();
    criterion3_sweeps();
    criterion6_conjectures();
    printf("acceptance total: %.1fs, %d criterion(s) failed\n", total.secs(), criteria_failed);
    return criteria_failed == 0 ? 0 : 1;
}

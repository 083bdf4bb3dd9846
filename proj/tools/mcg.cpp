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

// Command-line workbench: generate families, classify and decompose graphs,
// stream corpora through the registered checks, and run the self-test
// suites. Reports are JSON lines; exit codes: 0 ok, 1 check failure,
// 2 usage or parse errors.

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "mcg/canon.hpp"
#include "mcg/classify.hpp"
#include "mcg/enumerate.hpp"
#include "mcg/families.hpp"
#include "mcg/io.hpp"
#include "mcg/matching.hpp"
#include "mcg/props.hpp"
#include "mcg/selftest.hpp"
#include "mcg/tightcut.hpp"

using mcg::Json;
using mcg::Multigraph;

namespace {

struct InputOptions {
    std::string input = "-";
    std::string format = "g6";
    std::string family;
    int n = 0;
    std::string n_range;
};

void add_input_options(CLI::App* cmd, InputOptions& io, bool with_family)
{
    cmd->add_option("--input", io.input, "input file, or - for stdin")->default_val("-");
    cmd->add_option("--format", io.format, "g6 | s6 | elist")
        ->check(CLI::IsMember({"g6", "s6", "elist", "graph6", "sparse6", "edgelist"}))
        ->default_val("g6");
    if (with_family) {
        cmd->add_option("--family", io.family, "take graphs from a generator instead of --input");
        cmd->add_option("--n", io.n, "family parameter");
        cmd->add_option("--n-range", io.n_range, "family parameter range a..b");
    }
}

bool parse_range(const std::string& s, int& lo, int& hi)
{
    auto dots = s.find("..");
    if (dots == std::string::npos) return false;
    try {
        lo = std::stoi(s.substr(0, dots));
        hi = std::stoi(s.substr(dots + 2));
    } catch (...) {
        return false;
    }
    return lo <= hi;
}

// One unit of work: either a parsed graph or a parse failure to report.
struct Task {
    uint64_t index;
    std::string source;
    std::optional<Multigraph> graph;
    std::string error;
};

/// Sequential source of tasks: a graph stream or a family range.
class Source {
public:
    virtual ~Source() = default;
    virtual bool next(Task& t) = 0;
};

class StreamSource : public Source {
public:
    StreamSource(std::istream& in, mcg::GraphFormat fmt, const std::string& name)
        : reader_(in, fmt), name_(name)
    {
    }

    bool next(Task& t) override
    {
        t.index = count_;
        t.graph.reset();
        t.error.clear();
        std::string label;
        try {
            Multigraph g;
            if (!reader_.next(g, label)) return false;
            t.graph = std::move(g);
            t.source = name_ + ":" + label;
        } catch (const mcg::ParseError& e) {
            t.error = e.what();
            t.source = name_ + ":line " + std::to_string(reader_.line_number());
        } catch (const mcg::Error& e) {
            t.error = e.what();
            t.source = name_ + ":line " + std::to_string(reader_.line_number());
        }
        count_++;
        return true;
    }

private:
    mcg::GraphReader reader_;
    std::string name_;
    uint64_t count_ = 0;
};

class FamilySource : public Source {
public:
    FamilySource(mcg::Family f, int lo, int hi) : family_(f), n_(lo), hi_(hi) {}

    bool next(Task& t) override
    {
        if (done_) return false;
        t.index = count_++;
        t.error.clear();
        t.graph.reset();
        try {
            if (mcg::family_takes_n(family_)) {
                if (n_ > hi_) return false;
                t.source = std::string("family:") + mcg::family_name(family_) +
                           ":n=" + std::to_string(n_);
                t.graph = mcg::gen_family(family_, n_);
                n_++;
                if (n_ > hi_) done_ = true;
            } else {
                t.source = std::string("family:") + mcg::family_name(family_);
                t.graph = mcg::gen_family(family_);
                done_ = true;
            }
        } catch (const mcg::Error& e) {
            t.error = e.what();
            n_++;
            if (!mcg::family_takes_n(family_) || n_ > hi_) done_ = true;
        }
        return true;
    }

private:
    mcg::Family family_;
    int n_, hi_;
    bool done_ = false;
    uint64_t count_ = 0;
};

std::unique_ptr<Source> open_source(const InputOptions& io, std::ifstream& file_holder)
{
    if (!io.family.empty()) {
        auto fam = mcg::family_from_string(io.family);
        if (!fam) throw mcg::Error("unknown family '" + io.family + "'");
        int lo = io.n, hi = io.n;
        if (!io.n_range.empty() && !parse_range(io.n_range, lo, hi))
            throw mcg::Error("bad --n-range, expected a..b");
        if (mcg::family_takes_n(*fam) && lo == 0)
            throw mcg::Error(std::string(io.family) + " requires --n or --n-range");
        return std::make_unique<FamilySource>(*fam, lo, hi);
    }
    auto fmt = mcg::format_from_string(io.format);
    if (!fmt) throw mcg::Error("unknown format '" + io.format + "'");
    if (io.input == "-") return std::make_unique<StreamSource>(std::cin, *fmt, "stdin");
    file_holder.open(io.input);
    if (!file_holder) throw mcg::Error("cannot open input file '" + io.input + "'");
    return std::make_unique<StreamSource>(file_holder, *fmt, io.input);
}

/// Runs tasks on a small pool and emits per-task output in input order.
/// Admission is throttled so at most O(jobs) results are buffered.
class OrderedPipeline {
public:
    OrderedPipeline(Source& src, int jobs, std::ostream& out)
        : src_(src), jobs_(std::max(1, jobs)), out_(out)
    {
    }

    // fn: task -> output chunk (may be empty)
    template <class Fn>
    void run(const Fn& fn)
    {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs_; ++i) pool.emplace_back([&] { worker(fn); });
        for (auto& th : pool) th.join();
    }

private:
    Source& src_;
    int jobs_;
    std::ostream& out_;
    std::mutex in_mu_, out_mu_;
    std::condition_variable cv_;
    std::map<uint64_t, std::string> ready_;
    uint64_t next_emit_ = 0;
    std::atomic<uint64_t> issued_{0};
    bool exhausted_ = false;

    template <class Fn>
    void worker(const Fn& fn)
    {
        for (;;) {
            Task t;
            {
                std::unique_lock lk(in_mu_);
                if (exhausted_) return;
                {
                    std::unique_lock ok(out_mu_);
                    cv_.wait(ok, [&] { return issued_ - next_emit_ < uint64_t(jobs_) * 4; });
                }
                if (!src_.next(t)) {
                    exhausted_ = true;
                    return;
                }
                issued_++;
            }
            std::string chunk = fn(t);
            std::unique_lock ok(out_mu_);
            ready_.emplace(t.index, std::move(chunk));
            while (!ready_.empty() && ready_.begin()->first == next_emit_) {
                out_ << ready_.begin()->second;
                ready_.erase(ready_.begin());
                next_emit_++;
            }
            cv_.notify_all();
        }
    }
};

Json base_record(const Task& t)
{
    Json rec;
    rec["graph_index"] = t.index;
    rec["source"] = t.source;
    return rec;
}

// ---------------------------------------------------------------------------
// gen

int cmd_gen(const InputOptions& io, const std::string& format)
{
    auto fam = mcg::family_from_string(io.family);
    if (!fam) throw mcg::Error("unknown family '" + io.family + "'");
    auto fmt = mcg::format_from_string(format);
    if (!fmt) throw mcg::Error("unknown format '" + format + "'");
    int lo = io.n, hi = io.n;
    if (!io.n_range.empty() && !parse_range(io.n_range, lo, hi))
        throw mcg::Error("bad --n-range, expected a..b");
    if (mcg::family_takes_n(*fam)) {
        if (lo == 0) throw mcg::Error(std::string(io.family) + " requires --n or --n-range");
        for (int k = lo; k <= hi; ++k) {
            std::string s = mcg::emit_graph(mcg::gen_family(*fam, k), *fmt);
            std::cout << s;
            if (s.empty() || s.back() != '\n') std::cout << "\n";
        }
    } else {
        std::string s = mcg::emit_graph(mcg::gen_family(*fam), *fmt);
        std::cout << s;
        if (s.empty() || s.back() != '\n') std::cout << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// classify

Json classify_graph(const Multigraph& g)
{
    mcg::GraphAnalysis a(g);
    Json rec;
    rec["n"] = g.vertex_count();
    rec["m"] = g.edge_count();
    rec["connected"] = a.connected();
    rec["bipartite"] = a.bipartite();
    bool mc = a.matching_covered();
    rec["matching_covered"] = mc;
    rec["minimal"] = mc ? Json(a.minimal_mc()) : Json(false);
    rec["bicritical"] = a.bicritical();
    rec["factor_critical"] = mcg::is_factor_critical(g);
    rec["brick"] = a.brick();
    rec["brace"] = a.brace();
    rec["min_degree"] = g.min_degree();
    rec["max_degree"] = g.max_degree();
    rec["two_lines"] = mcg::k_lines(g, 2).size();
    rec["three_lines"] = mcg::k_lines(g, 3).size();
    int cubic = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 3) cubic++;
    rec["cubic"] = cubic;
    if (mc) {
        const auto& classes = a.classes();
        int singles = 0, doubletons = 0;
        for (const auto& rc : classes)
            (rc.kind == mcg::RemovableClass::Kind::Single ? singles : doubletons)++;
        rec["removable_edges"] = singles;
        rec["removable_doubletons"] = doubletons;
    } else {
        rec["removable_edges"] = nullptr;
        rec["removable_doubletons"] = nullptr;
    }
    return rec;
}

// ---------------------------------------------------------------------------
// check

struct CheckTally {
    uint64_t pass = 0, fail = 0, na = 0;
};

int cmd_check(const InputOptions& io, const std::string& checks_arg, int jobs, uint32_t seed,
              bool summary, bool timings, const std::string& counterexample_out)
{
    (void)seed;  // reports are deterministic; the flag is accepted for symmetry
    std::vector<std::string> ids;
    if (checks_arg == "all") {
        for (const auto& info : mcg::list_checks()) ids.push_back(info.id);
    } else {
        std::stringstream ss(checks_arg);
        std::string one;
        while (std::getline(ss, one, ','))
            if (!one.empty()) ids.push_back(one);
        for (const auto& id : ids)
            if (!mcg::is_known_check(id)) {
                std::string known;
                for (const auto& info : mcg::list_checks())
                    known += (known.empty() ? "" : ", ") + info.id;
                throw mcg::Error("unknown check id '" + id + "'; known: " + known);
            }
    }
    if (ids.empty()) throw mcg::Error("no checks selected");

    std::ifstream file;
    auto src = open_source(io, file);

    std::mutex stats_mu;
    std::map<std::string, CheckTally> tally;
    std::atomic<uint64_t> fails{0}, parse_errors{0}, graphs{0};
    std::ofstream cex;
    auto t0 = std::chrono::steady_clock::now();

    OrderedPipeline pipe(*src, jobs, std::cout);
    pipe.run([&](const Task& t) -> std::string {
        std::string chunk;
        if (!t.error.empty()) {
            parse_errors++;
            Json rec = base_record(t);
            rec["error"] = t.error;
            if (!summary) chunk += rec.dump() + "\n";
            return chunk;
        }
        graphs++;
        mcg::GraphAnalysis a(*t.graph);
        for (const auto& id : ids) {
            auto start = std::chrono::steady_clock::now();
            mcg::CheckResult res;
            try {
                res = mcg::run_check_with(id, a);
            } catch (const mcg::Error& e) {
                parse_errors++;
                Json err = base_record(t);
                err["check_id"] = id;
                err["error"] = e.what();
                if (!summary) chunk += err.dump() + "\n";
                continue;
            }
            Json rec = base_record(t);
            rec["check_id"] = res.check_id;
            rec["verdict"] = mcg::verdict_name(res.verdict);
            rec["witness"] = res.witness;
            if (!res.note.empty()) rec["note"] = res.note;
            if (timings)
                rec["elapsed_ms"] =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              start)
                        .count();
            {
                std::unique_lock lk(stats_mu);
                auto& tl = tally[id];
                if (res.verdict == mcg::Verdict::Pass) tl.pass++;
                if (res.verdict == mcg::Verdict::NotApplicable) tl.na++;
                if (res.verdict == mcg::Verdict::Fail) {
                    tl.fail++;
                    fails++;
                    if (!counterexample_out.empty()) {
                        if (!cex.is_open()) cex.open(counterexample_out);
                        cex << "# graph " << t.index << " (" << t.source << ") check " << id
                            << "\n"
                            << mcg::emit_graph(*t.graph, mcg::GraphFormat::EdgeList);
                        cex.flush();
                    }
                }
            }
            if (!summary) chunk += rec.dump() + "\n";
        }
        return chunk;
    });

    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (summary) {
        for (const auto& id : ids) {
            const CheckTally& tl = tally[id];
            std::cout << "check " << id << ": pass=" << tl.pass << " fail=" << tl.fail
                      << " not_applicable=" << tl.na
                      << (tl.pass + tl.fail == 0 ? " (vacuous)" : "") << "\n";
        }
        std::cout << "graphs=" << graphs.load() << " parse_errors=" << parse_errors.load()
                  << " failures=" << fails.load() << " elapsed_s=" << secs << "\n";
    }
    if (fails > 0) return 1;
    if (parse_errors > 0) return 2;
    return 0;
}

// ---------------------------------------------------------------------------
// decompose / matchings

Json decompose_graph(const Multigraph& g, uint32_t seed)
{
    Json rec;
    if (!mcg::is_matching_covered(g)) {
        rec["applicable"] = false;
        return rec;
    }
    rec["applicable"] = true;
    mcg::DecompResult d = mcg::tight_cut_decomposition(g, seed);
    Json leaves = Json::array();
    int bricks = 0;
    for (const auto& lf : d.leaves) {
        Json l;
        l["kind"] = lf.brick ? "brick" : "brace";
        if (lf.brick) bricks++;
        l["n"] = lf.graph.vertex_count();
        l["m"] = lf.graph.edge_count();
        Multigraph us = mcg::underlying_simple(lf.graph);
        if (us.vertex_count() <= mcg::canon::kMaxN) {
            auto canonical =
                mcg::canon::cert_graph(mcg::canon::certificate(mcg::canon::from_multigraph_simple(us)));
            l["simple_g6"] = mcg::emit_graph(mcg::canon::to_multigraph(canonical),
                                             mcg::GraphFormat::Graph6);
        }
        leaves.push_back(std::move(l));
    }
    rec["leaves"] = std::move(leaves);
    rec["bricks"] = bricks;
    rec["cuts"] = d.tree.size();
    return rec;
}

Json matchings_of(const Multigraph& g)
{
    Json rec;
    rec["n"] = g.vertex_count();
    rec["m"] = g.edge_count();
    auto pms = mcg::enumerate_perfect_matchings(g);
    rec["pm_count"] = pms.size();
    if (pms.size() <= 1000) {
        Json arr = Json::array();
        for (const auto& m : pms) {
            Json one = Json::array();
            for (mcg::EdgeId id : m.edge_ids) {
                const mcg::Edge& e = g.edge(id);
                one.push_back(Json::array({e.id, e.u, e.v}));
            }
            arr.push_back(std::move(one));
        }
        rec["matchings"] = std::move(arr);
    } else {
        rec["matchings_omitted"] = true;
    }
    return rec;
}

int run_per_graph(const InputOptions& io, int jobs,
                  const std::function<Json(const Multigraph&)>& fn)
{
    std::ifstream file;
    auto src = open_source(io, file);
    std::atomic<uint64_t> parse_errors{0};
    OrderedPipeline pipe(*src, jobs, std::cout);
    pipe.run([&](const Task& t) -> std::string {
        Json rec = base_record(t);
        if (!t.error.empty()) {
            parse_errors++;
            rec["error"] = t.error;
            return rec.dump() + "\n";
        }
        try {
            Json body = fn(*t.graph);
            rec.update(body);
        } catch (const mcg::Error& e) {
            rec["error"] = e.what();
        }
        return rec.dump() + "\n";
    });
    return parse_errors > 0 ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"workbench for matching covered graphs"};
    app.require_subcommand(1);

    InputOptions gen_io, cls_io, chk_io, dec_io, mat_io;
    std::string gen_format = "elist";
    std::string checks = "all";
    int jobs = 1;
    uint32_t seed = 0;
    bool summary = false, timings = false;
    std::string cex_out = "counterexamples.elist";
    int max_n = 7;
    uint32_t dec_seed = 0;

    CLI::App* gen = app.add_subcommand("gen", "emit a named family");
    gen->add_option("--family", gen_io.family, "family name")->required();
    gen->add_option("--n", gen_io.n, "family parameter");
    gen->add_option("--n-range", gen_io.n_range, "family parameter range a..b");
    gen->add_option("--format", gen_format, "g6 | s6 | elist")->default_val("elist");

    CLI::App* cls = app.add_subcommand("classify", "per-graph structural summary");
    add_input_options(cls, cls_io, false);
    cls->add_option("--jobs", jobs, "worker threads")->default_val(1);

    CLI::App* chk = app.add_subcommand("check", "run registered checks over a corpus");
    add_input_options(chk, chk_io, true);
    chk->add_option("--check", checks, "comma-separated check ids, or 'all'")->default_val("all");
    chk->add_option("--jobs", jobs, "worker threads")->default_val(1);
    chk->add_option("--seed", seed, "seed (accepted for reproducible invocations)")
        ->default_val(0);
    chk->add_flag("--summary", summary, "print tallies instead of per-graph lines");
    chk->add_flag("--timings", timings, "include elapsed_ms in report lines");
    chk->add_option("--counterexample-out", cex_out,
                    "edge-list dump of failing graphs (empty to disable)")
        ->default_val("counterexamples.elist");

    CLI::App* dec = app.add_subcommand("decompose", "tight cut decomposition");
    add_input_options(dec, dec_io, true);
    dec->add_option("--seed", dec_seed, "cut selection seed")->default_val(0);
    dec->add_option("--jobs", jobs, "worker threads")->default_val(1);

    CLI::App* mat = app.add_subcommand("matchings", "enumerate perfect matchings");
    add_input_options(mat, mat_io, true);
    mat->add_option("--jobs", jobs, "worker threads")->default_val(1);

    CLI::App* self = app.add_subcommand("selftest", "oracle-equivalence suites");
    self->add_option("--max-n", max_n, "largest vertex count (<= 10)")
        ->default_val(7)
        ->check(CLI::Range(1, 10));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_io, gen_format);
        if (cls->parsed()) return run_per_graph(cls_io, jobs, classify_graph);
        if (chk->parsed())
            return cmd_check(chk_io, checks, jobs, seed, summary, timings, cex_out);
        if (dec->parsed())
            return run_per_graph(dec_io, jobs,
                                 [&](const Multigraph& g) { return decompose_graph(g, dec_seed); });
        if (mat->parsed()) return run_per_graph(mat_io, jobs, matchings_of);
        if (self->parsed()) {
            mcg::SelftestStats st = mcg::run_selftest(max_n, &std::cerr);
            std::cout << "selftest: graphs=" << st.graphs
                      << " bipartite_graphs=" << st.bipartite_graphs
                      << " allowed_comparisons=" << st.allowed_comparisons
                      << " tutte_comparisons=" << st.tutte_comparisons
                      << " tight_shore_comparisons=" << st.tight_shore_comparisons
                      << " brace_comparisons=" << st.brace_comparisons
                      << " structured_cut_comparisons=" << st.structured_cut_comparisons
                      << " failures=" << st.failures << "\n";
            for (const auto& s : st.failure_samples) std::cout << "failure: " << s << "\n";
            return st.failures == 0 ? 0 : 1;
        }
    } catch (const mcg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

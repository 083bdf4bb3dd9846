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

#include <benchmark/benchmark.h>

#include "mcg/canon.hpp"
#include "mcg/classify.hpp"
#include "mcg/families.hpp"
#include "mcg/io.hpp"
#include "mcg/matching.hpp"
#include "mcg/props.hpp"
#include "mcg/tightcut.hpp"

using namespace mcg;

namespace {

void BM_max_matching(benchmark::State& state)
{
    Multigraph g = gen_family(Family::Gn, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        MatchKit kit(g);
        benchmark::DoNotOptimize(kit.max_matching_size(g.full_mask()));
    }
}
BENCHMARK(BM_max_matching)->Arg(5)->Arg(8);

void BM_matching_covered(benchmark::State& state)
{
    Multigraph g = gen_family(Family::Gn, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(is_matching_covered(g));
}
BENCHMARK(BM_matching_covered)->Arg(5)->Arg(8);

void BM_enumerate_pms(benchmark::State& state)
{
    Multigraph g = gen_family(Family::Gn, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_pm_masks(g));
}
BENCHMARK(BM_enumerate_pms)->Arg(5)->Arg(8);

void BM_minimal(benchmark::State& state)
{
    Multigraph g = gen_family(Family::Gn, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(is_minimal_mc(g));
}
BENCHMARK(BM_minimal)->Arg(5)->Arg(8);

void BM_decompose(benchmark::State& state)
{
    Multigraph g = gen_family(Family::Gn, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(tight_cut_decomposition(g, 0).leaves.size());
}
BENCHMARK(BM_decompose)->Arg(5)->Arg(8);

void BM_certificate(benchmark::State& state)
{
    canon::SimpleGraph g = canon::from_multigraph_simple(gen_family(Family::R8));
    for (auto _ : state) benchmark::DoNotOptimize(canon::certificate(g));
}
BENCHMARK(BM_certificate);

void BM_parse_g6(benchmark::State& state)
{
    std::string line = emit_graph(underlying_simple(gen_family(Family::Gn, 8)),
                                  GraphFormat::Graph6);
    for (auto _ : state) benchmark::DoNotOptimize(parse_graph(line, GraphFormat::Graph6));
}
BENCHMARK(BM_parse_g6);

void BM_check_battery(benchmark::State& state)
{
    Multigraph g = gen_family(Family::Prism);
    for (auto _ : state) {
        GraphAnalysis a(g);
        for (const auto& info : list_checks())
            benchmark::DoNotOptimize(run_check_with(info.id, a).verdict);
    }
}
BENCHMARK(BM_check_battery);

}  // namespace

BENCHMARK_MAIN();

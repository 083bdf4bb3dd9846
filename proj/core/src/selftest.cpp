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

#include "mcg/selftest.hpp"

#include <algorithm>

#include "mcg/classify.hpp"
#include "mcg/enumerate.hpp"
#include "mcg/io.hpp"
#include "mcg/matching.hpp"
#include "mcg/tightcut.hpp"

namespace mcg {

namespace {

void record_failure(SelftestStats& st, const Multigraph& g, const std::string& what)
{
    st.failures++;
    if (st.failure_samples.size() < 20)
        st.failure_samples.push_back(what + ": " + emit_graph(underlying_simple(g),
                                                              GraphFormat::Graph6));
}

int max_tutte_deficiency(const Multigraph& g)
{
    int n = g.vertex_count();
    uint64_t full = g.full_mask();
    int best = -n - 1;
    for (uint64_t s = 0; s < (uint64_t(1) << n); ++s)
        best = std::max(best, odd_component_count(g, full & ~s) - __builtin_popcountll(s));
    return best;
}

}  // namespace

SelftestStats run_selftest(int max_n, std::ostream* progress)
{
    SelftestStats st;
    GraphEnumerator gen(false);
    for (int n = 1; n <= max_n; ++n) {
        uint64_t level_count = 0;
        gen.for_each(n, GraphClass::Connected, [&](const canon::SimpleGraph& sg) {
            level_count++;
            st.graphs++;
            Multigraph g = canon::to_multigraph(sg);

            // blossom vs. enumeration
            auto pms = enumerate_pm_masks(g);
            bool pm_blossom = has_perfect_matching(g);
            if (pm_blossom != !pms.empty()) record_failure(st, g, "matchability mismatch");
            for (int pos = 0; pos < g.edge_count(); ++pos) {
                st.allowed_comparisons++;
                bool enumerated = false;
                for (uint64_t pm : pms)
                    if ((pm >> pos) & 1) {
                        enumerated = true;
                        break;
                    }
                if (is_allowed(g, g.edges()[pos].id) != enumerated)
                    record_failure(st, g, "allowed-edge mismatch");
            }

            // deficiency form and the matching-size identity
            st.tutte_comparisons++;
            int maxdef = max_tutte_deficiency(g);
            if (pm_blossom != (maxdef <= 0)) record_failure(st, g, "deficiency mismatch");
            Matching mm = max_matching(g);
            if (2 * mm.size() != g.vertex_count() - maxdef)
                record_failure(st, g, "matching-size identity mismatch");
            uint64_t covered = 0;
            for (EdgeId id : mm.edge_ids) {
                const Edge& e = g.edge(id);
                uint64_t bits = (uint64_t(1) << e.u) | (uint64_t(1) << e.v);
                if (covered & bits) record_failure(st, g, "matching reuses a vertex");
                covered |= bits;
            }

            bool mc = is_matching_covered(g);
            if (mc) {
                // pairwise tight-cut test vs. the definition, on all proper shores
                uint64_t full = g.full_mask();
                for (uint64_t shore = 1; shore < full; ++shore) {
                    st.tight_shore_comparisons++;
                    bool pairwise = is_tight_cut(g, VertexSet(shore));
                    bool definitional = is_tight_cut_pm_masks(g, pms, VertexSet(shore));
                    if (pairwise != definitional) {
                        record_failure(st, g, "tight-cut tester mismatch");
                        break;
                    }
                }

                // structured passes vs. the exhaustive scan
                st.structured_cut_comparisons++;
                bool structured = false;
                for (const TightCut& tc : barrier_cuts(g))
                    if (!tc.cut.trivial && is_tight_cut_pm_masks(g, pms, tc.cut.shore)) {
                        structured = true;
                        break;
                    }
                if (!structured) structured = !two_separation_cuts(g).empty();
                bool brute = false;
                for (uint64_t shore = 1; shore < full && !brute; ++shore) {
                    int k = __builtin_popcountll(shore);
                    if (!(k & 1) || k < 3 || g.vertex_count() - k < 3) continue;
                    if (is_tight_cut_pm_masks(g, pms, VertexSet(shore))) brute = true;
                }
                if (structured != brute) record_failure(st, g, "structured tight-cut gap");
            }
        });
        if (progress)
            *progress << "selftest: n=" << n << " connected graphs=" << level_count
                      << " failures so far=" << st.failures << "\n";
    }

    // brace recognition vs. 2-extendability on bipartite graphs
    GraphEnumerator bip(true);
    int bip_max = std::min(max_n + 2, 12);
    for (int n = 6; n <= bip_max; ++n) {
        bip.for_each(n, GraphClass::BipartiteConnected, [&](const canon::SimpleGraph& sg) {
            st.bipartite_graphs++;
            st.brace_comparisons++;
            Multigraph g = canon::to_multigraph(sg);
            if (is_brace(g) != is_n_extendable(g, 2))
                record_failure(st, g, "brace vs 2-extendable mismatch");
        });
        if (progress)
            *progress << "selftest: bipartite n=" << n << " done, failures so far=" << st.failures
                      << "\n";
    }
    return st;
}

}  // namespace mcg

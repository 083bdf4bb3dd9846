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

#include "mcg/props.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "mcg/families.hpp"
#include "mcg/matching.hpp"

namespace mcg {

const char* verdict_name(Verdict v)
{
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::NotApplicable: return "not_applicable";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// GraphAnalysis

bool GraphAnalysis::connected()
{
    if (!connected_) connected_ = is_connected(g);
    return *connected_;
}

bool GraphAnalysis::bipartite()
{
    if (!bipartite_) bipartite_ = is_bipartite(g);
    return *bipartite_;
}

std::optional<std::pair<VertexSet, VertexSet>> GraphAnalysis::parts()
{
    if (!parts_ready_) {
        parts_ready_ = true;
        if (connected() && g.vertex_count() > 0) parts_ = bipartition(g);
    }
    return parts_;
}

bool GraphAnalysis::matching_covered()
{
    if (!mc_) mc_ = is_matching_covered(g);
    return *mc_;
}

bool GraphAnalysis::minimal_mc()
{
    if (!minimal_) minimal_ = matching_covered() && removable_count_capped(1) == 0;
    return *minimal_;
}

bool GraphAnalysis::bicritical()
{
    if (!bicritical_) bicritical_ = is_bicritical(g);
    return *bicritical_;
}

bool GraphAnalysis::three_connected()
{
    if (!three_connected_) three_connected_ = is_three_connected(g);
    return *three_connected_;
}

bool GraphAnalysis::simple()
{
    if (!simple_) {
        bool s = true;
        for (const Edge& e : g.edges())
            if (g.multiplicity(e.u, e.v) > 1) {
                s = false;
                break;
            }
        simple_ = s;
    }
    return *simple_;
}

bool GraphAnalysis::brick()
{
    if (!brick_) brick_ = g.vertex_count() >= 4 && bicritical() && three_connected();
    return *brick_;
}

bool GraphAnalysis::brace()
{
    if (!brace_)
        brace_ = matching_covered() && bipartite() && !nontrivial_tight_cut().has_value();
    return *brace_;
}

int GraphAnalysis::removable_count_capped(int cap)
{
    while (static_cast<int>(removable_.size()) < cap && !removable_complete_) {
        if (removable_scanned_ >= g.edge_count()) {
            removable_complete_ = true;
            break;
        }
        int pos = removable_scanned_++;
        if (is_mc_without_edge_pos(g, pos)) removable_.push_back(g.edges()[pos].id);
        if (removable_scanned_ >= g.edge_count()) removable_complete_ = true;
    }
    return static_cast<int>(removable_.size());
}

const std::vector<EdgeId>& GraphAnalysis::removable()
{
    removable_count_capped(g.edge_count() + 1);
    return removable_;
}

const std::vector<RemovableClass>& GraphAnalysis::classes()
{
    if (!classes_) classes_ = removable_classes(g);
    return *classes_;
}

const std::vector<Barrier>& GraphAnalysis::all_barriers()
{
    if (!barriers_) barriers_ = barriers(g, /*only_maximal=*/false);
    return *barriers_;
}

const std::vector<Barrier>& GraphAnalysis::maximal_barriers()
{
    if (!max_barriers_) {
        // derive maximal ones from the full list
        const auto& all = all_barriers();
        std::vector<Barrier> maximal;
        for (const Barrier& b : all) {
            bool contained = false;
            for (const Barrier& c : all)
                if (c.members.bits != b.members.bits && (b.members.bits & ~c.members.bits) == 0) {
                    contained = true;
                    break;
                }
            if (!contained) maximal.push_back(b);
        }
        max_barriers_ = std::move(maximal);
    }
    return *max_barriers_;
}

const std::vector<VertexSet>& GraphAnalysis::twoseps()
{
    if (!twoseps_) twoseps_ = two_separations(g);
    return *twoseps_;
}

const std::vector<TightCut>& GraphAnalysis::twosep_cuts()
{
    if (!twosep_cuts_) {
        if (twoseps().empty())
            twosep_cuts_ = std::vector<TightCut>{};
        else
            twosep_cuts_ = two_separation_cuts(g);
    }
    return *twosep_cuts_;
}

const std::vector<uint64_t>& GraphAnalysis::pm_masks()
{
    if (!pms_) pms_ = enumerate_pm_masks(g, kMaxVertices);
    return *pms_;
}

const std::optional<TightCut>& GraphAnalysis::nontrivial_tight_cut()
{
    if (ntc_) return *ntc_;
    // Same strategy as find_nontrivial_tight_cut, but sharing the cached
    // barriers, 2-separation cuts and perfect matchings of this analysis.
    int n = g.vertex_count();
    bool can_enum = n <= kDefaultEnumerationBound && g.edge_count() <= 64;
    std::optional<TightCut> found;
    for (const Barrier& b : maximal_barriers()) {
        if (found) break;
        for (uint64_t comp : component_masks(g, g.full_mask() & ~b.members.bits)) {
            int k = __builtin_popcountll(comp);
            if (!(k & 1) || k < 3 || n - k < 3) continue;
            VertexSet shore(comp);
            bool tight = can_enum ? is_tight_cut_pm_masks(g, pm_masks(), shore)
                                  : is_tight_cut(g, shore);
            if (!tight) continue;
            TightCut tc;
            tc.cut = edge_cut(g, shore);
            tc.provenance = TightCut::Provenance::BarrierCut;
            tc.barrier = b;
            tc.component = shore;
            found = std::move(tc);
            break;
        }
    }
    if (!found && !twosep_cuts().empty()) found = twosep_cuts().front();
    if (!found && n <= kShoreScanBound && can_enum) {
        uint64_t full = g.full_mask();
        for (uint64_t half = 0; half < (uint64_t(1) << (n - 1)) && !found; ++half) {
            uint64_t shore = (half << 1) | 1;
            int k = __builtin_popcountll(shore);
            if (!(k & 1) || k < 3 || n - k < 3) continue;
            if (is_tight_cut_pm_masks(g, pm_masks(), VertexSet(shore))) {
                uint64_t other = full & ~shore;
                TightCut tc;
                tc.cut = edge_cut(g, VertexSet(std::min(shore, other)));
                tc.provenance = TightCut::Provenance::BruteForce;
                found = std::move(tc);
            }
        }
    }
    ntc_ = std::move(found);
    return *ntc_;
}

// ---------------------------------------------------------------------------
// helpers

namespace {

Json edge_json(const Multigraph& g, EdgeId id)
{
    const Edge& e = g.edge(id);
    return Json::array({e.id, e.u, e.v});
}

Json edges_json(const Multigraph& g, const std::vector<EdgeId>& ids)
{
    Json arr = Json::array();
    for (EdgeId id : ids) arr.push_back(edge_json(g, id));
    return arr;
}

Json vset_json(const VertexSet& s)
{
    Json arr = Json::array();
    for (int v : s.members()) arr.push_back(v);
    return arr;
}

bool edges_disjoint(const Multigraph& g, EdgeId a, EdgeId b)
{
    const Edge& x = g.edge(a);
    const Edge& y = g.edge(b);
    return !x.touches(y.u) && !x.touches(y.v);
}

std::vector<int> cubic_vertices(const Multigraph& g)
{
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 3) out.push_back(v);
    return out;
}

std::optional<std::pair<EdgeId, EdgeId>> disjoint_pair(const Multigraph& g,
                                                       const std::vector<EdgeId>& ids)
{
    for (size_t i = 0; i < ids.size(); ++i)
        for (size_t j = i + 1; j < ids.size(); ++j)
            if (edges_disjoint(g, ids[i], ids[j])) return std::make_pair(ids[i], ids[j]);
    return std::nullopt;
}

CheckResult na(const std::string& id)
{
    return CheckResult{id, Verdict::NotApplicable, Json::object(), ""};
}

CheckResult result(const std::string& id, bool ok, Json witness, std::string note = "")
{
    return CheckResult{id, ok ? Verdict::Pass : Verdict::Fail, std::move(witness),
                       std::move(note)};
}

// vertices covering every edge in `ids` (candidates for a shared vertex h)
std::vector<int> covering_vertices(const Multigraph& g, const std::vector<EdgeId>& ids)
{
    uint64_t cover = g.full_mask();
    for (EdgeId id : ids) {
        const Edge& e = g.edge(id);
        cover &= (uint64_t(1) << e.u) | (uint64_t(1) << e.v);
        if (!cover) break;
    }
    std::vector<int> out;
    for (uint64_t b = cover; b; b &= b - 1) out.push_back(__builtin_ctzll(b));
    return out;
}

// ---------------------------------------------------------------------------
// the checks

CheckResult check_bip_2lines(GraphAnalysis& a)
{
    const std::string id = "bip-2lines";
    int n = a.g.vertex_count();
    if (n < 4 || !a.bipartite() || !a.minimal_mc()) return na(id);
    auto two = k_lines(a.g, 2);
    int bound = (n + 15) / 6;
    int ceil_bound = (n + 15 + 5) / 6;
    Json w{{"two_lines", edges_json(a.g, two)},
           {"count", two.size()},
           {"bound", bound}};
    std::string note;
    if (static_cast<int>(two.size()) >= bound && static_cast<int>(two.size()) < ceil_bound)
        note = "count meets the floor bound but not the ceiling reading";
    return result(id, static_cast<int>(two.size()) >= bound, std::move(w), note);
}

CheckResult check_main_3lines(GraphAnalysis& a)
{
    const std::string id = "main-3lines";
    int n = a.g.vertex_count();
    if (n < 4 || a.g.min_degree() < 3 || !a.minimal_mc()) return na(id);
    auto three = k_lines(a.g, 3);
    auto pair = disjoint_pair(a.g, three);
    auto cubic = cubic_vertices(a.g);
    Json w{{"three_lines", edges_json(a.g, three)}, {"cubic", cubic}};
    if (pair) w["nonadjacent_pair"] = Json::array({edge_json(a.g, pair->first), edge_json(a.g, pair->second)});
    return result(id, pair.has_value() && cubic.size() >= 4, std::move(w));
}

CheckResult check_two_or_three(GraphAnalysis& a)
{
    const std::string id = "two-or-three";
    int n = a.g.vertex_count();
    if (n < 4 || !a.minimal_mc()) return na(id);
    auto ids = k_lines(a.g, 2);
    auto three = k_lines(a.g, 3);
    ids.insert(ids.end(), three.begin(), three.end());
    std::sort(ids.begin(), ids.end());
    auto pair = disjoint_pair(a.g, ids);
    Json w{{"candidates", edges_json(a.g, ids)}};
    if (pair) w["nonadjacent_pair"] = Json::array({edge_json(a.g, pair->first), edge_json(a.g, pair->second)});
    return result(id, pair.has_value(), std::move(w));
}

CheckResult check_delta_2_or_3(GraphAnalysis& a)
{
    const std::string id = "delta-2-or-3";
    if (a.g.vertex_count() == 2 && a.g.edge_count() == 1) return na(id);  // K2
    if (!a.minimal_mc()) return na(id);
    int d = a.g.min_degree();
    return result(id, d == 2 || d == 3, Json{{"min_degree", d}});
}

CheckResult check_nonre_forest(GraphAnalysis& a)
{
    const std::string id = "nonre-forest";
    int n = a.g.vertex_count();
    if (n < 4 || a.g.min_degree() < 3 || !a.bipartite() || !a.matching_covered()) return na(id);
    std::vector<EdgeId> nonremovable;
    const auto& rem = a.removable();
    for (const Edge& e : a.g.edges())
        if (!std::binary_search(rem.begin(), rem.end(), e.id)) nonremovable.push_back(e.id);
    auto [ok, cycle] = forest_check(a.g, nonremovable);
    Json w{{"nonremovable", edges_json(a.g, nonremovable)}};
    if (!ok) w["cycle"] = edges_json(a.g, cycle);
    return result(id, ok, std::move(w));
}

CheckResult check_nonre_two_per_side(GraphAnalysis& a)
{
    const std::string id = "nonre-two-per-side";
    int n = a.g.vertex_count();
    if (n < 4 || a.g.min_degree() < 3 || !a.bipartite() || !a.matching_covered()) return na(id);
    auto parts = a.parts();
    if (!parts) return na(id);
    const auto& rem = a.removable();
    std::vector<int> load(n, 0);
    for (const Edge& e : a.g.edges())
        if (!std::binary_search(rem.begin(), rem.end(), e.id)) {
            load[e.u]++;
            load[e.v]++;
        }
    auto count_side = [&](const VertexSet& side) {
        int c = 0;
        for (int v : side.members())
            if (load[v] <= 2) c++;
        return c;
    };
    int ca = count_side(parts->first), cb = count_side(parts->second);
    Json w{{"low_vertices_a", ca}, {"low_vertices_b", cb}};
    return result(id, ca >= 2 && cb >= 2, std::move(w));
}

CheckResult check_brick_classes(GraphAnalysis& a)
{
    const std::string id = "brick-classes";
    if (!a.brick()) return na(id);
    const auto& classes = a.classes();
    int singles = 0;
    for (const auto& rc : classes)
        if (rc.kind == RemovableClass::Kind::Single) singles++;
    int delta = a.g.max_degree();
    bool exceptional = are_isomorphic(a.g, gen_family(Family::K4)) ||
                       are_isomorphic(a.g, gen_family(Family::Prism));
    bool ok = static_cast<int>(classes.size()) >= delta &&
              (exceptional || singles >= delta - 2);
    Json w{{"classes", classes.size()},
           {"removable_edges", singles},
           {"max_degree", delta},
           {"exceptional", exceptional}};
    return result(id, ok, std::move(w));
}

CheckResult check_nearbi_nonadj(GraphAnalysis& a)
{
    const std::string id = "nearbi-nonadj";
    if (!a.simple() || !a.brick()) return na(id);
    if (are_isomorphic(a.g, gen_family(Family::K4)) ||
        are_isomorphic(a.g, gen_family(Family::Prism)) ||
        (a.g.vertex_count() == 8 && are_isomorphic(a.g, gen_family(Family::R8))))
        return na(id);
    if (!is_near_bipartite(a.g)) return na(id);
    auto pair = disjoint_pair(a.g, a.removable());
    Json w{{"removable", edges_json(a.g, a.removable())}};
    if (pair) w["nonadjacent_pair"] = Json::array({edge_json(a.g, pair->first), edge_json(a.g, pair->second)});
    return result(id, pair.has_value(), std::move(w));
}

// hubs h with |R ∩ star(h)| = 1 for every removable class R
std::vector<int> wheel_like_hubs(GraphAnalysis& a)
{
    std::vector<int> hubs;
    for (int h = 0; h < a.g.vertex_count(); ++h) {
        bool ok = true;
        for (const RemovableClass& rc : a.classes()) {
            int meets = a.g.edge(rc.e).touches(h) ? 1 : 0;
            if (rc.kind == RemovableClass::Kind::Doubleton && a.g.edge(rc.f).touches(h)) meets++;
            if (meets != 1) {
                ok = false;
                break;
            }
        }
        if (ok) hubs.push_back(h);
    }
    return hubs;
}

CheckResult check_wl_brick_hub(GraphAnalysis& a)
{
    const std::string id = "wl-brick-hub";
    if (a.g.vertex_count() < 6 || !a.brick()) return na(id);
    auto hubs = wheel_like_hubs(a);
    if (hubs.empty()) return na(id);
    const auto& rem = a.removable();
    Json bad = Json::array();
    for (int h : hubs)
        for (const auto& [w, eid] : a.g.incident(h))
            if (!std::binary_search(rem.begin(), rem.end(), eid))
                bad.push_back(Json::array({h, edge_json(a.g, eid)}));
    Json w{{"hubs", hubs}};
    if (!bad.empty()) w["nonremovable_hub_edges"] = bad;
    return result(id, bad.empty(), std::move(w));
}

CheckResult check_brick_cubic_re(GraphAnalysis& a)
{
    const std::string id = "brick-cubic-re";
    if (!a.brick()) return na(id);
    Multigraph us = underlying_simple(a.g);
    bool has_doubleton = false;
    for (const auto& rc : removable_classes(us))
        if (rc.kind == RemovableClass::Kind::Doubleton) {
            has_doubleton = true;
            break;
        }
    if (!has_doubleton) return na(id);
    auto three = k_lines(a.g, 3);
    std::vector<int> hubs;
    for (int h : covering_vertices(a.g, a.removable())) {
        bool all3 = true;
        for (EdgeId t : three)
            if (!a.g.edge(t).touches(h)) {
                all3 = false;
                break;
            }
        if (all3) hubs.push_back(h);
    }
    if (hubs.empty()) return na(id);
    bool ok = true;
    for (int h : hubs) {
        int doubled = 0;
        for (uint64_t b = a.g.neighbors(h); b; b &= b - 1)
            if (a.g.multiplicity(h, __builtin_ctzll(b)) >= 2) doubled++;
        if (a.g.vertex_count() != 4 || doubled < 2) ok = false;
    }
    return result(id, ok, Json{{"hubs", hubs}, {"vertices", a.g.vertex_count()}});
}

CheckResult check_bicrit_nore_cubic(GraphAnalysis& a)
{
    const std::string id = "bicrit-nore-cubic";
    if (!a.bicritical() || a.removable_count_capped(1) != 0) return na(id);
    auto cubic = cubic_vertices(a.g);
    return result(id, cubic.size() >= 4, Json{{"cubic", cubic}});
}

CheckResult check_bicrit_nore_3lines(GraphAnalysis& a)
{
    const std::string id = "bicrit-nore-3lines";
    if (!a.bicritical() || a.removable_count_capped(1) != 0) return na(id);
    auto three = k_lines(a.g, 3);
    bool ok = three.size() >= 2;
    Json bad = Json::array();
    for (const Edge& f : a.g.edges()) {
        bool found = false;
        for (EdgeId t : three)
            if (t != f.id && edges_disjoint(a.g, t, f.id)) {
                found = true;
                break;
            }
        if (!found) {
            ok = false;
            bad.push_back(edge_json(a.g, f.id));
        }
    }
    Json w{{"three_lines", edges_json(a.g, three)}};
    if (!bad.empty()) w["uncovered_edges"] = bad;
    return result(id, ok, std::move(w));
}

CheckResult check_wl_bicrit(GraphAnalysis& a)
{
    const std::string id = "wl-bicrit";
    if (!a.bicritical() || a.removable_count_capped(1) == 0) return na(id);
    auto hubs = covering_vertices(a.g, a.removable());
    if (hubs.empty()) return na(id);
    auto three = k_lines(a.g, 3);
    bool ok = true;
    for (int h : hubs) {
        int at_h = 0;
        for (EdgeId r : a.removable())
            if (a.g.edge(r).touches(h)) at_h++;
        bool avoiding = false;
        for (EdgeId t : three)
            if (!a.g.edge(t).touches(h)) {
                avoiding = true;
                break;
            }
        if (at_h < 3 && !avoiding) ok = false;
    }
    return result(id, ok, Json{{"hubs", hubs}, {"removable", edges_json(a.g, a.removable())}});
}

CheckResult check_one_re_3line(GraphAnalysis& a)
{
    const std::string id = "one-re-3line";
    if (a.g.min_degree() < 3 || !a.matching_covered()) return na(id);
    if (a.removable_count_capped(2) > 1) return na(id);
    auto three = k_lines(a.g, 3);
    const auto& rem = a.removable();
    Json w{{"removable", edges_json(a.g, rem)}, {"three_lines", edges_json(a.g, three)}};
    if (rem.size() == 1) {
        bool found = false;
        for (EdgeId t : three)
            if (t != rem[0] && edges_disjoint(a.g, t, rem[0])) {
                found = true;
                break;
            }
        return result(id, found, std::move(w));
    }
    // no removable edge: quantify over every edge
    for (const Edge& f : a.g.edges()) {
        bool found = false;
        for (EdgeId t : three)
            if (t != f.id && edges_disjoint(a.g, t, f.id)) {
                found = true;
                break;
            }
        if (!found) {
            w["uncovered_edge"] = edge_json(a.g, f.id);
            return result(id, false, std::move(w));
        }
    }
    return result(id, true, std::move(w));
}

CheckResult check_tight_contract_mc(GraphAnalysis& a)
{
    const std::string id = "tight-contract-mc";
    if (!a.matching_covered()) return na(id);
    const auto& cut = a.nontrivial_tight_cut();
    if (!cut) return na(id);
    VertexSet shore = cut->cut.shore;
    VertexSet other(a.g.full_mask() & ~shore.bits);
    bool mc1 = is_matching_covered(contract(a.g, other).graph);
    bool mc2 = is_matching_covered(contract(a.g, shore).graph);
    Json w{{"shore", vset_json(shore)}, {"contraction_mc", Json::array({mc1, mc2})}};
    return result(id, mc1 && mc2, std::move(w));
}

CheckResult check_barrier_indep(GraphAnalysis& a)
{
    const std::string id = "barrier-indep";
    if (!a.matching_covered()) return na(id);
    if (a.g.vertex_count() > kBarrierEnumerationBound) return na(id);
    for (const Barrier& b : a.all_barriers()) {
        for (uint64_t m = b.members.bits; m; m &= m - 1)
            if (a.g.neighbors(__builtin_ctzll(m)) & b.members.bits)
                return result(id, false, Json{{"dependent_barrier", vset_json(b.members)}});
        auto [odd, even] = component_parity_counts(a.g, a.g.full_mask() & ~b.members.bits);
        (void)odd;
        if (even != 0)
            return result(id, false, Json{{"barrier_with_even_component", vset_json(b.members)}});
    }
    return result(id, true, Json{{"barriers", a.all_barriers().size()}});
}

CheckResult check_maxbarrier_fc(GraphAnalysis& a)
{
    const std::string id = "maxbarrier-fc";
    if (a.g.vertex_count() > kBarrierEnumerationBound) return na(id);
    if (a.g.vertex_count() == 0 || !has_perfect_matching(a.g)) return na(id);
    MatchKit kit(a.g);
    for (const Barrier& b : a.maximal_barriers()) {
        for (uint64_t comp : component_masks(a.g, a.g.full_mask() & ~b.members.bits)) {
            int size = __builtin_popcountll(comp);
            if (size == 1) continue;  // single vertices are trivially fine
            if (!kit.factor_critical_masked(comp))
                return result(id, false,
                              Json{{"barrier", vset_json(b.members)},
                                   {"component", vset_json(VertexSet(comp))}});
        }
    }
    return result(id, true, Json{{"maximal_barriers", a.maximal_barriers().size()}});
}

CheckResult check_splice_mc(GraphAnalysis& a)
{
    const std::string id = "splice-mc";
    if (!a.matching_covered()) return na(id);
    if (2 * a.g.vertex_count() - 2 > kMaxVertices) return na(id);
    Multigraph s = splice_default(a.g, 0, a.g, 0);
    bool ok = is_matching_covered(s);
    return result(id, ok, Json{{"splice_vertices", s.vertex_count()}});
}

CheckResult check_twosep_bicritical(GraphAnalysis& a)
{
    const std::string id = "twosep-bicritical";
    if (!a.bicritical() || a.twoseps().empty()) return na(id);
    for (const TightCut& tc : a.twosep_cuts()) {
        VertexSet shore = tc.cut.shore;
        VertexSet other(a.g.full_mask() & ~shore.bits);
        bool b1 = is_bicritical(contract(a.g, other).graph);
        bool b2 = is_bicritical(contract(a.g, shore).graph);
        if (!b1 || !b2)
            return result(id, false,
                          Json{{"shore", vset_json(shore)}, {"bicritical", Json::array({b1, b2})}});
    }
    return result(id, true, Json{{"two_separations", a.twoseps().size()}});
}

CheckResult check_twosep_degree(GraphAnalysis& a)
{
    const std::string id = "twosep-degree";
    if (!a.bicritical() || a.twoseps().empty()) return na(id);
    for (const TightCut& tc : a.twosep_cuts()) {
        uint64_t inside = tc.cut.shore.bits & ~tc.pair.bits;
        uint64_t outside = a.g.full_mask() & ~tc.cut.shore.bits & ~tc.pair.bits;
        for (int s : tc.pair.members()) {
            int in_count = __builtin_popcountll(a.g.neighbors(s) & inside);
            int out_count = __builtin_popcountll(a.g.neighbors(s) & outside);
            if (in_count < 2 || out_count < 2)
                return result(id, false,
                              Json{{"pair", vset_json(tc.pair)},
                                   {"shore", vset_json(tc.cut.shore)},
                                   {"vertex", s},
                                   {"inside_neighbors", in_count},
                                   {"outside_neighbors", out_count}});
        }
    }
    return result(id, true, Json{{"two_separations", a.twoseps().size()}});
}

CheckResult check_twosep_brick_shores(GraphAnalysis& a)
{
    const std::string id = "twosep-brick-shores";
    if (!a.bicritical() || a.three_connected()) return na(id);
    std::vector<uint64_t> shores;
    for (const TightCut& tc : a.twosep_cuts()) shores.push_back(tc.cut.shore.bits);
    std::sort(shores.begin(), shores.end());
    shores.erase(std::unique(shores.begin(), shores.end()), shores.end());
    std::vector<bool> outer_brick(shores.size());
    for (size_t i = 0; i < shores.size(); ++i) {
        VertexSet other(a.g.full_mask() & ~shores[i]);
        outer_brick[i] = is_brick(contract(a.g, other).graph);
    }
    for (size_t i = 0; i < shores.size(); ++i) {
        if (!outer_brick[i]) continue;
        for (size_t j = 0; j < shores.size(); ++j) {
            if (!outer_brick[j]) continue;
            if (shores[j] & shores[i]) continue;  // need Y' inside the complement of Y
            return result(id, true,
                          Json{{"shore_y", vset_json(VertexSet(shores[i]))},
                               {"shore_y2", vset_json(VertexSet(shores[j]))}});
        }
    }
    return result(id, false, Json{{"shores_tested", shores.size()}});
}

CheckResult check_conj_minimal_brace(GraphAnalysis& a)
{
    const std::string id = "conj-minimal-brace";
    if (a.g.vertex_count() < 6 || !a.brace() || !is_minimal_brace(a.g)) return na(id);
    auto three = k_lines(a.g, 3);
    return result(id, !three.empty(), Json{{"three_lines", edges_json(a.g, three)}});
}

CheckResult check_lou_cubic(GraphAnalysis& a)
{
    const std::string id = "lou-cubic";
    int n = a.g.vertex_count();
    if (n < 6 || !a.brace() || !is_minimal_brace(a.g)) return na(id);
    auto cubic = cubic_vertices(a.g);
    int bound = (2 * n + 2 + 4) / 5;  // ceil((2n+2)/5)
    return result(id, static_cast<int>(cubic.size()) >= bound,
                  Json{{"cubic", cubic}, {"bound", bound}});
}

using CheckFn = CheckResult (*)(GraphAnalysis&);

struct Registered {
    CheckInfo info;
    CheckFn fn;
};

const std::vector<Registered>& registry()
{
    static const std::vector<Registered> r = {
        {{"bip-2lines", "2-line count bound in minimal bipartite hosts",
          "every minimal matching covered bipartite graph with at least 4 vertices has at "
          "least floor((n+15)/6) 2-lines"},
         check_bip_2lines},
        {{"main-3lines", "two nonadjacent 3-lines and four cubic vertices",
          "every minimal matching covered graph with at least 4 vertices and minimum degree 3 "
          "has two nonadjacent 3-lines and at least 4 cubic vertices"},
         check_main_3lines},
        {{"two-or-three", "two nonadjacent low-degree lines",
          "every minimal matching covered graph with at least 4 vertices has two nonadjacent "
          "edges, each a 2-line or a 3-line"},
         check_two_or_three},
        {{"delta-2-or-3", "minimum degree of minimal hosts",
          "the minimum degree of a minimal matching covered graph other than K2 is 2 or 3"},
         check_delta_2_or_3},
        {{"nonre-forest", "nonremovable edges form a forest",
          "in a bipartite matching covered graph with at least 4 vertices and minimum degree "
          "3, the nonremovable edges induce a forest"},
         check_nonre_forest},
        {{"nonre-two-per-side", "two low-load vertices per side",
          "in a bipartite matching covered graph with at least 4 vertices and minimum degree "
          "3, each side has at least two vertices incident with at most two nonremovable "
          "edges"},
         check_nonre_two_per_side},
        {{"brick-classes", "removable classes of a brick",
          "a brick has at least max-degree removable classes, and unless it is K4 or the "
          "triangular prism, at least max-degree minus 2 removable edges"},
         check_brick_classes},
        {{"nearbi-nonadj", "nonadjacent removable edges in near-bipartite bricks",
          "a simple near-bipartite brick other than K4, the triangular prism and R8 has two "
          "nonadjacent removable edges"},
         check_nearbi_nonadj},
        {{"wl-brick-hub", "hub edges of wheel-like bricks",
          "in a wheel-like brick with at least 6 vertices, every edge at the hub is "
          "removable"},
         check_wl_brick_hub},
        {{"brick-cubic-re", "bricks with concentrated removable edges",
          "a brick whose removable edges all meet one vertex h, whose underlying simple graph "
          "has a removable doubleton, and whose 3-lines all meet h, has 4 vertices and "
          "parallel edges from h to at least two neighbours"},
         check_brick_cubic_re},
        {{"bicrit-nore-cubic", "cubic vertices in bicritical graphs without removable edges",
          "a bicritical graph without removable edges has at least four cubic vertices"},
         check_bicrit_nore_cubic},
        {{"bicrit-nore-3lines", "3-lines in bicritical graphs without removable edges",
          "a bicritical graph without removable edges has at least two 3-lines, and for every "
          "edge f some 3-line not adjacent to f"},
         check_bicrit_nore_3lines},
        {{"wl-bicrit", "bicritical graphs with concentrated removable edges",
          "if all removable edges of a bicritical graph meet a vertex h, then h meets at "
          "least 3 removable edges or some 3-line avoids h"},
         check_wl_bicrit},
        {{"one-re-3line", "3-line avoiding the lone removable edge",
          "a matching covered graph with minimum degree 3 and at most one removable edge has "
          "a 3-line not adjacent to that edge (to every edge when none is removable)"},
         check_one_re_3line},
        {{"tight-contract-mc", "contractions of a tight cut",
          "both contractions of a nontrivial tight cut of a matching covered graph are "
          "matching covered"},
         check_tight_contract_mc},
        {{"barrier-indep", "barriers are independent",
          "every nonempty barrier of a matching covered graph is independent and leaves no "
          "even component"},
         check_barrier_indep},
        {{"maxbarrier-fc", "components beside maximal barriers",
          "every component left by deleting a maximal barrier of a graph with a perfect "
          "matching is factor-critical"},
         check_maxbarrier_fc},
        {{"splice-mc", "splicing preserves matching coveredness",
          "the splice of a matching covered graph with a copy of itself is matching covered"},
         check_splice_mc},
        {{"twosep-bicritical", "contractions of 2-separation cuts",
          "both contractions of a 2-separation cut of a bicritical graph are bicritical"},
         check_twosep_bicritical},
        {{"twosep-degree", "neighbour spread of a 2-separation",
          "each vertex of a 2-separation of a bicritical graph has at least two neighbours "
          "strictly inside each side of an associated cut"},
         check_twosep_degree},
        {{"twosep-brick-shores", "nested brick shores",
          "a bicritical graph that is not 3-connected has 2-separation cuts with disjoint "
          "shores whose outer contractions are both bricks"},
         check_twosep_brick_shores},
        {{"conj-minimal-brace", "minimal braces have a 3-line (conjecture)",
          "every minimal brace with at least 6 vertices has a 3-line"},
         check_conj_minimal_brace},
        {{"lou-cubic", "cubic vertices of minimal braces",
          "every minimal brace with at least 6 vertices has at least ceil((2n+2)/5) cubic "
          "vertices"},
         check_lou_cubic},
    };
    return r;
}

}  // namespace

const std::vector<CheckInfo>& list_checks()
{
    static const std::vector<CheckInfo> infos = [] {
        std::vector<CheckInfo> v;
        for (const auto& r : registry()) v.push_back(r.info);
        return v;
    }();
    return infos;
}

bool is_known_check(const std::string& check_id)
{
    for (const auto& r : registry())
        if (r.info.id == check_id) return true;
    return false;
}

CheckResult run_check_with(const std::string& check_id, GraphAnalysis& a)
{
    for (const auto& r : registry())
        if (r.info.id == check_id) return r.fn(a);
    std::string known;
    for (const auto& r : registry()) known += (known.empty() ? "" : ", ") + r.info.id;
    throw Error("unknown check id '" + check_id + "'; known: " + known);
}

CheckResult run_check(const std::string& check_id, const Multigraph& g)
{
    GraphAnalysis a(g);
    return run_check_with(check_id, a);
}

bool is_minimal_brace(const Multigraph& g)
{
    if (!is_brace(g)) return false;
    for (const Edge& e : g.edges())
        if (is_brace(g.without_edge(e.id))) return false;
    return true;
}

}  // namespace mcg

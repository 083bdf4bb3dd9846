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

#ifndef MCG_PROPS_HPP
#define MCG_PROPS_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mcg/classify.hpp"
#include "mcg/graph.hpp"
#include "mcg/tightcut.hpp"

namespace mcg {

using Json = nlohmann::ordered_json;

enum class Verdict { Pass, Fail, NotApplicable };

const char* verdict_name(Verdict v);

/// Outcome of one registered check on one graph. A fail carries a witness
/// payload sufficient to re-verify the counterexample by hand.
struct CheckResult {
    std::string check_id;
    Verdict verdict;
    Json witness;
    std::string note;
};

struct CheckInfo {
    std::string id;
    std::string summary;  // one line
    std::string claim;    // the property being verified, spelled out
};

/// Lazily computed predicates shared by all checks run on one graph.
class GraphAnalysis {
public:
    explicit GraphAnalysis(const Multigraph& graph) : g(graph) {}

    const Multigraph& g;

    bool connected();
    bool bipartite();
    std::optional<std::pair<VertexSet, VertexSet>> parts();  // nullopt unless connected bipartite
    bool matching_covered();
    bool minimal_mc();
    bool bicritical();
    bool brick();
    bool brace();
    bool three_connected();
    bool simple();

    /// Removable edges found so far; grows monotonically up to `cap`.
    int removable_count_capped(int cap);
    const std::vector<EdgeId>& removable();          // all removable edges
    const std::vector<RemovableClass>& classes();    // full removable classes
    const std::vector<Barrier>& all_barriers();
    const std::vector<Barrier>& maximal_barriers();
    const std::vector<VertexSet>& twoseps();
    const std::vector<TightCut>& twosep_cuts();
    const std::vector<uint64_t>& pm_masks();  // perfect matchings over edge positions
    const std::optional<TightCut>& nontrivial_tight_cut();

private:
    std::optional<bool> connected_, bipartite_, mc_, minimal_, bicritical_, brick_, brace_,
        simple_, three_connected_;
    std::optional<std::pair<VertexSet, VertexSet>> parts_;
    bool parts_ready_ = false;
    std::vector<EdgeId> removable_;
    int removable_scanned_ = 0;  // edge positions examined so far
    bool removable_complete_ = false;
    std::optional<std::vector<RemovableClass>> classes_;
    std::optional<std::vector<Barrier>> barriers_, max_barriers_;
    std::optional<std::vector<VertexSet>> twoseps_;
    std::optional<std::vector<TightCut>> twosep_cuts_;
    std::optional<std::vector<uint64_t>> pms_;
    std::optional<std::optional<TightCut>> ntc_;
};

/// Registered checks, in a stable order.
const std::vector<CheckInfo>& list_checks();

bool is_known_check(const std::string& check_id);

CheckResult run_check(const std::string& check_id, const Multigraph& g);

/// Same, but against a caller-owned analysis so sweeps share work across
/// checks on the same graph.
CheckResult run_check_with(const std::string& check_id, GraphAnalysis& a);

/// A brace whose every single-edge deletion is not a brace.
bool is_minimal_brace(const Multigraph& g);

}  // namespace mcg

#endif  // MCG_PROPS_HPP

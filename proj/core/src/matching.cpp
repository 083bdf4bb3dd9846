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

#include "mcg/matching.hpp"

#include <algorithm>
#include <functional>

namespace mcg {

bool Matching::contains(EdgeId id) const
{
    return std::binary_search(edge_ids.begin(), edge_ids.end(), id);
}

// ---------------------------------------------------------------------------
// MatchKit: Edmonds blossom search over bitset adjacency with a vertex mask.

MatchKit::MatchKit(const Multigraph& g) : n_(g.vertex_count()), full_(g.full_mask())
{
    for (int v = 0; v < n_; ++v) rows_[v] = g.neighbors(v);
    std::fill(match_, match_ + n_, -1);
}

MatchKit::MatchKit(int n, const uint64_t* adj_rows) : n_(n)
{
    full_ = (n == 64) ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
    for (int v = 0; v < n_; ++v) rows_[v] = adj_rows[v];
    std::fill(match_, match_ + n_, -1);
}

void MatchKit::mark_path(int v, int b, int child)
{
    while (base_v_[v] != b) {
        blossom_[base_v_[v]] = true;
        blossom_[base_v_[match_[v]]] = true;
        parent_[v] = child;
        child = match_[v];
        v = parent_[match_[v]];
    }
}

int MatchKit::lca(int a, int b)
{
    std::fill(path_mark_, path_mark_ + n_, false);
    int v = a;
    while (true) {
        v = base_v_[v];
        path_mark_[v] = true;
        if (match_[v] == -1) break;
        v = parent_[match_[v]];
    }
    v = b;
    while (true) {
        v = base_v_[v];
        if (path_mark_[v]) return v;
        v = parent_[match_[v]];
    }
}

int MatchKit::find_augmenting(int root, uint64_t mask)
{
    std::fill(used_, used_ + n_, false);
    std::fill(parent_, parent_ + n_, -1);
    for (int v = 0; v < n_; ++v) base_v_[v] = v;
    used_[root] = true;
    int head = 0, tail = 0;
    queue_[tail++] = root;
    while (head < tail) {
        int v = queue_[head++];
        uint64_t nb = rows_[v] & mask;
        while (nb) {
            int to = __builtin_ctzll(nb);
            nb &= nb - 1;
            if (base_v_[v] == base_v_[to] || match_[v] == to) continue;
            if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                int cur = lca(v, to);
                std::fill(blossom_, blossom_ + n_, false);
                mark_path(v, cur, to);
                mark_path(to, cur, v);
                for (int i = 0; i < n_; ++i) {
                    if (!((mask >> i) & 1)) continue;
                    if (blossom_[base_v_[i]]) {
                        base_v_[i] = cur;
                        if (!used_[i]) {
                            used_[i] = true;
                            queue_[tail++] = i;
                        }
                    }
                }
            } else if (parent_[to] == -1) {
                parent_[to] = v;
                if (match_[to] == -1) return to;
                used_[match_[to]] = true;
                queue_[tail++] = match_[to];
            }
        }
    }
    return -1;
}

void MatchKit::do_augment(int leaf)
{
    int v = leaf;
    while (v != -1) {
        int pv = parent_[v];
        int ppv = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = ppv;
    }
}

int MatchKit::solve(uint64_t mask)
{
    for (int v = 0; v < n_; ++v) {
        if (!((mask >> v) & 1)) {
            match_[v] = -1;
            continue;
        }
        if (match_[v] != -1 &&
            (!((mask >> match_[v]) & 1) || match_[match_[v]] != v))
            match_[v] = -1;
    }
    for (int v = 0; v < n_; ++v) {  // greedy warm start
        if (!((mask >> v) & 1) || match_[v] != -1) continue;
        uint64_t nb = rows_[v] & mask;
        while (nb) {
            int w = __builtin_ctzll(nb);
            nb &= nb - 1;
            if (match_[w] == -1) {
                match_[v] = w;
                match_[w] = v;
                break;
            }
        }
    }
    for (int v = 0; v < n_; ++v) {
        if (!((mask >> v) & 1) || match_[v] != -1) continue;
        int leaf = find_augmenting(v, mask);
        if (leaf != -1) do_augment(leaf);
    }
    int size = 0;
    for (int v = 0; v < n_; ++v)
        if (((mask >> v) & 1) && match_[v] > v) size++;
    return size;
}

int MatchKit::max_matching_size(uint64_t active_mask)
{
    std::fill(match_, match_ + n_, -1);
    return solve(active_mask);
}

bool MatchKit::has_pm(uint64_t active_mask)
{
    int k = __builtin_popcountll(active_mask);
    if (k & 1) return false;
    return max_matching_size(active_mask) * 2 == k;
}

void MatchKit::ensure_base()
{
    if (base_ready_) return;
    int size = max_matching_size(full_);
    std::copy(match_, match_ + n_, base_.begin());
    base_perfect_ = (2 * size == n_) && n_ > 0;
    base_ready_ = true;
}

bool MatchKit::has_pm_full()
{
    ensure_base();
    return base_perfect_;
}

const int* MatchKit::base_matching()
{
    ensure_base();
    return base_.data();
}

bool MatchKit::pm_avoiding_pair(VertexId u, VertexId v)
{
    ensure_base();
    if (n_ < 2 || ((n_ - 2) & 1)) return false;
    uint64_t mask = full_ & ~(uint64_t(1) << u) & ~(uint64_t(1) << v);
    if (!base_perfect_) {
        std::copy(base_.begin(), base_.begin() + n_, match_);
        return solve(mask) * 2 == n_ - 2;
    }
    if (base_[u] == v) return true;  // drop the matched pair
    // Re-seed from the base matching: the two partners become exposed and a
    // single augmenting search between them decides.
    std::copy(base_.begin(), base_.begin() + n_, match_);
    int a = match_[u];
    int b = match_[v];
    match_[a] = -1;
    match_[b] = -1;
    match_[u] = -1;
    match_[v] = -1;
    int leaf = find_augmenting(a, mask);
    if (leaf == -1) return false;
    do_augment(leaf);
    return true;
}

bool MatchKit::bicritical()
{
    if (n_ < 4 || (n_ & 1)) return false;
    ensure_base();
    if (!base_perfect_) return false;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!pm_avoiding_pair(u, v)) return false;
    return true;
}

bool MatchKit::factor_critical_masked(uint64_t mask)
{
    int k = __builtin_popcountll(mask);
    if (k < 3 || !(k & 1)) return false;
    int size = max_matching_size(mask);
    if (2 * size != k - 1) return false;
    int exposed = -1;
    for (uint64_t b = mask; b; b &= b - 1) {
        int v = __builtin_ctzll(b);
        if (match_[v] == -1) exposed = v;
    }
    if (find_augmenting(exposed, mask) != -1) return false;  // cannot happen at max size
    for (uint64_t b = mask; b; b &= b - 1)
        if (!used_[__builtin_ctzll(b)]) return false;
    return true;
}

bool MatchKit::factor_critical()
{
    if (n_ < 3 || !(n_ & 1)) return false;
    ensure_base();
    int size = 0;
    int exposed = -1;
    for (int v = 0; v < n_; ++v) {
        if (base_[v] > v) size++;
        if (base_[v] == -1) exposed = v;
    }
    if (2 * size != n_ - 1) return false;
    for (int v = 0; v < n_; ++v) {
        if (v == exposed) continue;
        uint64_t mask = full_ & ~(uint64_t(1) << v);
        std::copy(base_.begin(), base_.begin() + n_, match_);
        int a = match_[v];
        match_[a] = -1;
        match_[v] = -1;
        int leaf = find_augmenting(a, mask);
        if (leaf == -1) return false;
        do_augment(leaf);
    }
    return true;
}

// ---------------------------------------------------------------------------
// Public operations.

Matching max_matching(const Multigraph& g)
{
    MatchKit kit(g);
    const int* partner = kit.base_matching();
    Matching m;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int w = partner[v];
        if (w <= v) continue;
        EdgeId lowest = -1;
        for (const auto& [nb, id] : g.incident(v))
            if (nb == w && (lowest == -1 || id < lowest)) lowest = id;
        m.edge_ids.push_back(lowest);
    }
    std::sort(m.edge_ids.begin(), m.edge_ids.end());
    return m;
}

bool has_perfect_matching(const Multigraph& g)
{
    if (g.vertex_count() == 0) return true;
    MatchKit kit(g);
    return kit.has_pm_full();
}

int odd_components(const Multigraph& g, const VertexSet& s)
{
    if ((s.bits & ~g.full_mask()) != 0) throw Error("odd_components: S out of range");
    return odd_component_count(g, g.full_mask() & ~s.bits);
}

namespace {

// Backtracking over the lowest-index uncovered vertex; incident edges are
// tried in ascending id order. Positions refer to g.edges().
struct PmEnum {
    std::vector<std::vector<std::pair<int, int>>> inc;  // vertex -> (other, pos)
    std::vector<int> acc;

    explicit PmEnum(const Multigraph& g) : inc(g.vertex_count())
    {
        const auto& edges = g.edges();
        for (int pos = 0; pos < static_cast<int>(edges.size()); ++pos) {
            inc[edges[pos].u].push_back({edges[pos].v, pos});
            inc[edges[pos].v].push_back({edges[pos].u, pos});
        }
    }

    template <class Emit>
    void run(uint64_t uncovered, const Emit& emit)
    {
        if (!uncovered) {
            emit(acc);
            return;
        }
        int v = __builtin_ctzll(uncovered);
        for (const auto& [w, pos] : inc[v]) {
            if (!((uncovered >> w) & 1)) continue;
            acc.push_back(pos);
            run(uncovered & ~(uint64_t(1) << v) & ~(uint64_t(1) << w), emit);
            acc.pop_back();
        }
    }
};

}  // namespace

std::vector<Matching> enumerate_perfect_matchings(const Multigraph& g, int max_vertices)
{
    if (g.vertex_count() > max_vertices)
        throw Error("enumerate_perfect_matchings: graph exceeds the " +
                    std::to_string(max_vertices) + "-vertex bound");
    std::vector<Matching> out;
    if (g.vertex_count() & 1) return out;
    PmEnum pe(g);
    pe.run(g.full_mask(), [&](const std::vector<int>& positions) {
        Matching m;
        for (int pos : positions) m.edge_ids.push_back(g.edges()[pos].id);
        std::sort(m.edge_ids.begin(), m.edge_ids.end());
        out.push_back(std::move(m));
    });
    return out;
}

std::vector<uint64_t> enumerate_pm_masks(const Multigraph& g, int max_vertices)
{
    if (g.vertex_count() > max_vertices)
        throw Error("enumerate_pm_masks: graph exceeds the " + std::to_string(max_vertices) +
                    "-vertex bound");
    if (g.edge_count() > 64) throw Error("enumerate_pm_masks: more than 64 edges");
    std::vector<uint64_t> out;
    if (g.vertex_count() & 1) return out;
    PmEnum pe(g);
    pe.run(g.full_mask(), [&](const std::vector<int>& positions) {
        uint64_t mask = 0;
        for (int pos : positions) mask |= uint64_t(1) << pos;
        out.push_back(mask);
    });
    return out;
}

bool is_allowed(const Multigraph& g, EdgeId e)
{
    const Edge& edge = g.edge(e);  // throws for unknown ids
    MatchKit kit(g);
    if (!kit.has_pm_full()) return false;
    return kit.allowed_pair(edge.u, edge.v);
}

bool is_factor_critical(const Multigraph& g)
{
    MatchKit kit(g);
    return kit.factor_critical();
}

bool is_n_extendable(const Multigraph& g, int n)
{
    if (n < 1) throw Error("is_n_extendable: n must be >= 1");
    if (!is_connected(g)) throw Error("is_n_extendable requires a connected graph");
    int nv = g.vertex_count();
    if (nv < 2 * n + 2) return false;
    MatchKit kit(g);
    if (kit.max_matching_size(g.full_mask()) < n) return false;

    const auto& edges = g.edges();
    int m = static_cast<int>(edges.size());
    std::vector<int> stack;
    bool ok = true;
    std::function<void(int, uint64_t)> rec = [&](int start, uint64_t covered) {
        if (!ok) return;
        if (static_cast<int>(stack.size()) == n) {
            if (!kit.has_pm(g.full_mask() & ~covered)) ok = false;
            return;
        }
        for (int pos = start; pos < m && ok; ++pos) {
            const Edge& e = edges[pos];
            if (((covered >> e.u) & 1) || ((covered >> e.v) & 1)) continue;
            stack.push_back(pos);
            rec(pos + 1, covered | (uint64_t(1) << e.u) | (uint64_t(1) << e.v));
            stack.pop_back();
        }
    };
    rec(0, 0);
    return ok;
}

}  // namespace mcg

#include <algorithm>
#include <chrono>
#include <random>
#include <vector>

#include "skew/planarity.hpp"
#include "skew/skewness.hpp"

namespace skew {

namespace {

using Clock = std::chrono::steady_clock;

Graph residual_graph(const Graph& g, const std::vector<bool>& deleted) {
    std::vector<Edge> kept;
    kept.reserve(g.edges().size());
    for (int i = 0; i < g.edge_count(); ++i)
        if (!deleted[i]) kept.push_back(g.edges()[i]);
    return Graph(g.vertex_count(), std::move(kept));
}

EdgeSubset indices_to_subset(const Graph& g, std::vector<int> idx) {
    std::sort(idx.begin(), idx.end());
    std::vector<Edge> es;
    es.reserve(idx.size());
    for (int i : idx) es.push_back(g.edges()[i]);
    return EdgeSubset(std::move(es));
}

struct ExactSearch {
    const Graph& g;
    const ExactOptions& opt;
    SolveStats& stats;
    int n, m;

    std::vector<bool> deleted, forbidden;
    std::vector<int> deleted_order;
    std::vector<std::vector<int>> witness_pool;  // edge-index sets, sorted

    int best_value;
    std::vector<int> best_set;  // sorted edge indices
    bool node_cap_hit = false;
    bool lower_bound_met = false;

    ExactSearch(const Graph& graph, const ExactOptions& o, SolveStats& st, int seed_value,
                std::vector<int> seed_set)
        : g(graph), opt(o), stats(st), n(graph.vertex_count()), m(graph.edge_count()),
          deleted(m, false), forbidden(m, false), best_value(seed_value),
          best_set(std::move(seed_set)) {
        std::sort(best_set.begin(), best_set.end());
    }

    bool planar_residual() {
        ++stats.planarity_calls;
        return is_planar(residual_graph(g, deleted));
    }

    // a cached witness is valid as long as none of its edges was deleted
    const std::vector<int>* find_cached_witness() const {
        for (const auto& wit : witness_pool) {
            bool alive = true;
            for (int e : wit)
                if (deleted[e]) {
                    alive = false;
                    break;
                }
            if (alive) return &wit;
        }
        return nullptr;
    }

    std::vector<int> extract_witness() {
        Graph res = residual_graph(g, deleted);
        stats.planarity_calls += res.edge_count();
        NonplanarWitness w = kuratowski_witness(res);
        std::vector<int> idx;
        idx.reserve(w.edges.edges.size());
        for (const Edge& e : w.edges.edges) idx.push_back(g.edge_index(e.u, e.v));
        std::sort(idx.begin(), idx.end());
        witness_pool.push_back(idx);
        return idx;
    }

    void record_solution() {
        std::vector<int> sol = deleted_order;
        std::sort(sol.begin(), sol.end());
        int value = static_cast<int>(sol.size());
        if (value < best_value || (value == best_value && sol < best_set)) {
            best_value = value;
            best_set = std::move(sol);
        }
        if (opt.known_lower_bound && best_value <= *opt.known_lower_bound)
            lower_bound_met = true;
    }

    void dfs() {
        if (node_cap_hit || lower_bound_met) return;
        ++stats.nodes;
        if (opt.node_cap && stats.nodes > *opt.node_cap) {
            node_cap_hit = true;
            return;
        }
        int depth = static_cast<int>(deleted_order.size());
        int residual_edges = m - depth;
        int euler = n >= 3 ? residual_edges - 3 * n + 6 : 0;
        if (depth + std::max(euler, 0) > best_value) return;

        const std::vector<int>* cached = find_cached_witness();
        std::vector<int> fresh;
        if (!cached) {
            if (planar_residual()) {
                record_solution();
                return;
            }
            fresh = extract_witness();
            cached = &fresh;
        }
        // residual is nonplanar here: at least one more deletion is needed
        if (depth + 1 > best_value) return;

        std::vector<int> branch;
        for (int e : *cached)
            if (!forbidden[e]) branch.push_back(e);
        // all witness edges forbidden: nothing in this subtree can hit it
        for (int e : branch) {
            deleted[e] = true;
            deleted_order.push_back(e);
            dfs();
            deleted_order.pop_back();
            deleted[e] = false;
            forbidden[e] = true;
            if (node_cap_hit || lower_bound_met) break;
        }
        for (int e : branch)
            if (forbidden[e]) forbidden[e] = false;
    }
};

}  // namespace

SkewnessResult skewness_exact(const Graph& g, const ExactOptions& opt) {
    auto t0 = Clock::now();
    SkewnessResult out;
    if (is_planar(g)) {
        out.stats.planarity_calls = 1;
        out.stats.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
        return out;
    }
    HeuristicOptions hopt;
    hopt.restarts = opt.seed_restarts;
    hopt.seed = opt.seed;
    SkewnessResult seed = skewness_heuristic(g, hopt);
    std::vector<int> seed_idx;
    for (const Edge& e : seed.deletion_set.edges) seed_idx.push_back(g.edge_index(e.u, e.v));

    ExactSearch search(g, opt, out.stats, seed.value, std::move(seed_idx));
    out.stats.planarity_calls += seed.stats.planarity_calls;
    search.dfs();

    out.value = search.best_value;
    out.deletion_set = indices_to_subset(g, search.best_set);
    out.status = search.node_cap_hit ? SolveStatus::UpperBound : SolveStatus::Exact;
    out.stats.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    return out;
}

SkewnessResult skewness_bruteforce(const Graph& g, int cap) {
    auto t0 = Clock::now();
    SkewnessResult out;
    int m = g.edge_count();
    std::vector<bool> deleted(m, false);
    for (int t = 0; t <= cap; ++t) {
        // lexicographic t-subsets of edge indices
        std::vector<int> comb(t);
        for (int i = 0; i < t; ++i) comb[i] = i;
        if (t > m) break;
        while (true) {
            std::fill(deleted.begin(), deleted.end(), false);
            for (int i : comb) deleted[i] = true;
            ++out.stats.planarity_calls;
            if (is_planar(residual_graph(g, deleted))) {
                out.value = t;
                out.deletion_set = indices_to_subset(g, comb);
                out.status = SolveStatus::Exact;
                out.stats.elapsed_ms =
                    std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
                        .count();
                return out;
            }
            // next combination
            int i = t - 1;
            while (i >= 0 && comb[i] == m - t + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < t; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    out.value = cap + 1;  // every subset of size <= cap failed
    out.status = SolveStatus::LowerBound;
    out.stats.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    return out;
}

SkewnessResult skewness_heuristic(const Graph& g, const HeuristicOptions& opt) {
    auto t0 = Clock::now();
    SkewnessResult out;
    int m = g.edge_count();
    size_t best_kept = 0;                  // size of the best planar subgraph
    std::vector<int> best_deleted_sorted;  // its complement, edge indices
    bool have_best = false;

    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::mt19937_64 rng(opt.seed);

    int restarts = std::max(opt.restarts, 1);
    for (int r = 0; r < restarts; ++r) {
        if (r > 0) std::shuffle(order.begin(), order.end(), rng);
        std::vector<Edge> kept_edges;
        std::vector<bool> kept_mask(m, false);
        for (int ei : order) {
            kept_edges.push_back(g.edges()[ei]);
            ++out.stats.planarity_calls;
            if (is_planar(Graph(g.vertex_count(), kept_edges))) {
                kept_mask[ei] = true;
            } else {
                kept_edges.pop_back();
            }
        }
        std::vector<int> deleted_sorted;
        for (int i = 0; i < m; ++i)
            if (!kept_mask[i]) deleted_sorted.push_back(i);
        size_t kept = m - deleted_sorted.size();
        if (!have_best || kept > best_kept ||
            (kept == best_kept && deleted_sorted < best_deleted_sorted)) {
            best_kept = kept;
            best_deleted_sorted = std::move(deleted_sorted);
            have_best = true;
        }
        if (opt.time_budget_seconds) {
            double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
            if (elapsed > *opt.time_budget_seconds) break;
        }
    }
    out.value = m - static_cast<int>(best_kept);
    out.deletion_set = indices_to_subset(g, best_deleted_sorted);
    out.status = SolveStatus::UpperBound;
    // the contract promises a verified planar residual, unconditionally
    ++out.stats.planarity_calls;
    if (!is_planar(delete_edges(g, out.deletion_set)))
        throw std::logic_error("heuristic produced a nonplanar residual");
    out.stats.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    return out;
}

}  // namespace skew

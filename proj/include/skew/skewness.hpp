#ifndef SKEW_SKEWNESS_HPP
#define SKEW_SKEWNESS_HPP

#include <cstdint>
#include <optional>

#include "skew/graph.hpp"

namespace skew {

enum class SolveStatus {
    Exact,       // value is the skewness
    UpperBound,  // value achieved by a verified deletion set, optimality unknown
    LowerBound,  // all deletion sets up to value-1 were exhausted without success
};

struct SolveStats {
    std::int64_t nodes = 0;
    std::int64_t planarity_calls = 0;
    std::int64_t elapsed_ms = 0;
};

struct SkewnessResult {
    int value = 0;
    EdgeSubset deletion_set;  // residual after deleting it is planar (Exact/UpperBound)
    SolveStatus status = SolveStatus::Exact;
    SolveStats stats;
};

struct ExactOptions {
    std::optional<std::int64_t> node_cap;   // deterministic budget; exceeded -> UpperBound
    std::optional<int> known_lower_bound;   // e.g. a counting-bound certificate; stops
                                            // the search early once matched (the reported
                                            // deletion set is then not necessarily the
                                            // lexicographic minimum)
    int seed_restarts = 16;                 // heuristic restarts used to seed the incumbent
    std::uint64_t seed = 1;
};

/// Exact skewness by branch and bound on Kuratowski witnesses: every
/// planarizing set hits every witness, so branching on the edges of one
/// witness (forbidding earlier branches in later siblings) enumerates
/// each candidate set at most once. Pruning: incumbent value, the Euler
/// bound max(0, E' - 3V + 6) on residuals, and subtrees whose witness is
/// entirely forbidden. Among optimal deletion sets the lexicographically
/// least is returned, independent of search order.
SkewnessResult skewness_exact(const Graph& g, const ExactOptions& opt = {});

/// Validation oracle: tries all edge subsets of size 0,1,2,...,cap in
/// lexicographic order; the first planar residual wins.
SkewnessResult skewness_bruteforce(const Graph& g, int cap);

struct HeuristicOptions {
    int restarts = 64;
    std::uint64_t seed = 1;
    std::optional<double> time_budget_seconds;  // wall-clock cap between restarts
};

/// Greedy planar edge insertion (keep an edge if the subgraph so far
/// stays planar), canonical order first then seeded shuffles. Returns a
/// verified-planar residual; value is always >= the exact skewness.
SkewnessResult skewness_heuristic(const Graph& g, const HeuristicOptions& opt = {});

}  // namespace skew

#endif

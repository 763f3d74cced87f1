#ifndef SKEW_CERTIFY_HPP
#define SKEW_CERTIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skew/graph.hpp"
#include "skew/planarity.hpp"

namespace skew {

/// Total map edge -> weight, indexed by the host graph's canonical edge
/// order. Weights are non-negative integers; `allow_zero` marks
/// audit-only weightings (the counting bound itself requires >= 1).
struct EdgeWeighting {
    std::vector<std::int64_t> weights;
    bool allow_zero = false;

    std::int64_t total() const;
    std::int64_t min_weight() const;
    std::int64_t of(const Graph& g, int u, int v) const;
    void validate(const Graph& g) const;  // size match, positivity per flag
};

/// Rim edges weight 2, spokes weight k-2; total sk^2. Requires k >= 4
/// so the minimum weight stays 2 on the rim.
EdgeWeighting paper_weighting_q(int s, int k);

/// Rim 4, spoke k-3, inner 2k-2 on P(4k,k); total 4k(3k-1).
/// Requires odd k >= 9 so rim edges are strictly lightest.
EdgeWeighting paper_weighting_p(int k);

/// Audit weighting: rim 0, spoke 1, inner 2 on P(4k,k); total 12k.
EdgeWeighting paper_weighting_p_prime(int k);

struct WeightedGirth {
    std::int64_t weight = 0;
    std::vector<int> cycle;  // one attaining simple cycle (closed implicitly)
};

/// Minimum total weight over all simple cycles: per edge, remove it,
/// take the shortest weighted path between its endpoints, add the edge
/// back. Throws on forests.
WeightedGirth weighted_girth(const Graph& g, const EdgeWeighting& w);

/// The Euler-counting certificate. For a connected nonplanar graph with
/// positive weights W, minimum edge weight m and weighted girth g:
/// any planar spanning residual after t deletions has E - V - t + 2
/// faces at least, each face boundary contains a cycle so weighs >= g,
/// and the boundaries cover each surviving edge exactly twice, giving
///     2(W - m t) >= g (E - V - t + 2)
/// hence the lower bound t >= ceil((g(E-V+2) - 2W) / (g - 2m)).
struct SkewnessCertificate {
    std::int64_t total_weight = 0;     // W
    std::int64_t min_edge_weight = 0;  // w_min
    std::int64_t girth = 0;            // weighted girth
    std::int64_t vertex_count = 0;
    std::int64_t edge_count = 0;
    std::int64_t numerator = 0;        // g(E-V+2) - 2W
    std::int64_t denominator = 0;      // g - 2 w_min
    std::int64_t bound = 0;
    std::string assumption;
};

SkewnessCertificate counting_bound(const Graph& g, const EdgeWeighting& w);

/// All simple cycles of weight <= budget, one canonical representative
/// each (least rotation/reflection of the vertex sequence). Bounded DFS
/// rooted at each minimum vertex, pruned by path weight plus the
/// precomputed weighted distance back to the root. Roots may be
/// partitioned across threads; output is identical for any thread count.
std::vector<std::vector<int>> enumerate_min_cycles(const Graph& g, const EdgeWeighting& w,
                                                   std::int64_t budget, int threads = 1);

enum class CycleType { TypeI, TypeII_III, TypeIV, Other };

struct CycleClass {
    CycleType type = CycleType::Other;
    int anchor = -1;
};

/// Exact template match of a simple cycle of P(4k,k) against the four
/// minimum-weight families (types ii and iii coincide as edge sets under
/// an anchor shift and are reported together).
CycleClass classify_cycle(const std::vector<int>& cycle, int k);

/// Edge sets of the cycle templates, for oracle-style cross checks.
std::vector<Edge> cycle_template_edges(CycleType type, int anchor, int k);

struct FaceWeightReport {
    std::vector<std::int64_t> face_weights;  // per face, boundary multiplicity
    std::int64_t total_face_weight = 0;
    std::int64_t graph_weight = 0;
    bool identity_holds = false;  // sum of face weights == 2 * graph weight
};

FaceWeightReport face_weight_audit(const Graph& g, const PlanarEmbedding& emb,
                                   const EdgeWeighting& w);

/// Solves 4x + 8(F - x) = 2 W' for the count x of light faces; empty if
/// the solution is not a non-negative integer.
std::optional<std::int64_t> type_one_face_count(std::int64_t total_faces,
                                                std::int64_t total_w_prime);

/// Good/bad rim-vertex analysis of P(n,k) under a removal set: u_i is
/// bad iff one of u_{i-1}u_i, u_iu_{i+1}, u_iv_i was removed. Runs are
/// maximal circular blocks of consecutive bad vertices.
struct BadVertexReport {
    std::vector<bool> bad;                      // per rim vertex
    int bad_count = 0;
    std::vector<std::pair<int, int>> runs;      // (start, length), by start
    int longest_run = 0;
    bool removals_independent_rim_only = false;
};

BadVertexReport bad_vertex_runs(const Graph& p, const EdgeSubset& removed);

}  // namespace skew

#endif

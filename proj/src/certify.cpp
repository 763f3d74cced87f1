#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>
#include <thread>

#include "skew/certify.hpp"
#include "skew/families.hpp"

namespace skew {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

std::int64_t ceil_div_pos(std::int64_t a, std::int64_t b) {
    // a > 0, b > 0
    return (a + b - 1) / b;
}

// Dijkstra from src over the subgraph induced by `allowed`, with one
// optional suppressed edge. Returns distances (kInf unreachable) and the
// predecessor array for path recovery.
struct ShortestPaths {
    std::vector<std::int64_t> dist;
    std::vector<int> pred;
};

ShortestPaths dijkstra(const Graph& g, const EdgeWeighting& w, int src,
                       const std::vector<bool>* allowed = nullptr, int skip_edge = -1) {
    int n = g.vertex_count();
    ShortestPaths sp{std::vector<std::int64_t>(n, kInf), std::vector<int>(n, -1)};
    using Item = std::pair<std::int64_t, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    sp.dist[src] = 0;
    pq.push({0, src});
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (d > sp.dist[v]) continue;
        for (int u : g.neighbors(v)) {
            if (allowed && !(*allowed)[u]) continue;
            int ei = g.edge_index(v, u);
            if (ei == skip_edge) continue;
            std::int64_t nd = d + w.weights[ei];
            if (nd < sp.dist[u]) {
                sp.dist[u] = nd;
                sp.pred[u] = v;
                pq.push({nd, u});
            }
        }
    }
    return sp;
}

}  // namespace

std::int64_t EdgeWeighting::total() const {
    std::int64_t s = 0;
    for (auto x : weights) s += x;
    return s;
}

std::int64_t EdgeWeighting::min_weight() const {
    if (weights.empty()) throw std::invalid_argument("empty weighting");
    return *std::min_element(weights.begin(), weights.end());
}

std::int64_t EdgeWeighting::of(const Graph& g, int u, int v) const {
    int idx = g.edge_index(u, v);
    if (idx < 0)
        throw std::invalid_argument("weighting lookup of non-edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ")");
    return weights[idx];
}

void EdgeWeighting::validate(const Graph& g) const {
    if (static_cast<int>(weights.size()) != g.edge_count())
        throw std::invalid_argument("weighting does not cover the edge set");
    std::int64_t floor = allow_zero ? 0 : 1;
    for (auto x : weights)
        if (x < floor)
            throw std::invalid_argument(allow_zero ? "weights must be non-negative"
                                                   : "weights must be positive");
}

EdgeWeighting paper_weighting_q(int s, int k) {
    if (k < 4) throw std::invalid_argument("paper_weighting_q: requires k >= 4");
    Graph q = q_graph(s, k);
    int rim = s * k;
    EdgeWeighting w;
    w.weights.reserve(q.edge_count());
    for (const Edge& e : q.edges()) w.weights.push_back(e.v < rim ? 2 : k - 2);
    return w;
}

namespace {

EdgeWeighting petersen4k_weighting(int k, std::int64_t rim, std::int64_t spoke,
                                   std::int64_t inner) {
    int n = 4 * k;
    Graph p = petersen(n, k);
    EdgeWeighting w;
    w.weights.reserve(p.edge_count());
    for (const Edge& e : p.edges()) {
        if (e.v < n)
            w.weights.push_back(rim);  // u_i u_{i+1}
        else if (e.u < n)
            w.weights.push_back(spoke);  // u_i v_i
        else
            w.weights.push_back(inner);  // v_i v_{i+k}
    }
    return w;
}

}  // namespace

EdgeWeighting paper_weighting_p(int k) {
    if (k < 9 || k % 2 == 0)
        throw std::invalid_argument("paper_weighting_p: requires odd k >= 9");
    return petersen4k_weighting(k, 4, k - 3, 2 * k - 2);
}

EdgeWeighting paper_weighting_p_prime(int k) {
    if (k < 1) throw std::invalid_argument("paper_weighting_p_prime: requires k >= 1");
    EdgeWeighting w = petersen4k_weighting(k, 0, 1, 2);
    w.allow_zero = true;
    return w;
}

WeightedGirth weighted_girth(const Graph& g, const EdgeWeighting& w) {
    if (static_cast<int>(w.weights.size()) != g.edge_count())
        throw std::invalid_argument("weighting does not cover the edge set");
    for (auto x : w.weights)
        if (x < 0) throw std::invalid_argument("weights must be non-negative");
    WeightedGirth best;
    best.weight = kInf;
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        const Edge& e = g.edges()[ei];
        ShortestPaths sp = dijkstra(g, w, e.u, nullptr, ei);
        if (sp.dist[e.v] >= kInf) continue;
        std::int64_t cand = sp.dist[e.v] + w.weights[ei];
        if (cand < best.weight) {
            best.weight = cand;
            best.cycle.clear();
            for (int x = e.v; x != -1; x = sp.pred[x]) best.cycle.push_back(x);
            // cycle listed from e.u around to e.v; closing edge implied
            std::reverse(best.cycle.begin(), best.cycle.end());
        }
    }
    if (best.weight >= kInf) throw std::invalid_argument("weighted_girth: graph has no cycle");
    return best;
}

SkewnessCertificate counting_bound(const Graph& g, const EdgeWeighting& w) {
    w.validate(g);
    if (w.allow_zero)
        throw std::invalid_argument("counting_bound: weights must be positive");
    if (!is_connected(g))
        throw std::invalid_argument("counting_bound: graph must be connected");
    SkewnessCertificate cert;
    cert.total_weight = w.total();
    cert.min_edge_weight = g.edge_count() > 0 ? w.min_weight() : 0;
    cert.vertex_count = g.vertex_count();
    cert.edge_count = g.edge_count();
    cert.assumption =
        "sound for connected inputs with positive weights: an optimal planar residual is "
        "spanning and keeps a cycle, every face boundary contains a cycle (bridges counted "
        "twice keep sum W(F) = 2 W(H) exact), so each face weighs at least the weighted girth";
    if (is_planar(g)) {
        cert.bound = 0;
        return cert;
    }
    cert.girth = weighted_girth(g, w).weight;
    cert.denominator = cert.girth - 2 * cert.min_edge_weight;
    if (cert.denominator <= 0)
        throw std::invalid_argument("counting_bound: inequality degenerate (girth <= 2 w_min)");
    cert.numerator =
        cert.girth * (cert.edge_count - cert.vertex_count + 2) - 2 * cert.total_weight;
    cert.bound = cert.numerator > 0 ? ceil_div_pos(cert.numerator, cert.denominator) : 0;
    return cert;
}

namespace {

// canonical form: least vertex first, then the lexicographically smaller
// of the two directions
std::vector<int> canonical_cycle(std::vector<int> cyc) {
    auto mn = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), mn, cyc.end());
    if (cyc.size() > 2 && cyc[cyc.size() - 1] < cyc[1]) {
        std::reverse(cyc.begin() + 1, cyc.end());
    }
    return cyc;
}

void enumerate_from_root(const Graph& g, const EdgeWeighting& w, std::int64_t budget, int root,
                         std::vector<std::vector<int>>& out) {
    int n = g.vertex_count();
    std::vector<bool> allowed(n, false);
    for (int v = root; v < n; ++v) allowed[v] = true;
    ShortestPaths back = dijkstra(g, w, root, &allowed);

    std::vector<int> path{root};
    std::vector<bool> used(n, false);
    used[root] = true;

    // iterative DFS; each frame remembers the next neighbor index to try
    struct Frame {
        int v;
        size_t nbr = 0;
        std::int64_t weight = 0;
    };
    std::vector<Frame> stack{{root, 0, 0}};
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& nbrs = g.neighbors(f.v);
        if (f.nbr >= nbrs.size()) {
            used[f.v] = false;
            path.pop_back();
            stack.pop_back();
            continue;
        }
        int u = nbrs[f.nbr++];
        std::int64_t ew = w.weights[g.edge_index(f.v, u)];
        if (u == root) {
            if (path.size() >= 3 && f.weight + ew <= budget && path[1] < path.back())
                out.push_back(canonical_cycle(path));
            continue;
        }
        if (u < root || used[u]) continue;
        if (back.dist[u] >= kInf || f.weight + ew + back.dist[u] > budget) continue;
        used[u] = true;
        path.push_back(u);
        stack.push_back({u, 0, f.weight + ew});
    }
}

}  // namespace

std::vector<std::vector<int>> enumerate_min_cycles(const Graph& g, const EdgeWeighting& w,
                                                   std::int64_t budget, int threads) {
    if (static_cast<int>(w.weights.size()) != g.edge_count())
        throw std::invalid_argument("weighting does not cover the edge set");
    if (budget < 0) return {};
    int n = g.vertex_count();
    std::vector<std::vector<std::vector<int>>> per_root(n);
    if (threads <= 1) {
        for (int r = 0; r < n; ++r) enumerate_from_root(g, w, budget, r, per_root[r]);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t]() {
                for (int r = t; r < n; r += threads)
                    enumerate_from_root(g, w, budget, r, per_root[r]);
            });
        }
        for (auto& th : pool) th.join();
    }
    std::vector<std::vector<int>> out;
    for (auto& bucket : per_root)
        for (auto& c : bucket) out.push_back(std::move(c));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Edge> cycle_template_edges(CycleType type, int anchor, int k) {
    int n = 4 * k;
    auto u = [&](int i) { return ((i % n) + n) % n; };
    auto v = [&](int i) { return n + ((i % n) + n) % n; };
    std::vector<Edge> es;
    switch (type) {
        case CycleType::TypeI:
            // u_i ... u_{i+k} v_{i+k} v_i
            for (int j = 0; j < k; ++j) es.emplace_back(u(anchor + j), u(anchor + j + 1));
            es.emplace_back(u(anchor + k), v(anchor + k));
            es.emplace_back(v(anchor + k), v(anchor));
            es.emplace_back(v(anchor), u(anchor));
            break;
        case CycleType::TypeII_III:
            // u_i u_{i+1} v_{i+1} v_{i+k+1} u_{i+k+1} u_{i+k} v_{i+k} v_i
            es.emplace_back(u(anchor), u(anchor + 1));
            es.emplace_back(u(anchor + 1), v(anchor + 1));
            es.emplace_back(v(anchor + 1), v(anchor + k + 1));
            es.emplace_back(v(anchor + k + 1), u(anchor + k + 1));
            es.emplace_back(u(anchor + k + 1), u(anchor + k));
            es.emplace_back(u(anchor + k), v(anchor + k));
            es.emplace_back(v(anchor + k), v(anchor));
            es.emplace_back(v(anchor), u(anchor));
            break;
        case CycleType::TypeIV:
            for (int t = 0; t < 4; ++t)
                es.emplace_back(v(anchor + t * k), v(anchor + (t + 1) * k));
            break;
        case CycleType::Other:
            throw std::invalid_argument("no template for Other");
    }
    std::sort(es.begin(), es.end());
    return es;
}

CycleClass classify_cycle(const std::vector<int>& cycle, int k) {
    int n = 4 * k;
    if (cycle.size() < 3) return {};
    std::vector<Edge> es;
    es.reserve(cycle.size());
    for (size_t i = 0; i < cycle.size(); ++i) {
        int a = cycle[i], b = cycle[(i + 1) % cycle.size()];
        if (a < 0 || b < 0 || a >= 2 * n || b >= 2 * n || a == b) return {};
        es.emplace_back(a, b);
    }
    std::sort(es.begin(), es.end());
    size_t len = es.size();
    if (len == static_cast<size_t>(k + 3)) {
        for (int i = 0; i < n; ++i)
            if (es == cycle_template_edges(CycleType::TypeI, i, k))
                return {CycleType::TypeI, i};
    }
    if (len == 8) {
        for (int i = 0; i < n; ++i)
            if (es == cycle_template_edges(CycleType::TypeII_III, i, k))
                return {CycleType::TypeII_III, i};
    }
    if (len == 4) {
        for (int i = 0; i < k; ++i)
            if (es == cycle_template_edges(CycleType::TypeIV, i, k))
                return {CycleType::TypeIV, i};
    }
    return {};
}

FaceWeightReport face_weight_audit(const Graph& g, const PlanarEmbedding& emb,
                                   const EdgeWeighting& w) {
    if (static_cast<int>(w.weights.size()) != g.edge_count())
        throw std::invalid_argument("weighting does not cover the edge set");
    FaceWeightReport rep;
    rep.graph_weight = w.total();
    for (const auto& face : emb.faces) {
        std::int64_t fw = 0;
        for (const auto& walk : face.walks) {
            for (size_t i = 0; i < walk.size(); ++i) {
                int a = walk[i], b = walk[(i + 1) % walk.size()];
                fw += w.of(g, a, b);
            }
        }
        rep.face_weights.push_back(fw);
        rep.total_face_weight += fw;
    }
    rep.identity_holds = rep.total_face_weight == 2 * rep.graph_weight;
    if (!rep.identity_holds)
        throw std::logic_error("face_weight_audit: sum of face weights != 2 * graph weight");
    return rep;
}

std::optional<std::int64_t> type_one_face_count(std::int64_t total_faces,
                                                std::int64_t total_w_prime) {
    // 4x + 8(F - x) = 2 W'  =>  x = (8F - 2W') / 4
    std::int64_t num = 8 * total_faces - 2 * total_w_prime;
    if (num < 0 || num % 4 != 0) return std::nullopt;
    std::int64_t x = num / 4;
    if (x > total_faces) return std::nullopt;  // more light faces than faces
    return x;
}

BadVertexReport bad_vertex_runs(const Graph& p, const EdgeSubset& removed) {
    int n = p.vertex_count() / 2;
    for (const Edge& e : removed.edges)
        if (p.edge_index(e.u, e.v) < 0)
            throw std::invalid_argument("removed edge not in graph");
    BadVertexReport rep;
    rep.bad.assign(n, false);
    for (int i = 0; i < n; ++i) {
        Edge rim_prev((i - 1 + n) % n, i), rim_next(i, (i + 1) % n), spoke(i, n + i);
        if (removed.contains(rim_prev) || removed.contains(rim_next) || removed.contains(spoke))
            rep.bad[i] = true;
    }
    rep.bad_count = static_cast<int>(std::count(rep.bad.begin(), rep.bad.end(), true));

    if (rep.bad_count == n) {
        rep.runs.emplace_back(0, n);
    } else if (rep.bad_count > 0) {
        // circular maximal runs: scan from a good vertex
        int start = 0;
        while (rep.bad[start]) ++start;
        for (int off = 0; off < n;) {
            int i = (start + off) % n;
            if (!rep.bad[i]) {
                ++off;
                continue;
            }
            int len = 0;
            while (len < n && rep.bad[(i + len) % n]) ++len;
            rep.runs.emplace_back(i, len);
            off += len;
        }
        std::sort(rep.runs.begin(), rep.runs.end());
    }
    for (auto& [s, l] : rep.runs) rep.longest_run = std::max(rep.longest_run, l);

    rep.removals_independent_rim_only = true;
    std::vector<int> touched;
    for (const Edge& e : removed.edges) {
        if (e.v >= n) {
            rep.removals_independent_rim_only = false;
            break;
        }
        touched.push_back(e.u);
        touched.push_back(e.v);
    }
    if (rep.removals_independent_rim_only) {
        std::sort(touched.begin(), touched.end());
        if (std::adjacent_find(touched.begin(), touched.end()) != touched.end())
            rep.removals_independent_rim_only = false;
    }
    return rep;
}

}  // namespace skew

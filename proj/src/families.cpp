#include <set>
#include <stdexcept>

#include "skew/families.hpp"

namespace skew {

Graph petersen(int n, int k) {
    if (n < 3) throw std::invalid_argument("petersen: n must be >= 3");
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("petersen: k must satisfy 1 <= k <= n-1");
    if (n == 2 * k)
        throw std::invalid_argument("petersen: n = 2k would create parallel inner edges");
    std::vector<Edge> es;
    es.reserve(3 * n);
    std::vector<std::string> labels(2 * n);
    for (int i = 0; i < n; ++i) {
        es.emplace_back(i, (i + 1) % n);          // rim
        es.emplace_back(i, n + i);                // spoke
        es.emplace_back(n + i, n + (i + k) % n);  // inner
        labels[i] = "u_" + std::to_string(i);
        labels[n + i] = "v_" + std::to_string(i);
    }
    return Graph(2 * n, std::move(es), std::move(labels));
}

Graph q_graph(int s, int k) {
    if (s < 3) throw std::invalid_argument("q_graph: s must be >= 3");
    if (k < 1) throw std::invalid_argument("q_graph: k must be >= 1");
    int rim = s * k;
    std::vector<Edge> es;
    es.reserve(2 * rim);
    std::vector<std::string> labels(rim + k);
    for (int i = 0; i < rim; ++i) {
        es.emplace_back(i, (i + 1) % rim);
        labels[i] = std::to_string(i);
    }
    for (int j = 0; j < k; ++j) {
        for (int t = 0; t < s; ++t) es.emplace_back((j + t * k) % rim, rim + j);
        labels[rim + j] = "x_" + std::to_string(j);
    }
    return Graph(rim + k, std::move(es), std::move(labels));
}

EdgeSubset h_deletion_set(int s, int k) {
    if (s < 3 || k < 4)
        throw std::invalid_argument("h_deletion_set: requires s >= 3 and k >= 4");
    int rim = s * k;
    int expected = ((s - 2) * k + 1) / 2 + 1;  // ceil((s-2)k/2) + 1
    std::set<Edge> picked;
    auto put = [&](int a, int b) {
        Edge e(((a % rim) + rim) % rim, ((b % rim) + rim) % rim);
        if (!picked.insert(e).second)
            throw std::runtime_error("h_deletion_set: index ranges collide after mod " +
                                     std::to_string(rim) + " at edge (" +
                                     std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    };
    if (k % 2 == 0) {
        int lo = k / 2;
        int hi = k / 2 + k * (s - 2) / 2;
        for (int i = lo; i <= hi; ++i) put(2 * i - 1, 2 * i);
    } else {
        put(rim - 1, 0);
        int lo = (k - 1) / 2 + 1;
        int hi = (k - 1) / 2 + ((s - 2) * k + 1) / 2;
        for (int i = lo; i <= hi; ++i) put(2 * i - 1, 2 * i);
    }
    if (static_cast<int>(picked.size()) != expected)
        throw std::logic_error("h_deletion_set: size mismatch against ceil((s-2)k/2)+1");
    // all picked edges are consecutive rim pairs, present by construction
    return EdgeSubset(std::vector<Edge>(picked.begin(), picked.end()));
}

Q3Reduction q3_reduction(int k) {
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("q3_reduction: requires odd k >= 3");
    int n = 4 * k;
    Graph p = petersen(n, k);
    // the inner edge at index 3k joins v_{3k} and v_{4k} = v_0
    Graph p_minus = delete_edges(p, EdgeSubset::of(p, {{n + 3 * k, n + 0}}));
    std::vector<int> drop;
    for (int i = 1; i <= k - 1; ++i) {
        drop.push_back(i);      // u_i
        drop.push_back(n + i);  // v_i
    }
    Q3Reduction r;
    r.j = delete_vertices(p_minus, drop);
    for (int v = 0; v < r.j.vertex_count(); ++v)
        if (r.j.degree(v) == 2) r.degree2_labels.push_back(r.j.label(v));
    r.reduced = suppress_degree2(r.j);
    r.isomorphic_to_q3 = is_isomorphic(r.reduced, q_graph(3, k)).isomorphic;
    return r;
}

}  // namespace skew

#include "skew/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace skew {

namespace {

std::string pair_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int vertex_count, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(vertex_count), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
        throw std::invalid_argument("label vector size does not match vertex count");
    std::sort(edges_.begin(), edges_.end());
    for (size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u == e.v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= n_)
            throw std::invalid_argument("edge endpoint out of range: " + pair_str(e.u, e.v));
        if (i > 0 && edges_[i - 1] == e)
            throw std::invalid_argument("duplicate edge " + pair_str(e.u, e.v));
    }
    adj_.assign(n_, {});
    for (const Edge& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph Graph::from_pairs(int vertex_count, const std::vector<std::pair<int, int>>& pairs,
                        std::vector<std::string> labels) {
    std::vector<Edge> es;
    es.reserve(pairs.size());
    for (auto [a, b] : pairs) es.emplace_back(a, b);
    return Graph(vertex_count, std::move(es), std::move(labels));
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v));
    return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

int Graph::edge_index(int u, int v) const {
    Edge e(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return static_cast<int>(it - edges_.begin());
    return -1;
}

const std::string& Graph::label(int v) const {
    static const std::string empty;
    if (labels_.empty()) return empty;
    if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v));
    return labels_[v];
}

int Graph::vertex_by_label(const std::string& name) const {
    for (int v = 0; v < n_; ++v)
        if (labels_[v] == name) return v;
    return -1;
}

EdgeSubset::EdgeSubset(std::vector<Edge> e) : edges(std::move(e)) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

EdgeSubset EdgeSubset::of(const Graph& g, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Edge> es;
    es.reserve(pairs.size());
    for (auto [a, b] : pairs) {
        if (g.edge_index(a, b) < 0)
            throw std::invalid_argument("edge " + pair_str(a, b) + " not in graph");
        es.emplace_back(a, b);
    }
    return EdgeSubset(std::move(es));
}

bool EdgeSubset::contains(const Edge& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

Graph delete_edges(const Graph& g, const EdgeSubset& s) {
    for (const Edge& e : s.edges)
        if (g.edge_index(e.u, e.v) < 0)
            throw std::invalid_argument("edge " + pair_str(e.u, e.v) + " not in graph");
    std::vector<Edge> kept;
    kept.reserve(g.edges().size() - s.edges.size());
    for (const Edge& e : g.edges())
        if (!s.contains(e)) kept.push_back(e);
    std::vector<std::string> labels;
    if (g.has_labels())
        for (int v = 0; v < g.vertex_count(); ++v) labels.push_back(g.label(v));
    return Graph(g.vertex_count(), std::move(kept), std::move(labels));
}

Graph add_edges(const Graph& g, const EdgeSubset& s) {
    std::vector<Edge> es = g.edges();
    for (const Edge& e : s.edges) es.push_back(e);
    std::vector<std::string> labels;
    if (g.has_labels())
        for (int v = 0; v < g.vertex_count(); ++v) labels.push_back(g.label(v));
    return Graph(g.vertex_count(), std::move(es), std::move(labels));
}

Graph delete_vertices(const Graph& g, const std::vector<int>& vs) {
    std::vector<bool> gone(g.vertex_count(), false);
    for (int v : vs) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("vertex " + std::to_string(v) + " not in graph");
        gone[v] = true;
    }
    // recompact by ascending original index
    std::vector<int> remap(g.vertex_count(), -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!gone[v]) remap[v] = next++;
    std::vector<Edge> kept;
    for (const Edge& e : g.edges())
        if (!gone[e.u] && !gone[e.v]) kept.emplace_back(remap[e.u], remap[e.v]);
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.resize(next);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!gone[v]) labels[remap[v]] = g.label(v);
    }
    return Graph(next, std::move(kept), std::move(labels));
}

Graph suppress_degree2(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::set<int>> adj(n);
    for (const Edge& e : g.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    std::vector<bool> gone(n, false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (gone[v] || adj[v].size() != 2) continue;
            auto it = adj[v].begin();
            int a = *it++;
            int b = *it;
            if (a == b)
                throw std::runtime_error("suppressing vertex " + std::to_string(v) +
                                         " would create a self-loop");
            if (adj[a].count(b))
                throw std::runtime_error("suppressing vertex " + std::to_string(v) +
                                         " would create a parallel edge " + pair_str(a, b));
            adj[a].erase(v);
            adj[b].erase(v);
            adj[a].insert(b);
            adj[b].insert(a);
            adj[v].clear();
            gone[v] = true;
            changed = true;
        }
    }
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (!gone[v]) keep.push_back(v);
    std::vector<int> remap(n, -1);
    for (size_t i = 0; i < keep.size(); ++i) remap[keep[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (int v : keep)
        for (int w : adj[v])
            if (v < w) es.emplace_back(remap[v], remap[w]);
    std::vector<std::string> labels;
    if (g.has_labels())
        for (int v : keep) labels.push_back(g.label(v));
    return Graph(static_cast<int>(keep.size()), std::move(es), std::move(labels));
}

namespace {

// Iterated neighborhood refinement: colors start as degrees and are
// refined by the sorted multiset of neighbor colors until stable.
std::vector<int> refine_colors(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    for (int round = 0; round < n; ++round) {
        std::map<std::pair<int, std::vector<int>>, std::vector<int>> buckets;
        for (int v = 0; v < n; ++v) {
            std::vector<int> sig;
            sig.reserve(g.degree(v));
            for (int w : g.neighbors(v)) sig.push_back(color[w]);
            std::sort(sig.begin(), sig.end());
            buckets[{color[v], std::move(sig)}].push_back(v);
        }
        std::vector<int> next(n);
        int c = 0;
        for (auto& [key, vs] : buckets) {
            for (int v : vs) next[v] = c;
            ++c;
        }
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

struct IsoSearch {
    const Graph& a;
    const Graph& b;
    const std::vector<int>& ca;
    const std::vector<int>& cb;
    std::vector<int> map_ab;
    std::vector<int> map_ba;
    std::vector<int> order;  // vertices of a in assignment order

    bool consistent(int va, int vb) const {
        if (ca[va] != cb[vb]) return false;
        if (a.degree(va) != b.degree(vb)) return false;
        for (int wa : a.neighbors(va)) {
            int wb = map_ab[wa];
            if (wb >= 0 && !b.has_edge(vb, wb)) return false;
        }
        for (int wb : b.neighbors(vb)) {
            int wa = map_ba[wb];
            if (wa >= 0 && !a.has_edge(va, wa)) return false;
        }
        return true;
    }

    bool extend(size_t idx) {
        if (idx == order.size()) return true;
        int va = order[idx];
        for (int vb = 0; vb < b.vertex_count(); ++vb) {
            if (map_ba[vb] >= 0 || !consistent(va, vb)) continue;
            map_ab[va] = vb;
            map_ba[vb] = va;
            if (extend(idx + 1)) return true;
            map_ab[va] = -1;
            map_ba[vb] = -1;
        }
        return false;
    }
};

}  // namespace

IsoResult is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return {};
    if (degree_sequence(a) != degree_sequence(b)) return {};
    std::vector<int> ca = refine_colors(a);
    std::vector<int> cb = refine_colors(b);
    {
        std::vector<int> ha = ca, hb = cb;
        std::sort(ha.begin(), ha.end());
        std::sort(hb.begin(), hb.end());
        if (ha != hb) return {};
    }
    int n = a.vertex_count();
    IsoSearch s{a, b, ca, cb, std::vector<int>(n, -1), std::vector<int>(n, -1), {}};
    // assignment order: BFS-ish, always next the unplaced vertex with the
    // most already-placed neighbors (breaks symmetric stalls quickly)
    {
        std::vector<bool> placed(n, false);
        for (int step = 0; step < n; ++step) {
            int best = -1, best_score = -1;
            for (int v = 0; v < n; ++v) {
                if (placed[v]) continue;
                int score = 0;
                for (int w : a.neighbors(v))
                    if (placed[w]) ++score;
                if (score > best_score) {
                    best = v;
                    best_score = score;
                }
            }
            placed[best] = true;
            s.order.push_back(best);
        }
    }
    if (!s.extend(0)) return {};
    // validate the witness in both directions
    for (const Edge& e : a.edges())
        if (!b.has_edge(s.map_ab[e.u], s.map_ab[e.v]))
            throw std::logic_error("isomorphism witness failed forward validation");
    for (const Edge& e : b.edges())
        if (!a.has_edge(s.map_ba[e.u], s.map_ba[e.v]))
            throw std::logic_error("isomorphism witness failed reverse validation");
    return {true, s.map_ab};
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> ds(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) ds[v] = g.degree(v);
    std::sort(ds.rbegin(), ds.rend());
    return ds;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        std::vector<int> members;
        std::queue<int> q;
        q.push(s);
        comp[s] = id;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            members.push_back(v);
            for (int w : g.neighbors(v)) {
                if (comp[w] < 0) {
                    comp[w] = id;
                    q.push(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    return connected_components(g).size() == 1;
}

}  // namespace skew

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "skew/planarity.hpp"

namespace skew {

namespace {

// Classify a minimal nonplanar edge set by suppressing its degree-2
// vertices: the survivor must be K5 or K3,3.
WitnessKind classify_witness(const Graph& host, const std::vector<Edge>& edges) {
    std::vector<bool> used(host.vertex_count(), false);
    for (const Edge& e : edges) used[e.u] = used[e.v] = true;
    std::vector<int> drop;
    for (int v = 0; v < host.vertex_count(); ++v)
        if (!used[v]) drop.push_back(v);
    Graph sub = delete_vertices(Graph(host.vertex_count(), edges), drop);
    Graph core = suppress_degree2(sub);
    if (core.vertex_count() == 5 && core.edge_count() == 10) return WitnessKind::K5;
    if (core.vertex_count() == 6 && core.edge_count() == 9) {
        for (int v = 0; v < 6; ++v)
            if (core.degree(v) != 3)
                throw std::logic_error("witness core is not K3,3");
        return WitnessKind::K33;
    }
    throw std::logic_error("minimal nonplanar witness is neither K5 nor K3,3");
}

}  // namespace

NonplanarWitness kuratowski_witness(const Graph& g) {
    if (is_planar(g)) throw std::invalid_argument("kuratowski_witness: graph is planar");
    // one greedy pass in canonical order leaves a minimal nonplanar set:
    // every surviving edge was kept because dropping it (from a superset
    // of the survivor) gave a planar graph, and planarity is monotone
    std::vector<Edge> current = g.edges();
    for (const Edge& e : g.edges()) {
        std::vector<Edge> trial;
        trial.reserve(current.size() - 1);
        for (const Edge& f : current)
            if (!(f == e)) trial.push_back(f);
        if (!is_planar(Graph(g.vertex_count(), trial))) current = std::move(trial);
    }
    NonplanarWitness w;
    w.kind = classify_witness(g, current);
    w.edges = EdgeSubset(std::move(current));
    return w;
}

}  // namespace skew

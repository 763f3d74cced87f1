#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

#include "skew/planarity.hpp"

// Embedding construction: decompose each component into biconnected
// blocks, run the Demoucron-Malgrange-Pertuiset face-splitting algorithm
// on each block, merge the block rotations at cut vertices (each block's
// neighbor run kept contiguous, which preserves genus 0), then trace the
// final faces from the merged rotation system. All choices are canonical
// so repeated runs produce identical embeddings.

namespace skew {

namespace {

// Biconnected blocks as edge lists (Hopcroft-Tarjan), sorted canonically.
std::vector<std::vector<Edge>> biconnected_blocks(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> stack;
    std::vector<std::vector<Edge>> blocks;
    int timer = 0;

    struct Frame {
        int v, parent;
        size_t next_nbr;
    };
    for (int s = 0; s < n; ++s) {
        if (disc[s] >= 0) continue;
        std::vector<Frame> frames{{s, -1, 0}};
        disc[s] = low[s] = timer++;
        while (!frames.empty()) {
            Frame& f = frames.back();
            int v = f.v;
            if (f.next_nbr < g.neighbors(v).size()) {
                int w = g.neighbors(v)[f.next_nbr++];
                if (disc[w] < 0) {
                    stack.emplace_back(v, w);
                    disc[w] = low[w] = timer++;
                    frames.push_back({w, v, 0});
                } else if (w != f.parent && disc[w] < disc[v]) {
                    stack.emplace_back(v, w);
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                frames.pop_back();
                if (!frames.empty()) {
                    int u = frames.back().v;
                    low[u] = std::min(low[u], low[v]);
                    if (low[v] >= disc[u]) {
                        // u is a cut vertex (or root); pop the block
                        std::vector<Edge> block;
                        Edge top(u, v);
                        while (!stack.empty()) {
                            Edge e = stack.back();
                            stack.pop_back();
                            block.push_back(e);
                            if (e == top) break;
                        }
                        std::sort(block.begin(), block.end());
                        blocks.push_back(std::move(block));
                    }
                }
            }
        }
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const std::vector<Edge>& a, const std::vector<Edge>& b) {
                  return a.front() < b.front();
              });
    return blocks;
}

using VertexCycle = std::vector<int>;  // face boundary during DMP, a simple cycle

struct Fragment {
    std::vector<int> attachments;      // embedded vertices, sorted
    std::vector<int> inner;            // unembedded vertices, sorted (may be empty)
    Edge lone_edge{0, 0};              // valid when inner is empty
};

// DMP on one biconnected block with >= 2 edges. Returns the successor
// map succ[v][u] = w meaning dart (u->v) is followed by (v->w) in the
// face walks of the constructed embedding.
std::map<int, std::map<int, int>> dmp_block(const std::vector<Edge>& block_edges) {
    std::set<int> verts;
    std::map<int, std::vector<int>> adj;
    std::set<Edge> all_edges(block_edges.begin(), block_edges.end());
    for (const Edge& e : block_edges) {
        verts.insert(e.u);
        verts.insert(e.v);
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());

    // initial cycle: walk from the least vertex, never revisiting, until a
    // repeat closes a cycle (exists: block is 2-connected with >= 2 edges)
    VertexCycle cycle;
    {
        int start = *verts.begin();
        std::vector<int> path{start};
        std::map<int, int> pos{{start, 0}};
        int prev = -1, cur = start;
        while (true) {
            int nxt = -1;
            for (int w : adj[cur]) {
                if (w != prev) {
                    nxt = w;
                    break;
                }
            }
            if (pos.count(nxt)) {
                cycle.assign(path.begin() + pos[nxt], path.end());
                break;
            }
            pos[nxt] = static_cast<int>(path.size());
            path.push_back(nxt);
            prev = cur;
            cur = nxt;
        }
    }

    std::set<int> in_k(cycle.begin(), cycle.end());
    std::set<Edge> embedded;
    for (size_t i = 0; i < cycle.size(); ++i)
        embedded.insert(Edge(cycle[i], cycle[(i + 1) % cycle.size()]));

    std::vector<VertexCycle> faces;
    faces.push_back(cycle);
    VertexCycle rev(cycle.rbegin(), cycle.rend());
    faces.push_back(rev);

    while (embedded.size() < all_edges.size()) {
        // fragments relative to the embedded subgraph
        std::vector<Fragment> fragments;
        for (const Edge& e : block_edges) {
            if (!embedded.count(e) && in_k.count(e.u) && in_k.count(e.v))
                fragments.push_back({{e.u, e.v}, {}, e});
        }
        std::set<int> seen;
        for (int v : verts) {
            if (in_k.count(v) || seen.count(v)) continue;
            std::vector<int> comp;
            std::set<int> attach;
            std::queue<int> q;
            q.push(v);
            seen.insert(v);
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                comp.push_back(x);
                for (int w : adj[x]) {
                    if (in_k.count(w)) {
                        attach.insert(w);
                    } else if (!seen.count(w)) {
                        seen.insert(w);
                        q.push(w);
                    }
                }
            }
            std::sort(comp.begin(), comp.end());
            fragments.push_back(
                {std::vector<int>(attach.begin(), attach.end()), std::move(comp), Edge{0, 0}});
        }

        // admissible faces per fragment
        std::vector<std::set<int>> face_verts(faces.size());
        for (size_t j = 0; j < faces.size(); ++j)
            face_verts[j] = std::set<int>(faces[j].begin(), faces[j].end());
        std::vector<std::vector<int>> admissible(fragments.size());
        for (size_t fi = 0; fi < fragments.size(); ++fi) {
            for (size_t j = 0; j < faces.size(); ++j) {
                bool ok = true;
                for (int a : fragments[fi].attachments)
                    if (!face_verts[j].count(a)) {
                        ok = false;
                        break;
                    }
                if (ok) admissible[fi].push_back(static_cast<int>(j));
            }
        }
        size_t pick = fragments.size();
        for (size_t fi = 0; fi < fragments.size(); ++fi) {
            if (admissible[fi].empty())
                throw std::logic_error("embed: fragment with no admissible face on planar input");
            if (pick == fragments.size() || admissible[fi].size() < admissible[pick].size())
                pick = fi;
        }
        const Fragment& frag = fragments[pick];

        // an alpha path through the fragment between two attachments
        std::vector<int> path;
        if (frag.inner.empty()) {
            path = {frag.lone_edge.u, frag.lone_edge.v};
        } else {
            int a = frag.attachments.front();
            std::set<int> inner(frag.inner.begin(), frag.inner.end());
            std::map<int, int> par;
            std::queue<int> q;
            // start from the least inner neighbor of a
            for (int w : adj[a]) {
                if (inner.count(w) && !par.count(w)) {
                    par[w] = a;
                    q.push(w);
                }
            }
            int hit = -1;
            while (!q.empty() && hit < 0) {
                int x = q.front();
                q.pop();
                for (int w : adj[x]) {
                    if (w != a && in_k.count(w)) {
                        par[w] = x;
                        hit = w;
                        break;
                    }
                    if (inner.count(w) && !par.count(w)) {
                        par[w] = x;
                        q.push(w);
                    }
                }
            }
            if (hit < 0) throw std::logic_error("embed: fragment path search failed");
            for (int x = hit; x != a; x = par[x]) path.push_back(x);
            path.push_back(a);
            std::reverse(path.begin(), path.end());
        }

        int face_id = admissible[pick].front();
        VertexCycle face = faces[face_id];
        int a = path.front(), b = path.back();
        int ia = -1, ib = -1;
        for (size_t i = 0; i < face.size(); ++i) {
            if (face[i] == a) ia = static_cast<int>(i);
            if (face[i] == b) ib = static_cast<int>(i);
        }
        // split: walk a..b along the face plus the reversed path, and
        // walk b..a plus the forward path
        VertexCycle fa, fb;
        for (int i = ia; i != ib; i = (i + 1) % static_cast<int>(face.size()))
            fa.push_back(face[i]);
        for (size_t i = path.size() - 1; i >= 1; --i) fa.push_back(path[i]);
        for (int i = ib; i != ia; i = (i + 1) % static_cast<int>(face.size()))
            fb.push_back(face[i]);
        for (size_t i = 0; i + 1 < path.size(); ++i) fb.push_back(path[i]);
        faces[face_id] = fa;
        faces.push_back(fb);

        for (size_t i = 0; i + 1 < path.size(); ++i) embedded.insert(Edge(path[i], path[i + 1]));
        for (int x : path) in_k.insert(x);
    }

    std::map<int, std::map<int, int>> succ;
    for (const VertexCycle& f : faces) {
        int len = static_cast<int>(f.size());
        for (int i = 0; i < len; ++i) {
            int u = f[i], v = f[(i + 1) % len], w = f[(i + 2) % len];
            succ[v][u] = w;  // dart (u->v) is followed by (v->w)
        }
    }
    return succ;
}

}  // namespace

PlanarEmbedding embed(const Graph& g) {
    if (!is_planar(g)) throw NonplanarError(kuratowski_witness(g));

    int n = g.vertex_count();
    PlanarEmbedding out;
    out.rotation.assign(n, {});

    auto comps = connected_components(g);
    out.component_count = static_cast<int>(comps.size());

    // per-vertex successor map assembled across blocks
    std::vector<std::map<int, int>> succ(n);
    auto blocks = biconnected_blocks(g);
    for (const auto& block : blocks) {
        std::map<int, std::map<int, int>> bsucc;
        if (block.size() == 1) {
            const Edge& e = block.front();
            bsucc[e.u][e.v] = e.v;
            bsucc[e.v][e.u] = e.u;
        } else {
            bsucc = dmp_block(block);
        }
        // merge: concatenate this block's neighbor cycle after whatever is
        // already present at each shared vertex
        for (auto& [v, smap] : bsucc) {
            // block cycle at v, started at the least neighbor
            std::vector<int> cyc;
            int start = smap.begin()->first;
            int cur = start;
            do {
                cyc.push_back(cur);
                cur = smap[cur];
            } while (cur != start);
            if (static_cast<int>(cyc.size()) != static_cast<int>(smap.size()))
                throw std::logic_error("embed: block rotation is not a single cycle");
            if (succ[v].empty()) {
                for (size_t i = 0; i < cyc.size(); ++i)
                    succ[v][cyc[i]] = cyc[(i + 1) % cyc.size()];
            } else {
                // splice cyc contiguously: old a->x becomes a->cyc, cyc wraps to x
                int a = succ[v].begin()->first;
                int x = succ[v][a];
                succ[v][a] = cyc.front();
                for (size_t i = 0; i + 1 < cyc.size(); ++i) succ[v][cyc[i]] = cyc[i + 1];
                succ[v][cyc.back()] = x;
            }
        }
    }

    for (int v = 0; v < n; ++v) {
        if (succ[v].empty()) continue;
        std::vector<int> rot;
        int start = succ[v].begin()->first;
        int cur = start;
        do {
            rot.push_back(cur);
            cur = succ[v][cur];
        } while (cur != start);
        if (static_cast<int>(rot.size()) != g.degree(v))
            throw std::logic_error("embed: merged rotation misses neighbors");
        out.rotation[v] = std::move(rot);
    }

    // trace faces: next(u->v) = (v, successor of u at v)
    std::set<std::pair<int, int>> visited;
    std::vector<std::vector<int>> walks;           // all closed walks
    std::vector<int> walk_component;               // component id per walk
    std::vector<int> comp_of(n, -1);
    for (size_t ci = 0; ci < comps.size(); ++ci)
        for (int v : comps[ci]) comp_of[v] = static_cast<int>(ci);

    for (const Edge& e0 : g.edges()) {
        for (auto [su, sv] : {std::pair{e0.u, e0.v}, std::pair{e0.v, e0.u}}) {
            if (visited.count({su, sv})) continue;
            std::vector<int> walk;
            int u = su, v = sv;
            while (!visited.count({u, v})) {
                visited.insert({u, v});
                walk.push_back(u);
                int w = succ[v].at(u);
                u = v;
                v = w;
            }
            walks.push_back(std::move(walk));
            walk_component.push_back(comp_of[su]);
        }
    }

    // designate one outer walk per component (the first traced, i.e. the
    // one containing the least dart) and merge them into a single face
    std::vector<int> outer_walk(comps.size(), -1);
    for (size_t wi = 0; wi < walks.size(); ++wi) {
        int c = walk_component[wi];
        if (outer_walk[c] < 0) outer_walk[c] = static_cast<int>(wi);
    }
    PlanarEmbedding::Face outer;
    for (size_t ci = 0; ci < comps.size(); ++ci) {
        if (outer_walk[ci] >= 0)
            outer.walks.push_back(walks[outer_walk[ci]]);
        else
            outer.walks.push_back({});  // isolated vertex: empty boundary
    }
    out.faces.push_back(std::move(outer));
    for (size_t wi = 0; wi < walks.size(); ++wi) {
        int c = walk_component[wi];
        if (static_cast<int>(wi) == outer_walk[c]) continue;
        PlanarEmbedding::Face f;
        f.walks.push_back(walks[wi]);
        out.faces.push_back(std::move(f));
    }

    // Euler audit: F = E - V + 1 + C
    int expect = g.edge_count() - n + 1 + out.component_count;
    if (out.face_count() != expect)
        throw std::logic_error("embed: face count violates Euler's formula");
    size_t darts = 0;
    for (const auto& f : out.faces) darts += f.boundary_length();
    if (darts != 2 * static_cast<size_t>(g.edge_count()))
        throw std::logic_error("embed: boundary walks do not cover each edge twice");
    return out;
}

}  // namespace skew

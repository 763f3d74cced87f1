#include <algorithm>
#include <vector>

#include "skew/planarity.hpp"

// Left-right planarity test after U. Brandes, "The Left-Right Planarity
// Test". Phase 1 orients the graph by DFS and computes lowpoints and
// nesting depths; phase 2 re-traverses with adjacency lists sorted by
// nesting depth, maintaining a stack of conflict pairs of back-edge
// intervals. The graph is planar iff no interval pair ever conflicts on
// both sides. Only the decision is implemented here (no embedding phase),
// so side signs are not tracked; ref links are, because interval trimming
// walks them.

namespace skew {

namespace {

constexpr int kNone = -1;

struct Interval {
    int low = kNone;
    int high = kNone;
    bool empty() const { return low == kNone && high == kNone; }
};

struct ConflictPair {
    Interval left, right;
    void swap_sides() { std::swap(left, right); }
};

class LrTester {
  public:
    explicit LrTester(const Graph& g) : g_(g), n_(g.vertex_count()), m_(g.edge_count()) {}

    bool planar() {
        height_.assign(n_, kNone);
        parent_edge_.assign(n_, kNone);
        esrc_.assign(m_, kNone);
        edst_.assign(m_, kNone);
        oriented_.assign(m_, false);
        lowpt_.assign(m_, 0);
        lowpt2_.assign(m_, 0);
        nesting_.assign(m_, 0);
        ref_.assign(m_, kNone);
        lowpt_edge_.assign(m_, kNone);
        stack_bottom_.assign(m_, 0);

        std::vector<int> roots;
        for (int v = 0; v < n_; ++v) {
            if (height_[v] == kNone) {
                height_[v] = 0;
                roots.push_back(v);
                dfs_orient(v);
            }
        }
        ordered_adj_.assign(n_, {});
        for (int e = 0; e < m_; ++e) ordered_adj_[esrc_[e]].push_back(e);
        for (auto& lst : ordered_adj_) {
            std::sort(lst.begin(), lst.end(), [&](int a, int b) {
                if (nesting_[a] != nesting_[b]) return nesting_[a] < nesting_[b];
                return a < b;
            });
        }
        for (int r : roots)
            if (!dfs_test(r)) return false;
        return true;
    }

  private:
    void dfs_orient(int v) {
        int pe = parent_edge_[v];
        for (int w : g_.neighbors(v)) {
            int eid = g_.edge_index(v, w);
            if (oriented_[eid]) continue;
            oriented_[eid] = true;
            esrc_[eid] = v;
            edst_[eid] = w;
            lowpt_[eid] = height_[v];
            lowpt2_[eid] = height_[v];
            if (height_[w] == kNone) {  // tree edge
                parent_edge_[w] = eid;
                height_[w] = height_[v] + 1;
                dfs_orient(w);
            } else {  // back edge
                lowpt_[eid] = height_[w];
            }
            nesting_[eid] = 2 * lowpt_[eid];
            if (lowpt2_[eid] < height_[v]) ++nesting_[eid];  // chordal
            if (pe != kNone) {
                if (lowpt_[eid] < lowpt_[pe]) {
                    lowpt2_[pe] = std::min(lowpt_[pe], lowpt2_[eid]);
                    lowpt_[pe] = lowpt_[eid];
                } else if (lowpt_[eid] > lowpt_[pe]) {
                    lowpt2_[pe] = std::min(lowpt2_[pe], lowpt_[eid]);
                } else {
                    lowpt2_[pe] = std::min(lowpt2_[pe], lowpt2_[eid]);
                }
            }
        }
    }

    bool conflicting(const Interval& i, int b) const {
        return !i.empty() && lowpt_[i.high] > lowpt_[b];
    }

    int lowest(const ConflictPair& p) const {
        if (p.left.empty()) return lowpt_[p.right.low];
        if (p.right.empty()) return lowpt_[p.left.low];
        return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
    }

    bool add_constraints(int ei, int e) {
        ConflictPair p;
        // merge return edges of ei into p.right
        do {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (!q.left.empty()) q.swap_sides();
            if (!q.left.empty()) return false;  // nonplanar
            if (lowpt_[q.right.low] > lowpt_[e]) {
                // merge intervals
                if (p.right.empty())
                    p.right.high = q.right.high;
                else
                    ref_[p.right.low] = q.right.high;
                p.right.low = q.right.low;
            } else {
                // align
                ref_[q.right.low] = lowpt_edge_[e];
            }
        } while (static_cast<int>(stack_.size()) > stack_bottom_[ei]);
        // merge conflicting return edges of earlier siblings into p.left
        while (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei)) {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (conflicting(q.right, ei)) q.swap_sides();
            if (conflicting(q.right, ei)) return false;  // nonplanar
            // interval below lowpt(ei) joins p.right
            if (p.right.low != kNone) ref_[p.right.low] = q.right.high;
            if (q.right.low != kNone) p.right.low = q.right.low;
            if (p.left.empty())
                p.left.high = q.left.high;
            else
                ref_[p.left.low] = q.left.high;
            p.left.low = q.left.low;
        }
        if (!(p.left.empty() && p.right.empty())) stack_.push_back(p);
        return true;
    }

    void trim_back_edges(int u) {
        // drop conflict pairs whose intervals all return to u
        while (!stack_.empty() && lowest(stack_.back()) == height_[u]) stack_.pop_back();
        if (stack_.empty()) return;
        ConflictPair p = stack_.back();
        stack_.pop_back();
        while (p.left.high != kNone && edst_[p.left.high] == u) p.left.high = ref_[p.left.high];
        if (p.left.high == kNone && p.left.low != kNone) {
            ref_[p.left.low] = p.right.low;
            p.left.low = kNone;
        }
        while (p.right.high != kNone && edst_[p.right.high] == u) p.right.high = ref_[p.right.high];
        if (p.right.high == kNone && p.right.low != kNone) {
            ref_[p.right.low] = p.left.low;
            p.right.low = kNone;
        }
        stack_.push_back(p);
    }

    bool dfs_test(int v) {
        int pe = parent_edge_[v];
        bool first = true;
        for (int eid : ordered_adj_[v]) {
            int w = edst_[eid];
            stack_bottom_[eid] = static_cast<int>(stack_.size());
            if (eid == parent_edge_[w]) {  // tree edge
                if (!dfs_test(w)) return false;
            } else {  // back edge
                lowpt_edge_[eid] = eid;
                ConflictPair cp;
                cp.right = Interval{eid, eid};
                stack_.push_back(cp);
            }
            if (lowpt_[eid] < height_[v]) {  // eid has a return edge
                if (first) {
                    lowpt_edge_[pe] = lowpt_edge_[eid];
                } else if (!add_constraints(eid, pe)) {
                    return false;
                }
            }
            first = false;
        }
        if (pe != kNone) {
            int u = esrc_[pe];
            trim_back_edges(u);
            if (lowpt_[pe] < height_[u] && !stack_.empty()) {
                int hl = stack_.back().left.high;
                int hr = stack_.back().right.high;
                if (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr]))
                    ref_[pe] = hl;
                else
                    ref_[pe] = hr;
            }
        }
        return true;
    }

    const Graph& g_;
    int n_, m_;
    std::vector<int> height_, parent_edge_;
    std::vector<int> esrc_, edst_;
    std::vector<bool> oriented_;
    std::vector<int> lowpt_, lowpt2_, nesting_;
    std::vector<int> ref_, lowpt_edge_, stack_bottom_;
    std::vector<std::vector<int>> ordered_adj_;
    std::vector<ConflictPair> stack_;
};

}  // namespace

bool is_planar(const Graph& g) {
    int n = g.vertex_count();
    int m = g.edge_count();
    if (n < 5 || m < 9) return true;  // smaller than both Kuratowski graphs
    if (m > 3 * n - 6) return false;  // Euler bound
    LrTester t(g);
    return t.planar();
}

}  // namespace skew

#ifndef SKEW_FAMILIES_HPP
#define SKEW_FAMILIES_HPP

#include <string>
#include <vector>

#include "skew/graph.hpp"

namespace skew {

/// Generalized Petersen graph P(n,k): rim u_0..u_{n-1} (ids 0..n-1),
/// inner v_0..v_{n-1} (ids n..2n-1), edges u_i u_{i+1}, u_i v_i,
/// v_i v_{i+k}, subscripts mod n. Requires 1 <= k <= n-1 and n != 2k
/// (n = 2k would duplicate inner edges under simple-graph semantics).
Graph petersen(int n, int k);

/// Q_s(k): rim cycle 0..sk-1 plus hubs x_0..x_{k-1} (ids sk..sk+k-1),
/// hub x_j joined to the s rim vertices congruent to j mod k.
/// Requires s >= 3, k >= 1.
Graph q_graph(int s, int k);

/// The prescribed rim edges whose deletion turns Q_s(k) into the planar
/// spanning subgraph H_s(k). Exactly ceil((s-2)k/2)+1 edges; indices
/// reduced mod sk. Requires k >= 4, s >= 3. Throws if the odd-k range
/// ever collides with the extra edge (sk-1,0) after mod reduction.
EdgeSubset h_deletion_set(int s, int k);

/// The J -> Q_3(k) reduction: from P(4k,k) delete u_1..u_{k-1},
/// v_1..v_{k-1} and the inner edge v_{3k} v_0, record the degree-2
/// vertices of J, suppress them, and test isomorphism against Q_3(k).
/// Requires k >= 3 odd.
struct Q3Reduction {
    Graph j;                                   // before suppression
    Graph reduced;                             // after suppression
    bool isomorphic_to_q3 = false;
    std::vector<std::string> degree2_labels;   // degree-2 vertices of J
};

Q3Reduction q3_reduction(int k);

}  // namespace skew

#endif

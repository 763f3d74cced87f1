#ifndef SKEW_PLANARITY_HPP
#define SKEW_PLANARITY_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "skew/graph.hpp"

namespace skew {

/// Left-right planarity test (Brandes' formulation of the
/// de Fraysseix-Rosenstiehl criterion). Linear-time class; handles
/// disconnected inputs. Short-circuits on the Euler bound E > 3V-6.
bool is_planar(const Graph& g);

/// Combinatorial embedding: a rotation system plus the face walks it
/// induces. Faces are traced with the rule next(u->v) = (v, w) where w
/// follows u in the cyclic order at v, so every edge appears exactly
/// twice across all boundary walks (bridges twice on the same face).
///
/// For disconnected graphs the designated outer walks of all components
/// are merged into a single face, so face_count() = E - V + 1 + C.
struct PlanarEmbedding {
    struct Face {
        // each walk is a closed vertex sequence v0 v1 ... v_{L-1} (v0 implied
        // again at the end); the merged outer face may hold several walks
        std::vector<std::vector<int>> walks;
        size_t boundary_length() const {
            size_t s = 0;
            for (auto& w : walks) s += w.size();
            return s;
        }
    };
    std::vector<std::vector<int>> rotation;  // cyclic neighbor order per vertex
    std::vector<Face> faces;
    int component_count = 0;
    int face_count() const { return static_cast<int>(faces.size()); }
};

enum class WitnessKind { K5, K33 };

/// Edge set forming a K5 or K3,3 subdivision, certifying nonplanarity.
struct NonplanarWitness {
    EdgeSubset edges;
    WitnessKind kind = WitnessKind::K33;
};

struct NonplanarError : std::runtime_error {
    NonplanarWitness witness;
    explicit NonplanarError(NonplanarWitness w)
        : std::runtime_error("graph is not planar"), witness(std::move(w)) {}
};

/// Planar embedding by incremental face splitting (DMP), per biconnected
/// block, with block rotations merged at cut vertices. Deterministic.
/// Throws NonplanarError carrying a Kuratowski witness on nonplanar input.
PlanarEmbedding embed(const Graph& g);

/// Minimal nonplanar edge set, extracted by greedy edge-removal
/// minimalization in canonical order: the survivor is exactly a K5 or
/// K3,3 subdivision. Throws std::invalid_argument on planar input.
NonplanarWitness kuratowski_witness(const Graph& g);

}  // namespace skew

#endif

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "conecalc/space.hpp"

namespace conecalc {

class FaceLattice;

/// A closed polyhedral cone in a rational Euclidean space, kept in both
/// representations at all times:
///
///   H-rep: { x : <n,x> >= 0 for the irredundant facet normals n,
///                <e,x> =  0 for the equality normals e }
///   V-rep: cone(rays) + span(lineality)
///
/// All pairings <.,.> use the space's inner product. Both representations
/// are canonical (facet normals lie in the span and are primitive integer
/// vectors, rays are primitive and orthogonal to the lineality, bases are in
/// RREF), so representation equality is syntactic and, for the V-rep,
/// equivalent to set equality. Degenerate cones ({0}, subspaces, half-spaces,
/// unpointed cones, cones in proper subspaces) are first-class.
///
/// Immutable after construction; cheap to copy (shared state).
class Cone {
  public:
    static Cone from_inequalities(const Space& space, QMat inequalities, QMat equalities = {});
    static Cone from_generators(const Space& space, QMat rays, QMat lineality = {});

    static Cone zero(const Space& space) { return from_generators(space, {}, {}); }
    static Cone full(const Space& space) { return from_generators(space, {}, identity_mat(space.dim())); }

    const Space& space() const;
    const QMat& inequalities() const;  ///< irredundant facet normals (canonical)
    const QMat& equalities() const;    ///< canonical normals cutting out the span V_C
    const QMat& rays() const;          ///< extreme rays mod lineality (canonical)
    const QMat& lineality() const;     ///< RREF basis of the minimal face F_0

    const Subspace& span() const;            ///< V_C
    const Subspace& lineality_space() const; ///< F_0 as a subspace
    size_t dim() const { return span().dim(); }
    size_t lineality_dim() const { return lineality_space().dim(); }

    bool is_subspace() const { return rays().empty(); }
    bool contains(const QVec& h) const;
    bool rint_contains(const QVec& h) const;

    /// A certified relative-interior point: the sum of the extreme rays
    /// (the origin for subspaces). Any non-implicit facet normal is strictly
    /// positive on it.
    QVec rint_point() const;

    Cone dual() const;
    Cone negate() const;

    bool set_equals(const Cone& o) const;

    /// Face lattice, computed once and cached.
    const FaceLattice& faces() const;

    /// epsilon_C = (-1)^{dim V_C}
    int eps() const { return dim() % 2 ? -1 : 1; }

  private:
    struct Impl;
    explicit Cone(std::shared_ptr<const Impl> p) : p_(std::move(p)) {}
    std::shared_ptr<const Impl> p_;
};

inline Cone dual_cone(const Cone& c) { return c.dual(); }

inline Cone intersect(const Cone& a, const Cone& b) {
    QMat ineqs = a.inequalities(), eqs = a.equalities();
    ineqs.insert(ineqs.end(), b.inequalities().begin(), b.inequalities().end());
    eqs.insert(eqs.end(), b.equalities().begin(), b.equalities().end());
    return Cone::from_inequalities(a.space(), std::move(ineqs), std::move(eqs));
}

/// Minkowski sum cone(rays_a + rays_b) + span(lin_a + lin_b).
inline Cone minkowski_sum(const Cone& a, const Cone& b) {
    QMat rays = a.rays(), lin = a.lineality();
    rays.insert(rays.end(), b.rays().begin(), b.rays().end());
    lin.insert(lin.end(), b.lineality().begin(), b.lineality().end());
    return Cone::from_generators(a.space(), std::move(rays), std::move(lin));
}

/// Restriction of a cone to a subspace (adds the subspace's orthogonal
/// complement as equalities).
Cone intersect_with_subspace(const Cone& c, const Subspace& s);

/// One face of a cone, identified by the set of irredundant inequalities
/// active on it (bit i of `mask` = inequality i is tight). The mask is
/// closed: it lists *all* inequalities vanishing on the face, so faces
/// compare by mask and F ⊆ G iff mask(F) ⊇ mask(G).
struct Face {
    uint64_t mask = 0;
    Cone cone;
    size_t dim = 0;
};

/// The full face lattice of a cone (including the cone itself and its
/// minimal face F_0), ordered by (dim, mask) for determinism.
class FaceLattice {
  public:
    explicit FaceLattice(const Cone& c);

    size_t size() const { return faces_.size(); }
    const Face& operator[](size_t i) const { return faces_[i]; }
    const std::vector<Face>& all() const { return faces_; }

    size_t minimal_index() const { return minimal_; }  ///< F_0
    size_t cone_index() const { return whole_; }       ///< C itself

    /// faces i ⊆ j
    bool included(size_t i, size_t j) const {
        return (faces_[i].mask & faces_[j].mask) == faces_[j].mask;
    }

    /// Indices of faces of dimension dim(F_0) + 1 (the set F^min of the
    /// transform regularity region).
    std::vector<size_t> min_faces() const;

  private:
    std::vector<Face> faces_;
    size_t minimal_ = 0, whole_ = 0;
};

/// A(F,C): the cone of directions from a relative-interior point of the
/// face into C; cut out by exactly the C-inequalities active on F.
Cone angle_cone(const Cone& c, const Face& f);
Cone angle_cone_by_mask(const Cone& c, uint64_t active_mask);

/// (-1)^{dim a - dim b} for faces b ⊆ a.
inline int eps_rel(size_t dim_hi, size_t dim_lo) { return (dim_hi - dim_lo) % 2 ? -1 : 1; }

}  // namespace conecalc

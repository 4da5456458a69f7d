#pragma once

#include <memory>
#include <stdexcept>

#include "conecalc/rational.hpp"

namespace conecalc {

/// A rational Euclidean space: a dimension plus a symmetric positive-definite
/// Gram matrix. Positive-definiteness is certified at construction by an
/// exact LDL^T factorization with all pivots > 0. The default is the
/// standard dot product (null Gram pointer, fast path).
class Space {
  public:
    explicit Space(size_t dim) : dim_(dim) {}

    Space(size_t dim, QMat gram) : dim_(dim) {
        if (gram.size() != dim) throw std::invalid_argument("Gram matrix size mismatch");
        for (size_t i = 0; i < dim; ++i) {
            if (gram[i].size() != dim) throw std::invalid_argument("Gram matrix not square");
            for (size_t j = 0; j < i; ++j)
                if (gram[i][j] != gram[j][i]) throw std::invalid_argument("Gram matrix not symmetric");
        }
        certify_positive_definite(gram);
        bool is_id = true;
        for (size_t i = 0; i < dim && is_id; ++i)
            for (size_t j = 0; j < dim; ++j)
                if (gram[i][j] != Rat(i == j ? 1 : 0)) { is_id = false; break; }
        if (!is_id) gram_ = std::make_shared<const QMat>(std::move(gram));
    }

    /// Scaled standard product s*<x,y>, the form induced on subgroup tori.
    static Space scaled(size_t dim, const Rat& s) {
        QMat g(dim, QVec(dim, Rat(0)));
        for (size_t i = 0; i < dim; ++i) g[i][i] = s;
        return Space(dim, g);
    }

    size_t dim() const { return dim_; }
    bool standard() const { return gram_ == nullptr; }

    const QMat& gram() const {
        static const QMat empty;
        return gram_ ? *gram_ : empty;
    }

    Rat dot(const QVec& a, const QVec& b) const {
        check(a); check(b);
        if (!gram_) return dot_std(a, b);
        return dot_std(a, mat_vec(*gram_, b));
    }

    Rat norm_sq(const QVec& v) const { return dot(v, v); }

    /// G*v: the covector of v, i.e. dot(v, x) == dot_std(gram_times(v), x).
    QVec gram_times(const QVec& v) const {
        check(v);
        return gram_ ? mat_vec(*gram_, v) : v;
    }

    QVec gram_inv_times(const QVec& v) const {
        check(v);
        if (!gram_) return v;
        return conecalc::solve(*gram_, v);
    }

    bool operator==(const Space& o) const {
        if (dim_ != o.dim_) return false;
        if (standard() && o.standard()) return true;
        if (standard() != o.standard()) return false;
        return *gram_ == *o.gram_;
    }
    bool operator!=(const Space& o) const { return !(*this == o); }

  private:
    void check(const QVec& v) const {
        if (v.size() != dim_) throw std::invalid_argument("vector dimension mismatch");
    }

    static void certify_positive_definite(QMat a) {
        size_t n = a.size();
        for (size_t k = 0; k < n; ++k) {
            if (a[k][k] <= 0) throw std::invalid_argument("Gram matrix not positive definite");
            for (size_t i = k + 1; i < n; ++i) {
                Rat f = a[i][k] / a[k][k];
                for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            }
        }
    }

    size_t dim_;
    std::shared_ptr<const QMat> gram_;
};

/// A linear subspace with a cached orthogonal projection matrix (w.r.t. the
/// ambient inner product). The stored basis is the canonical RREF basis, so
/// equal subspaces compare equal syntactically.
class Subspace {
  public:
    /// Span of the given vectors (rows).
    static Subspace span_of(const Space& space, const QMat& vectors) {
        QMat basis;
        for (const QVec& v : vectors)
            if (!is_zero(v)) basis.push_back(v);
        basis = row_space_basis(std::move(basis));
        return Subspace(space, std::move(basis));
    }

    static Subspace full(const Space& space) { return span_of(space, identity_mat(space.dim())); }
    static Subspace zero(const Space& space) { return Subspace(space, {}); }

    const Space& space() const { return space_; }
    size_t dim() const { return basis_.size(); }
    const QMat& basis() const { return basis_; }

    bool contains(const QVec& v) const {
        QMat m = basis_;
        m.push_back(v);
        return rank(std::move(m)) == basis_.size();
    }

    /// Orthogonal projection onto the subspace; v = project(v) + rest with
    /// dot(project(v), rest) == 0.
    QVec project(const QVec& v) const {
        if (basis_.empty()) return QVec(space_.dim(), Rat(0));
        return mat_vec(proj_, v);
    }

    /// {y : dot(y, x) = 0 for all x here} w.r.t. the ambient inner product.
    Subspace orthogonal_complement() const {
        if (basis_.empty()) return full(space_);
        QMat m;
        for (const QVec& b : basis_) m.push_back(space_.gram_times(b));
        return Subspace(space_, row_space_basis(nullspace(std::move(m))));
    }

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

  private:
    Subspace(const Space& space, QMat basis) : space_(space), basis_(std::move(basis)) {
        if (basis_.empty()) return;
        // P = B^T (B G B^T)^{-1} B G  (rows of B are the basis)
        size_t k = basis_.size(), n = space_.dim();
        QMat bg;  // B G
        for (const QVec& b : basis_) bg.push_back(space_.gram_times(b));
        QMat gramk = mat_mul(bg, transpose(basis_));  // B G B^T, k x k
        // Solve (B G B^T) X = B G for X (k x n), then P = B^T X.
        QMat x(k);
        QMat bgT = transpose(bg);
        for (size_t j = 0; j < n; ++j) {
            QVec col = solve(gramk, bgT[j]);
            for (size_t i = 0; i < k; ++i) {
                if (x[i].empty()) x[i].assign(n, Rat(0));
                x[i][j] = col[i];
            }
        }
        proj_ = mat_mul(transpose(basis_), x);
    }

    Space space_;
    QMat basis_;
    QMat proj_;
};

/// Orthogonal projection of h onto s (module-level convenience mirroring
/// the H -> H_S notation).
inline QVec project(const QVec& h, const Subspace& s) { return s.project(h); }

}  // namespace conecalc

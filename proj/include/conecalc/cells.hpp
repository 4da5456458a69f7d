#pragma once

#include <optional>
#include <vector>

#include "conecalc/cone.hpp"

namespace conecalc {

/// Indicator of a translated relative interior: H -> [rint cone](H - shift).
/// Evaluation is exact 0/1; `empty` marks a cell known to evaluate to 0
/// everywhere (products of cells with disjoint relative interiors).
struct Cell {
    Cone cone;
    QVec shift;
    bool empty = false;

    int eval(const QVec& h) const {
        if (empty) return 0;
        return cone.rint_contains(shift.empty() ? h : sub(h, shift)) ? 1 : 0;
    }
};

inline Cell make_cell(Cone c) { return Cell{std::move(c), {}, false}; }
inline Cell make_cell(Cone c, QVec shift) { return Cell{std::move(c), std::move(shift), false}; }

struct WeightedCell {
    int weight;
    Cell cell;
};

/// A formal integer-weighted sum of cells. Addition and negation are
/// term-wise; no simplification ever happens — pointwise evaluation is the
/// ground truth.
class SignedCellSum {
  public:
    explicit SignedCellSum(const Space& space) : space_(space) {}

    void add_term(int weight, Cell cell) { terms_.push_back({weight, std::move(cell)}); }

    long eval(const QVec& h) const {
        long s = 0;
        for (const WeightedCell& t : terms_) s += t.weight * t.cell.eval(h);
        return s;
    }

    SignedCellSum& operator+=(const SignedCellSum& o) {
        terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
        return *this;
    }
    SignedCellSum operator-() const {
        SignedCellSum r(space_);
        for (const WeightedCell& t : terms_) r.add_term(-t.weight, t.cell);
        return r;
    }

    const std::vector<WeightedCell>& terms() const { return terms_; }
    const Space& space() const { return space_; }

  private:
    Space space_;
    std::vector<WeightedCell> terms_;
};

/// Pointwise product of two cell indicators, as a cell sum. Defined for
/// cells with equal shifts: when the relative interiors meet, the product is
/// the single cell over the intersection cone (rint C1 ∩ rint C2 =
/// rint(C1 ∩ C2) in that case); otherwise the product vanishes identically
/// and the intersection cell is returned flagged empty.
SignedCellSum product_of_cells(const Cell& a, const Cell& b);

/// Per-cone data shared by the Gamma and sigma machinery: for every face F,
/// the angle cone A(F,C), the dual face F^dual, their duals, and the
/// intersection cone K_F = A(F,C) ∩ F^dual. The identity
///   [rint A(F,C)](H) [rint F^dual](H - T) = [rint K_F](H - T_F)
/// (orthogonal split of both factors along V_F) turns every Gamma/sigma term
/// into a single translated cell.
class IndicatorKit {
  public:
    explicit IndicatorKit(const Cone& c);

    const Cone& cone() const { return cone_; }
    size_t size() const { return angle_.size(); }  ///< number of faces

    const Cone& angle(size_t f) const { return angle_[f]; }
    const Cone& angle_dual(size_t f) const { return angle_dual_[f]; }
    const Cone& face_dual(size_t f) const { return face_dual_[f]; }
    const Cone& k_cell(size_t f) const { return k_[f]; }
    const Subspace& face_span(size_t f) const;

    QVec proj_face(size_t f, const QVec& v) const { return face_span(f).project(v); }

  private:
    Cone cone_;
    std::vector<Cone> angle_, angle_dual_, face_dual_, k_;
};

/// Gamma(C, H, T): the alternating sum over faces of
/// eps_F^{F0} [rint A(F,C)](H) [rint F^dual](H - T), precomputed as single
/// cells so that evaluation at any (H, T) costs one membership test per face.
class GammaFunction {
  public:
    explicit GammaFunction(const Cone& c) : kit_(std::make_shared<IndicatorKit>(c)) {}
    explicit GammaFunction(std::shared_ptr<const IndicatorKit> kit) : kit_(std::move(kit)) {}

    const Cone& cone() const { return kit_->cone(); }

    long eval(const QVec& h, const QVec& T) const;

    /// The SignedCellSum in H for a fixed truncation parameter T.
    SignedCellSum at(const QVec& T) const;

    struct Term {
        int weight;
        size_t face;  ///< index into cone().faces()
    };
    std::vector<Term> terms() const;
    const IndicatorKit& kit() const { return *kit_; }

  private:
    std::shared_ptr<const IndicatorKit> kit_;
};

/// Direct evaluation of the two-factor definition of Gamma. Kept as an
/// independent route for cross-checking the single-cell form.
long gamma_eval_direct(const Cone& c, const QVec& h, const QVec& T);

/// sigma(F, C) = sum over faces E of F of eps_F^E [rint A(E,C)][rint E^dual],
/// as a SignedCellSum in H (no truncation parameter).
SignedCellSum sigma_sum(const IndicatorKit& kit, size_t face_index);
SignedCellSum sigma_sum(const Cone& c, size_t face_index);
long sigma_eval_direct(const Cone& c, size_t face_index, const QVec& h);

/// The ball {H : <H, H - T> <= 0} = B(T/2, |T|/2) containing supp Gamma(C,.,T).
struct Ball {
    QVec center;
    Rat radius_sq;

    bool contains(const Space& sp, const QVec& h) const {
        QVec d = sub(h, center);
        return sp.norm_sq(d) <= radius_sq;
    }
};

Ball gamma_support_certificate(const Space& sp, const QVec& T);

}  // namespace conecalc

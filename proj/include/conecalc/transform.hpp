#pragma once

#include <complex>
#include <optional>

#include "conecalc/cells.hpp"
#include "conecalc/poly.hpp"
#include "conecalc/scalars.hpp"

namespace conecalc {

/// One summand  scale * numer(lambda) / prod_i <lambda, u_i>^{m_i}  of a
/// meromorphic cone transform. Denominator vectors are primitive with
/// positive leading entry (signs and scalings folded into `scale`).
struct MeroTerm {
    Scalar scale;
    Poly numer;
    std::map<QVec, unsigned, QVecLess> denom;
};

/// A finite sum of rational-function-times-exponential terms in the
/// variable lambda. (The exponential shifts of the Gamma transform live in
/// the PolyExp layer; plain cone transforms have none.)
class MeroTransform {
  public:
    explicit MeroTransform(const Space& space) : space_(space) {}

    const Space& space() const { return space_; }
    const std::vector<MeroTerm>& terms() const { return terms_; }
    bool trivially_zero() const { return terms_.empty(); }

    void add_term(MeroTerm t);
    MeroTransform& operator+=(const MeroTransform& o);
    MeroTransform scaled(const Scalar& s) const;

    /// d/d lambda_k via the quotient rule, denominators kept factored.
    MeroTransform derivative(size_t k) const;

    /// Exact value at a complex rational point. Poles of individual terms
    /// are handled by a one-variable Laurent expansion along a deterministic
    /// generic direction; a surviving negative order means lambda is a true
    /// pole and raises domain_error.
    Scalar evaluate(const CVec& lambda) const;

    /// Equality as rational functions: both sides are put over the common
    /// denominator and the numerators compared exactly.
    bool equals_symbolic(const MeroTransform& o) const;

    std::string str() const;

  private:
    Space space_;
    std::vector<MeroTerm> terms_;
};

/// F(C, q, lambda) = int_{V_C^{F0}} [C](H) e^{<lambda,H>} q(H) dH as an exact
/// meromorphic expression: the lineality is quotiented out, the pointed part
/// triangulated (pulling triangulation on the canonical ray order), each
/// simplex contributing (-1)^d |det U| / prod <lambda, u_i>, and q realized
/// as a derivative operator in lambda.
/// Throws invalid_argument when q is not supported on V_C^{F0}.
MeroTransform laplace_cone(const Cone& c, const Poly& q);

/// The lines V_F^{F0}, F in F^min(C), off which the transform is holomorphic.
struct RegularityRegion {
    std::vector<QVec> lines;  ///< one generator per line
};
RegularityRegion regularity_region(const Cone& c);

/// lambda regular for C: nonzero pairing with every line above.
bool is_regular(const CVec& lambda, const Cone& c);

/// A polynomial-exponential function of T: finite map from exponent vectors
/// lambda (complex rational, canonical) to polynomials in T over the exact
/// scalar ring. The zero-exponent polynomial is the purely polynomial part.
class PolyExp {
  public:
    struct Key {
        QVec re, im;
        bool operator<(const Key& o) const {
            if (re != o.re) return lex_less(re, o.re);
            return lex_less(im, o.im);
        }
        bool operator==(const Key& o) const { return re == o.re && im == o.im; }
        bool is_zero() const { return conecalc::is_zero(re) && conecalc::is_zero(im); }
    };

    explicit PolyExp(size_t nvars) : nvars_(nvars) {}

    size_t nvars() const { return nvars_; }
    const std::map<Key, PolyT<Scalar>>& terms() const { return terms_; }

    void add(const Key& k, const PolyT<Scalar>& p);

    PolyT<Scalar> purely_polynomial_part() const;

    /// Exact value at a rational T: exponentials become e^w factors of the
    /// scalar ring.
    Scalar value_at(const QVec& T) const;
    std::complex<double> value_at_double(const QVec& T) const;

    /// T -> T + S substituted through both exponentials and polynomials.
    PolyExp shifted(const QVec& S) const;

    bool operator==(const PolyExp& o) const { return terms_ == o.terms_; }

  private:
    size_t nvars_;
    std::map<Key, PolyT<Scalar>> terms_;
};

/// F(Gamma(C), T, q, lambda) as a polynomial-exponential in T for a fixed
/// complex rational lambda. T ranges over V^{F0(C)}: the F0-component of T
/// never matters in the paper's uses (the transform vanishes identically off
/// T_{F0} = 0, which the value helper below handles literally).
PolyExp laplace_gamma(const Cone& c, const Poly& q, const CVec& lambda);

/// Exact value of the Gamma transform at numeric (T, lambda).
Scalar laplace_gamma_value(const Cone& c, const Poly& q, const CVec& lambda, const QVec& T);

struct McResult {
    double estimate = 0;
    double stderr_ = 0;
    size_t samples = 0;
};

/// Importance-sampled floating estimate of laplace_cone at a real lambda in
/// the open convergence region (throws outside it). Independent of the
/// closed form: exponential sampling at half the decay rate.
McResult monte_carlo_cross_check(const Cone& c, const Poly& q, const QVec& lambda_re,
                                 size_t samples, uint64_t seed);

/// Simplicial pieces (lists of rays) of the pointed part of c, produced by
/// the pulling triangulation. Exposed for the triangulation-independence
/// property test and the Monte Carlo sampler.
std::vector<QMat> triangulate_pointed(const Cone& c);

/// laplace_cone from an explicit triangulation (same contract).
MeroTransform laplace_cone_from_triangulation(const Cone& c, const Poly& q,
                                              const std::vector<QMat>& simplices);

}  // namespace conecalc

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "conecalc/rational.hpp"

namespace conecalc {

/// Sparse multivariate polynomial over a commutative coefficient ring.
/// Exponent vectors are dense (nvars entries) and keys of an ordered map,
/// so iteration order is canonical.
template <class Coef>
class PolyT {
  public:
    using Expo = std::vector<unsigned>;

    explicit PolyT(size_t nvars = 0) : nvars_(nvars) {}

    static PolyT constant(size_t nvars, Coef c) {
        PolyT p(nvars);
        p.add_term(Expo(nvars, 0), std::move(c));
        return p;
    }
    static PolyT variable(size_t nvars, size_t i) {
        PolyT p(nvars);
        Expo e(nvars, 0);
        e[i] = 1;
        p.add_term(std::move(e), Coef(1));
        return p;
    }

    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, Coef>& terms() const { return terms_; }

    unsigned degree() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) {
            unsigned t = 0;
            for (unsigned x : e) t += x;
            if (t > d) d = t;
        }
        return d;
    }

    void add_term(Expo e, Coef c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!coef_is_zero(c)) terms_.emplace(std::move(e), std::move(c));
        } else {
            it->second += c;
            if (coef_is_zero(it->second)) terms_.erase(it);
        }
    }

    PolyT& operator+=(const PolyT& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    PolyT operator+(const PolyT& o) const {
        PolyT r = *this;
        r += o;
        return r;
    }
    PolyT operator-() const {
        PolyT r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, Coef(0) - c);
        return r;
    }
    PolyT operator-(const PolyT& o) const { return *this + (-o); }

    PolyT operator*(const PolyT& o) const {
        PolyT r(nvars_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                Expo e = e1;
                for (size_t i = 0; i < nvars_; ++i) e[i] += e2[i];
                r.add_term(std::move(e), c1 * c2);
            }
        return r;
    }

    PolyT scaled(const Coef& c) const {
        PolyT r(nvars_);
        if (coef_is_zero(c)) return r;
        for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
        return r;
    }

    bool operator==(const PolyT& o) const { return terms_ == o.terms_; }

    /// Value at a point in any ring V reachable from Coef via `lift`.
    template <class V, class Lift>
    V eval(const std::vector<V>& x, Lift lift) const {
        V total = V(0);
        for (const auto& [e, c] : terms_) {
            V m = lift(c);
            for (size_t i = 0; i < nvars_; ++i)
                for (unsigned k = 0; k < e[i]; ++k) m = m * x[i];
            total = total + m;
        }
        return total;
    }

    PolyT derivative(size_t var) const {
        PolyT r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Expo d = e;
            d[var] -= 1;
            r.add_term(std::move(d), c * Coef(static_cast<long>(e[var])));
        }
        return r;
    }

    /// p(images[0], ..., images[nvars-1]); images live in m-variable polys.
    PolyT substitute(const std::vector<PolyT>& images) const {
        if (images.size() != nvars_) throw std::invalid_argument("substitute: arity mismatch");
        size_t m = images.empty() ? 0 : images[0].nvars();
        PolyT r(m);
        for (const auto& [e, c] : terms_) {
            PolyT t = PolyT::constant(m, c);
            for (size_t i = 0; i < nvars_; ++i)
                for (unsigned k = 0; k < e[i]; ++k) t = t * images[i];
            r += t;
        }
        return r;
    }

  private:
    static bool coef_is_zero(const Coef& c) { return c == Coef(0); }

    size_t nvars_;
    std::map<Expo, Coef> terms_;
};

using Poly = PolyT<Rat>;

inline Rat poly_eval(const Poly& p, const QVec& x) {
    return p.eval<Rat>(x, [](const Rat& c) { return c; });
}

/// Composition with a linear map: p(M x) where rows of M give the images of
/// the original coordinates.
inline Poly poly_compose_linear(const Poly& p, const QMat& m) {
    std::vector<Poly> images;
    size_t cols = m.empty() ? p.nvars() : m[0].size();
    for (size_t i = 0; i < p.nvars(); ++i) {
        Poly img(cols);
        for (size_t j = 0; j < cols; ++j)
            if (m[i][j] != 0) img += Poly::variable(cols, j).scaled(m[i][j]);
        images.push_back(img);
    }
    return p.substitute(images);
}

/// Numeric shift: p(x + a).
inline Poly poly_shift(const Poly& p, const QVec& a) {
    std::vector<Poly> images;
    for (size_t i = 0; i < p.nvars(); ++i) {
        Poly img = Poly::variable(p.nvars(), i);
        img += Poly::constant(p.nvars(), a[i]);
        images.push_back(img);
    }
    return p.substitute(images);
}

std::string poly_str(const Poly& p, const std::string& var_prefix = "x");

/// Parses "3/2*x0^2*x1 - x2 + 1" style expressions (variables x0..x{n-1}).
Poly parse_poly(const std::string& text, size_t nvars);

}  // namespace conecalc

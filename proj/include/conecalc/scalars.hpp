#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>

#include "conecalc/rational.hpp"

namespace conecalc {

/// Gaussian rational a + b i.
struct GaussRat {
    Rat re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(long v) : re(v), im(0) {}
    GaussRat(Rat r) : re(std::move(r)), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
    GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
    GaussRat operator-() const { return {-re, -im}; }
    GaussRat operator*(const GaussRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRat operator/(const GaussRat& o) const {
        Rat n = o.re * o.re + o.im * o.im;
        if (n == 0) throw std::domain_error("division by zero");
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }

    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }
    bool operator<(const GaussRat& o) const {
        int c = cmp(re, o.re);
        if (c != 0) return c < 0;
        return cmp(im, o.im) < 0;
    }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
    std::string str() const {
        if (im == 0) return rat_str(re);
        return rat_str(re) + (im > 0 ? "+" : "") + rat_str(im) + "i";
    }
};

/// sqrt(r) for a nonnegative rational, split as m * sqrt(s) with s a
/// squarefree positive integer: returns (m, s). Factors by trial division;
/// the inputs here are small Gram determinants.
std::pair<Rat, unsigned long> sqrt_decompose(const Rat& r);

/// A finite exact sum  sum_{s,w} c_{s,w} * sqrt(s) * e^w  with c in Q(i),
/// s squarefree positive integers and w in Q(i) (the exponents carried by
/// truncation parameters). This ring is closed under the arithmetic of all
/// transform and period values, so everything downstream of the geometry
/// stays exact. Division is supported by single-term divisors with s = 1.
class Scalar {
  public:
    struct Key {
        unsigned long s = 1;
        GaussRat w;
        bool operator<(const Key& o) const {
            if (s != o.s) return s < o.s;
            return w < o.w;
        }
        bool operator==(const Key& o) const { return s == o.s && w == o.w; }
    };

    Scalar() = default;
    Scalar(long v) { add(Key{}, GaussRat(v)); }
    Scalar(Rat v) { add(Key{}, GaussRat(std::move(v))); }
    Scalar(GaussRat v) { add(Key{}, std::move(v)); }

    static Scalar sqrt_of(const Rat& r) {
        auto [m, s] = sqrt_decompose(r);
        Scalar out;
        out.add(Key{s, GaussRat()}, GaussRat(m));
        return out;
    }
    static Scalar exp_of(GaussRat w) {
        Scalar out;
        out.add(Key{1, std::move(w)}, GaussRat(1));
        return out;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, GaussRat>& terms() const { return terms_; }

    /// The value when the scalar is a plain Gaussian rational; throws if a
    /// sqrt or exponential survives.
    GaussRat as_gauss() const {
        if (terms_.empty()) return GaussRat();
        if (terms_.size() == 1 && terms_.begin()->first == Key{})
            return terms_.begin()->second;
        throw std::domain_error("scalar is not rational: " + str());
    }

    Scalar operator+(const Scalar& o) const {
        Scalar r = *this;
        for (const auto& [k, c] : o.terms_) r.add(k, c);
        return r;
    }
    Scalar& operator+=(const Scalar& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    Scalar operator-(const Scalar& o) const { return *this + (-o); }
    Scalar operator-() const {
        Scalar r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }

    Scalar operator*(const Scalar& o) const {
        Scalar r;
        for (const auto& [k1, c1] : terms_)
            for (const auto& [k2, c2] : o.terms_) {
                // sqrt(s1) sqrt(s2) = g * sqrt(s1 s2 / g^2) for g = gcd(s1, s2)
                unsigned long g = std::gcd(k1.s, k2.s);
                Key k{(k1.s / g) * (k2.s / g), k1.w + k2.w};
                r.add(k, c1 * c2 * GaussRat(Rat(static_cast<long>(g))));
            }
        return r;
    }

    Scalar operator/(const GaussRat& d) const {
        Scalar r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, c / d);
        return r;
    }

    bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::complex<double> to_complex() const {
        std::complex<double> total = 0;
        for (const auto& [k, c] : terms_)
            total += c.to_complex() * std::sqrt(double(k.s)) * std::exp(k.w.to_complex());
        return total;
    }

    std::string str() const;

  private:
    void add(const Key& k, const GaussRat& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) terms_.emplace(k, c);
        else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<Key, GaussRat> terms_;
};

/// Complex rational vector (exponents, transform arguments).
using CVec = std::vector<GaussRat>;

inline CVec to_cvec(const QVec& v) {
    CVec r;
    for (const Rat& x : v) r.emplace_back(x);
    return r;
}

inline bool cvec_is_zero(const CVec& v) {
    for (const GaussRat& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace conecalc

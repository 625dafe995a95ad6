#pragma once

#include <cstddef>
#include <vector>

#include "mopwalk/highprec.hpp"
#include "mopwalk/rational.hpp"

namespace mopwalk {

// Dense univariate polynomial, coefficients ascending by degree.
// Normalized form: trailing coefficient nonzero unless the zero polynomial.
template <typename T>
struct Poly {
    std::vector<T> coeffs;

    Poly() = default;
    explicit Poly(std::vector<T> c) : coeffs(std::move(c)) { normalize(); }

    static Poly zero() { return Poly{}; }
    static Poly constant(const T& c) { return Poly(std::vector<T>{c}); }

    bool is_zero() const { return coeffs.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    void normalize() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    const T& operator[](std::size_t i) const { return coeffs[i]; }

    T coeff(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : T(0); }

    template <typename X>
    X eval(const X& x) const {
        X acc(0);
        for (std::size_t i = coeffs.size(); i-- > 0;) {
            acc = acc * x + X(coeffs[i]);
        }
        return acc;
    }

    Poly derivative() const {
        if (coeffs.size() <= 1) return zero();
        std::vector<T> d(coeffs.size() - 1);
        for (std::size_t i = 1; i < coeffs.size(); ++i) d[i - 1] = coeffs[i] * T(static_cast<long>(i));
        return Poly(std::move(d));
    }

    friend Poly operator+(const Poly& p, const Poly& q) {
        std::vector<T> c(std::max(p.coeffs.size(), q.coeffs.size()), T(0));
        for (std::size_t i = 0; i < p.coeffs.size(); ++i) c[i] += p.coeffs[i];
        for (std::size_t i = 0; i < q.coeffs.size(); ++i) c[i] += q.coeffs[i];
        return Poly(std::move(c));
    }

    friend Poly operator-(const Poly& p, const Poly& q) {
        std::vector<T> c(std::max(p.coeffs.size(), q.coeffs.size()), T(0));
        for (std::size_t i = 0; i < p.coeffs.size(); ++i) c[i] += p.coeffs[i];
        for (std::size_t i = 0; i < q.coeffs.size(); ++i) c[i] -= q.coeffs[i];
        return Poly(std::move(c));
    }

    friend Poly operator*(const Poly& p, const Poly& q) {
        if (p.is_zero() || q.is_zero()) return zero();
        std::vector<T> c(p.coeffs.size() + q.coeffs.size() - 1, T(0));
        for (std::size_t i = 0; i < p.coeffs.size(); ++i)
            for (std::size_t j = 0; j < q.coeffs.size(); ++j) c[i + j] += p.coeffs[i] * q.coeffs[j];
        return Poly(std::move(c));
    }

    friend Poly operator*(const Poly& p, const T& s) {
        std::vector<T> c = p.coeffs;
        for (auto& v : c) v *= s;
        return Poly(std::move(c));
    }

    friend bool operator==(const Poly& p, const Poly& q) { return p.coeffs == q.coeffs; }
};

using RationalPoly = Poly<Rational>;
using RealPoly = Poly<Real>;

RealPoly to_real_poly(const RationalPoly& p);

// Number of distinct real roots of p in the open interval (lo, hi), by Sturm
// sequences over exact rationals. Endpoints must not be roots.
int count_roots_in(const RationalPoly& p, const Rational& lo, const Rational& hi);

}  // namespace mopwalk

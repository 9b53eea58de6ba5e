#pragma once

#include <boost/rational.hpp>

#include <complex>
#include <cstdint>
#include <string>

namespace fca {

using Rational = boost::rational<long long>;

/// Exact complex number with rational real and imaginary parts.
///
/// Constraint systems produced by the derivation engine only ever contain
/// small integer (and occasionally rational, after normalisation)
/// coefficients, so exact arithmetic keeps equation deduplication and
/// symbolic manipulation free of rounding decisions.
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(long long r) : re(r) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    GaussianRational operator-() const { return {-re, -im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    /// Exact division: (a + bi) / (c + di) = (a + bi)(c - di) / (c^2 + d^2).
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        GaussianRational p = a * b.conj();
        return {p.re / n, p.im / n};
    }
    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    std::complex<double> to_complex() const {
        return {boost::rational_cast<double>(re), boost::rational_cast<double>(im)};
    }

    std::string to_string() const {
        auto rat = [](const Rational& r) {
            std::string s = std::to_string(r.numerator());
            if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
            return s;
        };
        if (im == 0) return rat(re);
        if (re == 0) return rat(im) + "i";
        return rat(re) + (im > 0 ? "+" : "") + rat(im) + "i";
    }
};

}  // namespace fca

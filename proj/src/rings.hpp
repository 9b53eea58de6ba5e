#pragma once

#include "rational.hpp"
#include "sympoly.hpp"

#include <complex>

namespace fca {

/// Coefficient-ring abstraction for the fermionic polynomial engine.  A ring
/// supplies identities, an exact zero test (used to erase cancelled terms; all
/// supported rings cancel exactly, including std::complex where the engine
/// only ever produces sign flips and sums of identical products), and the
/// star operation used by the adjoint.
template <class R>
struct RingTraits;

template <>
struct RingTraits<std::complex<double>> {
    static std::complex<double> zero() { return {0.0, 0.0}; }
    static std::complex<double> one() { return {1.0, 0.0}; }
    static bool is_zero(const std::complex<double>& v) { return v.real() == 0.0 && v.imag() == 0.0; }
    static std::complex<double> conj(const std::complex<double>& v) { return std::conj(v); }
};

template <>
struct RingTraits<GaussianRational> {
    static GaussianRational zero() { return GaussianRational(0); }
    static GaussianRational one() { return GaussianRational(1); }
    static bool is_zero(const GaussianRational& v) { return v.is_zero(); }
    static GaussianRational conj(const GaussianRational& v) { return v.conj(); }
};

template <>
struct RingTraits<SymPoly> {
    static SymPoly zero() { return {}; }
    static SymPoly one() { return SymPoly::constant(GaussianRational(1)); }
    static bool is_zero(const SymPoly& v) { return v.is_zero(); }
    static SymPoly conj(const SymPoly& v) { return v.conjugate(); }
};

}  // namespace fca

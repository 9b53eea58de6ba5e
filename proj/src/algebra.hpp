#pragma once

#include "errors.hpp"
#include "rings.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace fca {

/// Bit mask over mode indices; bit s set means mode s participates.
using SiteMask = std::uint64_t;

constexpr int kMaxModes = 62;

inline SiteMask site_bit(int s) { return SiteMask{1} << s; }

/// Number of set bits strictly above position s.
inline int bits_above(SiteMask m, int s) { return std::popcount(m >> s >> 1); }

/// Canonical monomial: a block of creation operators with strictly ascending
/// mode indices followed by a block of annihilation operators with strictly
/// ascending mode indices.  Repeated modes inside a block square to zero, so
/// bit masks represent blocks exactly.
struct TermKey {
    SiteMask create = 0;
    SiteMask annihilate = 0;

    auto operator<=>(const TermKey&) const = default;

    int degree() const { return std::popcount(create) + std::popcount(annihilate); }
    int parity() const { return degree() & 1; }
};

/// Polynomial in fermionic ladder operators kept permanently in normal order
/// (creators left of annihilators, each block ascending).  Coefficients live
/// in any ring R with RingTraits<R>; zero coefficients are erased eagerly so
/// map equality is polynomial equality.
template <class R>
class FermiPoly {
public:
    explicit FermiPoly(int modes = 0) : modes_(modes) {
        if (modes < 0 || modes > kMaxModes) fail(ErrorKind::invalid_argument, "mode count out of range");
    }

    static FermiPoly zero(int modes) { return FermiPoly(modes); }

    static FermiPoly identity(int modes) {
        FermiPoly p(modes);
        p.terms_.emplace(TermKey{}, RingTraits<R>::one());
        return p;
    }

    static FermiPoly creation(int modes, int site) {
        FermiPoly p(modes);
        p.check_site(site);
        p.terms_.emplace(TermKey{site_bit(site), 0}, RingTraits<R>::one());
        return p;
    }

    static FermiPoly annihilation(int modes, int site) {
        FermiPoly p(modes);
        p.check_site(site);
        p.terms_.emplace(TermKey{0, site_bit(site)}, RingTraits<R>::one());
        return p;
    }

    int modes() const { return modes_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<TermKey, R>& terms() const { return terms_; }

    R coefficient(const TermKey& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? RingTraits<R>::zero() : it->second;
    }

    /// True when every term has the given degree parity (1 = odd).  The zero
    /// polynomial is homogeneous of either parity.
    bool is_homogeneous(int parity) const {
        for (const auto& [k, c] : terms_)
            if (k.parity() != parity) return false;
        return true;
    }

    void accumulate(const TermKey& key, const R& coeff) {
        if (RingTraits<R>::is_zero(coeff)) return;
        auto [it, fresh] = terms_.emplace(key, coeff);
        if (!fresh) {
            it->second = it->second + coeff;
            if (RingTraits<R>::is_zero(it->second)) terms_.erase(it);
        }
    }

    FermiPoly scaled(const R& c) const {
        FermiPoly r(modes_);
        if (RingTraits<R>::is_zero(c)) return r;
        for (const auto& [k, v] : terms_) r.accumulate(k, v * c);
        return r;
    }

    friend FermiPoly operator+(const FermiPoly& a, const FermiPoly& b) {
        a.check_same_modes(b);
        FermiPoly r = a;
        for (const auto& [k, c] : b.terms_) r.accumulate(k, c);
        return r;
    }

    friend FermiPoly operator-(const FermiPoly& a, const FermiPoly& b) {
        a.check_same_modes(b);
        FermiPoly r = a;
        for (const auto& [k, c] : b.terms_) r.accumulate(k, RingTraits<R>::zero() - c);
        return r;
    }

    FermiPoly& operator+=(const FermiPoly& o) { return *this = *this + o; }
    FermiPoly& operator-=(const FermiPoly& o) { return *this = *this - o; }

    friend bool operator==(const FermiPoly& a, const FermiPoly& b) {
        return a.modes_ == b.modes_ && a.terms_ == b.terms_;
    }

    /// Right-multiplies by a single ladder operator on mode `site`.
    ///
    /// Appending a creator to a term's annihilator block either contracts
    /// against an existing annihilator of the same mode (sign: annihilators
    /// above the mode are crossed) or inserts into the creator block (sign:
    /// the whole annihilator block plus the creators above the mode are
    /// crossed).  Both branches fire when the mode is present in the
    /// annihilator block but absent from the creator block.  Appending an
    /// annihilator only ever inserts (a duplicate annihilates the term).
    FermiPoly times_op(int site, bool dagger) const {
        check_site(site);
        FermiPoly r(modes_);
        for (const auto& [k, c] : terms_) {
            if (dagger) {
                if (k.annihilate & site_bit(site)) {
                    int sgn = bits_above(k.annihilate, site) & 1;
                    r.accumulate({k.create, k.annihilate & ~site_bit(site)}, signed_coeff(c, sgn));
                }
                if (!(k.create & site_bit(site))) {
                    int sgn = (std::popcount(k.annihilate) + bits_above(k.create, site)) & 1;
                    r.accumulate({k.create | site_bit(site), k.annihilate}, signed_coeff(c, sgn));
                }
            } else {
                if (!(k.annihilate & site_bit(site))) {
                    int sgn = bits_above(k.annihilate, site) & 1;
                    r.accumulate({k.create, k.annihilate | site_bit(site)}, signed_coeff(c, sgn));
                }
            }
        }
        return r;
    }

    friend FermiPoly multiply(const FermiPoly& a, const FermiPoly& b) {
        a.check_same_modes(b);
        FermiPoly r(a.modes_);
        for (const auto& [kb, cb] : b.terms_) {
            FermiPoly partial = a;
            for (int s = 0; s < a.modes_; ++s)
                if (kb.create & site_bit(s)) partial = partial.times_op(s, true);
            for (int s = 0; s < a.modes_; ++s)
                if (kb.annihilate & site_bit(s)) partial = partial.times_op(s, false);
            for (const auto& [k, c] : partial.terms_) r.accumulate(k, c * cb);
        }
        return r;
    }

    friend FermiPoly anticommutator(const FermiPoly& a, const FermiPoly& b) {
        return multiply(a, b) + multiply(b, a);
    }

    /// Hermitian adjoint.  Reversing a block of n distinct ladder operators
    /// contributes (-1)^(n(n-1)/2) per block; coefficients are starred.
    FermiPoly adjoint() const {
        FermiPoly r(modes_);
        for (const auto& [k, c] : terms_) {
            int nc = std::popcount(k.create);
            int na = std::popcount(k.annihilate);
            int sgn = ((nc * (nc - 1) / 2) + (na * (na - 1) / 2)) & 1;
            r.accumulate({k.annihilate, k.create}, signed_coeff(RingTraits<R>::conj(c), sgn));
        }
        return r;
    }

    /// Relabels modes through a bijection (perm[old] = new).  Each block is
    /// re-sorted after relabeling; the sign is the inversion parity of the
    /// mapped index sequence, per block.
    FermiPoly translate(const std::vector<int>& perm) const {
        if (static_cast<int>(perm.size()) != modes_)
            fail(ErrorKind::invalid_argument, "relabeling size does not match mode count");
        std::vector<bool> seen(modes_, false);
        for (int v : perm) {
            if (v < 0 || v >= modes_ || seen[v])
                fail(ErrorKind::invalid_argument, "relabeling is not a bijection on modes");
            seen[v] = true;
        }
        FermiPoly r(modes_);
        for (const auto& [k, c] : terms_) {
            auto mapped = [&](SiteMask m, int& sgn) {
                std::vector<int> image;
                for (int s = 0; s < modes_; ++s)
                    if (m & site_bit(s)) image.push_back(perm[s]);
                SiteMask out = 0;
                for (std::size_t i = 0; i < image.size(); ++i) {
                    out |= site_bit(image[i]);
                    for (std::size_t j = i + 1; j < image.size(); ++j)
                        if (image[i] > image[j]) sgn ^= 1;
                }
                return out;
            };
            int sgn = 0;
            TermKey nk{mapped(k.create, sgn), mapped(k.annihilate, sgn)};
            r.accumulate(nk, signed_coeff(c, sgn));
        }
        return r;
    }

    /// Applies a ring morphism to every coefficient (e.g. symbolic ->
    /// numeric evaluation).  F maps R to S.
    template <class S, class F>
    FermiPoly<S> map_coefficients(F&& f) const {
        FermiPoly<S> r(modes_);
        for (const auto& [k, c] : terms_) r.accumulate(k, f(c));
        return r;
    }

private:
    static R signed_coeff(const R& c, int sgn) { return sgn ? RingTraits<R>::zero() - c : c; }

    void check_site(int site) const {
        if (site < 0 || site >= modes_) fail(ErrorKind::invalid_argument, "mode index out of range");
    }

    void check_same_modes(const FermiPoly& o) const {
        if (modes_ != o.modes_) fail(ErrorKind::invalid_argument, "mode counts differ");
    }

    int modes_;
    std::map<TermKey, R> terms_;
};

/// A single ladder operator reference: mode index plus dagger flag.
struct LadderOp {
    int site;
    bool dagger;
};

/// Normal-orders the word op[0] * op[1] * ... * op[k-1] premultiplied by
/// `sign` (+1 or -1), returning the canonical polynomial.
template <class R>
FermiPoly<R> normal_order(int modes, const std::vector<LadderOp>& ops, int sign = 1) {
    if (sign != 1 && sign != -1) fail(ErrorKind::invalid_argument, "sign must be +1 or -1");
    FermiPoly<R> p = FermiPoly<R>::identity(modes);
    if (sign == -1) p = p.scaled(RingTraits<R>::zero() - RingTraits<R>::one());
    for (const LadderOp& op : ops) p = p.times_op(op.site, op.dagger);
    return p;
}

using CPoly = FermiPoly<std::complex<double>>;
using SPoly = FermiPoly<SymPoly>;

/// Evaluates a symbolic polynomial's coefficients at a numeric assignment.
inline CPoly evaluate_poly(const SPoly& p,
                           const std::map<std::string, std::complex<double>>& assignment) {
    return p.map_coefficients<std::complex<double>>(
        [&](const SymPoly& c) { return c.evaluate(assignment); });
}

}  // namespace fca

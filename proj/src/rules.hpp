#pragma once

#include "algebra.hpp"
#include "groups.hpp"
#include "sympoly.hpp"

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fca {

/// One interaction term of a local rule, identified by which template
/// positions carry a creation operator (s) and which carry an annihilation
/// operator (t).  The term emits, for each template position l in template
/// order, first a creation operator (if bit l of s is set) and then an
/// annihilation operator (if bit l of t is set); its total operator count
/// |s| + |t| must be odd so the rule maps fields to odd polynomials.
struct Descriptor {
    std::uint32_t s = 0;
    std::uint32_t t = 0;
    auto operator<=>(const Descriptor&) const = default;
};

inline int popcount32(std::uint32_t v) { return std::popcount(v); }

bool descriptor_valid(Descriptor d, int arity);
bool descriptor_number_preserving(Descriptor d);

/// All valid descriptors for a template of the given arity, ordered by
/// (s, t); restricted to number-preserving ones when requested.
std::vector<Descriptor> all_descriptors(int arity, bool number_preserving_only);

/// Deterministic coefficient name for a descriptor, derived from the block
/// structure of the term.  With P = s∩t (positions measured and re-excited),
/// D = s∖t (pure creators) and A = t∖s (pure annihilators):
///   (|P|,|D|,|A|) = (0,0,1) -> alpha_<A>      (0,1,0) -> gamma_<D>
///                   (1,0,1) -> beta_<P><A>    (1,1,0) -> eta_<P><D>
/// and for three-position templates covering every position:
///   (0,1,2) -> xi_<rotation starting at D>    (0,2,1) -> chi_<rotation ending at A>
///   (2,0,1) -> mu_<rotation ending at A>      (2,1,0) -> nu_<rotation ending at D>
///   (0,0,3) -> theta                          (0,3,0) -> thetabar
/// Other shapes fall back to a positional name c_s<positions>_t<positions>.
/// Multi-character labels are joined with underscores to keep names unique.
std::string descriptor_name(const std::vector<std::string>& template_labels, Descriptor d);

/// Coefficient of one rule term: either a fixed complex value or a named
/// symbol standing for an undetermined value.
struct RuleCoeff {
    bool symbolic = false;
    std::complex<double> value{0.0, 0.0};
    std::string symbol;

    static RuleCoeff number(std::complex<double> v) { return RuleCoeff{false, v, {}}; }
    static RuleCoeff named(std::string name) { return RuleCoeff{true, {0.0, 0.0}, std::move(name)}; }
};

/// A translation-invariant local rule on a Cayley graph: the image of the
/// field at the identity is a sum of odd monomials supported on the
/// neighborhood template, and the image at g is the same expression
/// translated by left multiplication.
struct LocalRule {
    CayleyGraph graph;
    bool number_preserving = false;
    std::map<Descriptor, RuleCoeff> terms;

    int arity() const { return static_cast<int>(graph.neighborhood.size()); }
    bool symbolic() const;

    /// Name of the coefficient for a descriptor under this rule's template.
    std::string name_of(Descriptor d) const { return descriptor_name(graph.template_labels(), d); }
};

/// Fully symbolic rule carrying every descriptor allowed by the flags, each
/// with its generated coefficient name.
LocalRule general_rule(const CayleyGraph& graph, bool number_preserving);

/// Numeric rule with the given descriptor coefficients (zeros are dropped).
LocalRule numeric_rule(const CayleyGraph& graph, bool number_preserving,
                       const std::map<Descriptor, std::complex<double>>& coeffs);

/// Image of the field at group element g under the rule, as a polynomial
/// with symbolic coefficients (numeric coefficients become constants).
SPoly evolved_symbolic(const LocalRule& rule, int g);

/// Same with fixed complex coefficients; errors if the rule is symbolic.
CPoly evolved_numeric(const LocalRule& rule, int g);

/// Normal form of the single emitted monomial of a descriptor placed at the
/// identity: a one-term polynomial whose coefficient is +1 or -1.
/// The mapping descriptor -> (term key, sign) is injective, which is what
/// makes rules recoverable from their template polynomials.
std::pair<TermKey, int> descriptor_monomial(const CayleyGraph& graph, Descriptor d);

/// The rule obtained by conjugating every evolved field with the self-adjoint
/// unitary that exchanges each mode's occupied and empty states (the product
/// over all modes of creation + annihilation).  Numeric rules only.
LocalRule flip_rule(const LocalRule& rule);

/// Particle-hole flip as a polynomial: the ordered product, over mode
/// positions ascending, of (creation + annihilation).
template <class R>
FermiPoly<R> flip_polynomial(int modes) {
    FermiPoly<R> p = FermiPoly<R>::identity(modes);
    for (int j = 0; j < modes; ++j) {
        FermiPoly<R> f = FermiPoly<R>::creation(modes, j) + FermiPoly<R>::annihilation(modes, j);
        p = multiply(p, f);
    }
    return p;
}

}  // namespace fca

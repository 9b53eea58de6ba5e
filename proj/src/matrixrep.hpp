#pragma once

#include "algebra.hpp"
#include "groups.hpp"
#include "rules.hpp"

#include <Eigen/Dense>

#include <map>
#include <string>
#include <vector>

namespace fca {

/// Largest mode count admitted by the dense 2^N representation.
constexpr int kMaxDenseModes = 10;
/// Largest mode count admitted by the unitary synthesis (the null-space
/// solve works on 4^N-dimensional operators).
constexpr int kMaxSynthesisModes = 6;

/// Basis conventions of the dense representation.
///
/// Mode position j is carried by qubit j; the computational index of a basis
/// state packs occupations most-significant-first, so occupation(i, j) =
/// bit (N-1-j) of i and the occupation string of index i is its N-bit binary
/// rendering.  The multi-particle state behind an occupation string is the
/// product of creation operators at the occupied positions applied in
/// descending position order (rightmost factor = lowest position) to the
/// empty state; with the string convention below this pairing is sign-free.
///
/// `state_order` fixes the listed order in which sectors are reported: entry
/// r is the computational index of the r-th listed state.  The two case
/// studies use explicit catalogued lists (vacuum, then the even sectors,
/// then the odd sectors, in the fixed per-sector orders the analysis relies
/// on); any other mode set falls back to: even particle numbers ascending,
/// then odd ascending, ties within a particle number broken by descending
/// computational index.
struct BasisOrdering {
    int modes = 0;
    std::vector<std::string> site_labels;  // mode position -> group element label
    std::vector<int> state_order;          // listed position -> computational index
    std::vector<int> state_position;       // computational index -> listed position

    int dim() const { return 1 << modes; }
    int occupation(int comp_index, int position) const {
        return (comp_index >> (modes - 1 - position)) & 1;
    }
    int particle_number(int comp_index) const;
    int parity(int comp_index) const { return particle_number(comp_index) & 1; }
    std::string occupation_string(int comp_index) const;

    /// Listed positions of even-parity (resp. odd-parity) states.
    std::vector<int> parity_positions(int parity) const;

    static BasisOrdering for_graph(const CayleyGraph& graph);

    /// Catalogued ordering for a case id ("z2xz2" or "z5").
    static BasisOrdering reference(const std::string& scheme);

    /// Explicit ordering from occupation strings (must enumerate all 2^N).
    static BasisOrdering from_strings(std::vector<std::string> site_labels,
                                      const std::vector<std::string>& states);

    friend bool operator==(const BasisOrdering&, const BasisOrdering&) = default;
};

/// Dense representation of a ladder polynomial: each mode becomes a qubit,
/// a lowering operator acts on its own qubit and carries a sign given by the
/// occupations of all later positions, so that the canonical anticommutation
/// relations hold exactly.  Rows/columns use the computational index
/// convention of BasisOrdering.
Eigen::MatrixXcd jordan_wigner(const CPoly& p);

enum class ParityCharacter { preserving, flipping, neither };

/// A synthesized evolution operator with its basis bookkeeping and quality
/// diagnostics.  `state` is the matrix re-indexed to the listed state order;
/// leakage figures are maximal absolute entries over the index pairs named.
struct EvolutionMatrix {
    BasisOrdering ordering;
    Eigen::MatrixXcd state;
    double unitarity_residual = 0.0;    // max |(U†U - I)_{ij}|
    double conjugation_residual = 0.0;  // max_g max |(U J(psi_g) U† - J(psi'_g))_{ij}|
    double number_leakage = 0.0;        // entries between different particle numbers
    double parity_leakage = 0.0;        // entries between different parities
    double parity_diagonal = 0.0;       // entries between equal parities

    ParityCharacter parity_character(double tol = 1e-10) const;
    Eigen::MatrixXcd computational() const;

    static EvolutionMatrix from_computational(BasisOrdering ordering,
                                              const Eigen::MatrixXcd& comp);
};

/// Synthesizes the unitary U with U J(psi_g) U† = J(psi'_g) for every group
/// element g, where psi'_g is the rule's evolved field.  The joint null
/// space of the maps X -> J(psi'_g) X - X J(psi_g), stacked over all g and
/// their adjoints, is required to be exactly one-dimensional; the element is
/// rescaled to a unitary and its global phase is fixed by making the first
/// significant entry of the empty-state column (scanned in listed state
/// order) real and positive.
///
/// Errors: invalid_argument for symbolic rules or more than
/// kMaxSynthesisModes modes; constraint when the null space dimension is not
/// 1 (the rule does not induce a mode-algebra automorphism, e.g. a
/// coefficient table violating the anticommutation constraints) or when the
/// normalized element fails unitarity at 1e-10.
EvolutionMatrix synthesize_unitary(const LocalRule& rule);

/// Dense image of the self-adjoint unitary exchanging each mode's occupied
/// and empty states: the ordered product over positions ascending of
/// (creation + annihilation), in the computational convention.
Eigen::MatrixXcd flip_operator(const BasisOrdering& ordering);

/// Named sub-blocks of an evolution matrix in a catalogued listed order.
///
/// Scheme "z2xz2" (16 states): S = single-particle 4x4, T = three-particle
/// 4x4, A / B = the two 3x3 quadrants of the two-particle 6x6 read from its
/// top half ([[A, B], [B, A]] is the expected exchange structure, whose
/// failure is reported in exchange_symmetry_residual).  Scheme "z5"
/// (32 states): A = single-particle 5x5, B = three-particle 10x10,
/// C = four-particle 5x5, D = two-particle 10x10.  off_block_leakage is the
/// largest absolute entry outside the union of the per-sector diagonal
/// blocks (empty and full states included).
struct SectorBlocks {
    std::string scheme;
    std::map<std::string, Eigen::MatrixXcd> blocks;
    double off_block_leakage = 0.0;
    double exchange_symmetry_residual = 0.0;  // z2xz2 only
};

SectorBlocks sector_blocks(const EvolutionMatrix& u, const std::string& scheme);

}  // namespace fca

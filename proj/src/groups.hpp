#pragma once

#include "errors.hpp"

#include <string>
#include <vector>

namespace fca {

/// Finite group given by an explicit multiplication table over element
/// indices 0..order-1, with printable labels.
struct FiniteGroupModel {
    std::vector<std::string> labels;       // element index -> label
    std::vector<std::vector<int>> table;   // table[a][b] = index of a*b
    int identity = 0;

    int order() const { return static_cast<int>(labels.size()); }
    int mul(int a, int b) const { return table[a][b]; }
    int inverse(int a) const;

    /// Index of the element with the given label; errors on unknown labels.
    int index_of(const std::string& label) const;

    /// Validates closure, associativity, identity and inverses.  Errors with
    /// a "not a group" message when the table fails any axiom.
    static FiniteGroupModel from_table(std::vector<std::vector<int>> table,
                                       std::vector<std::string> labels);

    /// "z2xz2" (labels e,a,b,c; e identity), "z5", or "zn" via cyclic(n).
    static FiniteGroupModel preset(const std::string& name);
    static FiniteGroupModel cyclic(int n);
    static FiniteGroupModel klein_four();
};

/// Cayley graph data for a local rule: the group, an ordered neighborhood
/// template (elements h_0..h_{k-1} whose translates g*h_l form the
/// neighborhood of g), and the fixed mode numbering used by every matrix
/// representation.
struct CayleyGraph {
    FiniteGroupModel group;
    std::vector<int> neighborhood;       // template element indices, ordered
    std::vector<int> site_order;         // mode position -> element index
    std::vector<int> position_of;        // element index -> mode position

    int modes() const { return group.order(); }
    int position(int element) const { return position_of[element]; }

    /// Ordered neighborhood of g: positions of g*h_0, ..., g*h_{k-1}.
    std::vector<int> neighborhood_positions(int g) const;

    /// Mode relabeling induced by left translation f -> g*f.
    std::vector<int> translation_perm(int g) const;

    std::vector<std::string> template_labels() const;

    /// Builds the graph with the default mode numbering: template elements
    /// first (in template order), then the remaining elements in descending
    /// index order.
    static CayleyGraph make(FiniteGroupModel group, const std::vector<std::string>& neighborhood_labels);
    static CayleyGraph make_with_order(FiniteGroupModel group,
                                       const std::vector<std::string>& neighborhood_labels,
                                       const std::vector<std::string>& site_order_labels);
};

/// Description of a quotient of a (virtually abelian here: integer line or
/// explicit finite) base group, used for the neighborhood-regularity test.
struct QuotientSpec {
    bool integer_base = true;              // true: base is the integer line
    std::vector<long long> offsets;        // neighborhood template in the base
    int quotient_modulus = 0;              // integers -> Z_n

    // Explicit finite-to-finite quotient:
    FiniteGroupModel base_group;
    std::vector<int> base_neighborhood;    // template element indices
    std::vector<int> kernel;               // normal subgroup element indices
};

/// Checks that the quotient preserves the neighborhood structure: for every
/// ordered template pair (h1, h2) with difference d = h1 * h2^{-1} taken in
/// the base group, the projection of N(0) ∩ N(d) must equal the intersection
/// of the projected neighborhoods of [0] and [d].  The difference is kept as
/// a base-group element (not its class), so e.g. offsets {0,1,-1} with
/// modulus 4 fail on d = 2 and d = -2 separately.
bool is_regular(const QuotientSpec& spec);

}  // namespace fca

#pragma once

#include "rules.hpp"

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace fca {

/// One scalar equation of the preservation system: the coefficient of one
/// normal-ordered monomial in one anticommutator bracket, required to equal
/// 0, or 1 for the identity monomial of a field/adjoint bracket at equal
/// sites.  Provenance records which bracket produced it.
struct Equation {
    SymPoly lhs;
    int rhs = 0;                 // 0 or 1
    std::string pair_x, pair_y;  // group element labels of the bracket pair
    std::string bracket;         // "pp": {field, field}; "pd": {field, adjoint}
    TermKey monomial;            // the monomial whose coefficient this is
};

struct ConstraintSystem {
    CayleyGraph graph;
    bool number_preserving = false;
    std::vector<std::string> variables;  // sorted coefficient names
    std::vector<Equation> equations;
};

/// Derives the system of polynomial equations on the rule coefficients that
/// is equivalent to the evolved fields satisfying the canonical
/// anticommutation relations.  By translation invariance it is enough to
/// bracket the evolved field at the identity against the evolved field (and
/// evolved adjoint) at every group element; set full_enumeration to bracket
/// all ordered pairs instead.  Equations that repeat an earlier one (exactly
/// for inhomogeneous ones, up to a scalar for homogeneous ones) are kept out;
/// the first occurrence, in generation order, survives.
ConstraintSystem derive_constraints(const LocalRule& rule, bool full_enumeration = false);

struct VerifyFailure {
    std::size_t equation_index = 0;
    double residual = 0.0;
};

struct VerifyReport {
    bool pass = false;
    double max_residual = 0.0;
    double tol = 0.0;
    std::vector<VerifyFailure> failures;
};

/// Evaluates every equation at the assignment (name -> value); errors if a
/// system variable has no value.  An equation fails when |lhs - rhs| > tol.
VerifyReport verify_assignment(const ConstraintSystem& system,
                               const std::map<std::string, std::complex<double>>& assignment,
                               double tol);

/// Assignment holding the values of a numeric rule's coefficients under their
/// generated names, with every other coefficient name of the same shape set
/// to zero.  This is how a concrete rule is checked against the system
/// derived from the fully symbolic rule on the same graph.
std::map<std::string, std::complex<double>> assignment_of(const LocalRule& rule);

/// Direct check that a numeric rule's evolved fields satisfy the canonical
/// anticommutation relations, without going through a symbolic system.
VerifyReport verify_rule(const LocalRule& rule, double tol, bool full_enumeration = false);

/// The coefficients of the one-operator terms of a numeric rule, arranged as
/// matrices over mode positions: particle block a (annihilator terms) and
/// pair block g (creator terms), plus the doubled matrix
/// [[a, g], [conj(g), conj(a)]] whose unitarity is equivalent to the
/// preservation system restricted to a linear rule.
struct LinearSector {
    Eigen::MatrixXcd particle;   // modes x modes
    Eigen::MatrixXcd pair;       // modes x modes
    Eigen::MatrixXcd doubled;    // 2*modes x 2*modes
    double unitarity_residual = 0.0;
};

LinearSector linear_sector(const LocalRule& rule);

}  // namespace fca

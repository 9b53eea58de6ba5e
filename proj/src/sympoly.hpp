#pragma once

#include "rational.hpp"

#include <compare>
#include <complex>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace fca {

/// One symbol occurrence inside a monomial.  `conjugated` marks the starred
/// form of the variable; a variable and its conjugate are independent symbols
/// for ordering purposes but are linked by `SymPoly::conjugate()` and by
/// evaluation (the starred form evaluates to the complex conjugate).
struct Variable {
    std::string name;
    bool conjugated = false;

    auto operator<=>(const Variable&) const = default;

    std::string to_string() const { return conjugated ? name + "*" : name; }
};

/// Sorted multiset of variables; the empty monomial is the constant term.
using Monomial = std::vector<Variable>;

/// Multivariate polynomial over GaussianRational coefficients, used as the
/// coefficient ring for symbolic local rules.  Zero coefficients are erased
/// eagerly so that map equality coincides with polynomial equality.
class SymPoly {
public:
    SymPoly() = default;

    static SymPoly constant(GaussianRational c);
    static SymPoly variable(const std::string& name, bool conjugated = false);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant-term value (zero if absent).
    GaussianRational constant_term() const;

    const std::map<Monomial, GaussianRational>& terms() const { return terms_; }

    SymPoly operator-() const;
    friend SymPoly operator+(const SymPoly& a, const SymPoly& b);
    friend SymPoly operator-(const SymPoly& a, const SymPoly& b);
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    SymPoly& operator+=(const SymPoly& o) { return *this = *this + o; }
    SymPoly& operator-=(const SymPoly& o) { return *this = *this - o; }
    SymPoly& operator*=(const SymPoly& o) { return *this = *this * o; }
    friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator<(const SymPoly& a, const SymPoly& b) { return a.terms_ < b.terms_; }

    SymPoly scaled(const GaussianRational& c) const;

    /// Star operation: conjugates every coefficient and flips the conjugation
    /// flag of every variable occurrence.
    SymPoly conjugate() const;

    /// Divides by the coefficient of the lexicographically smallest monomial,
    /// producing a canonical representative of the ray {c * p : c != 0}.
    /// Returns the zero polynomial unchanged.
    SymPoly normalized() const;

    /// Substitutes numeric values; starred occurrences use the conjugate of
    /// the assigned value.  Throws std::out_of_range naming the first symbol
    /// without an assignment.
    std::complex<double> evaluate(const std::map<std::string, std::complex<double>>& assignment) const;

    /// Distinct base symbol names appearing in the polynomial (ignoring the
    /// conjugation flag).
    std::set<std::string> symbols() const;

    std::string to_string() const;

private:
    void insert(const Monomial& m, const GaussianRational& c);

    std::map<Monomial, GaussianRational> terms_;
};

}  // namespace fca

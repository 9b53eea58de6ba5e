#include "constraints.hpp"

#include <algorithm>
#include <set>

namespace fca {

namespace {

void append_bracket_equations(ConstraintSystem& system, const LocalRule& rule, int x, int y,
                              std::set<std::string>& seen_homogeneous,
                              std::set<std::string>& seen_inhomogeneous) {
    const auto& labels = rule.graph.group.labels;
    const SPoly px = evolved_symbolic(rule, x);
    const SPoly py = evolved_symbolic(rule, y);

    auto push = [&](const SymPoly& lhs, int rhs, const char* bracket, TermKey key) {
        if (rhs == 0) {
            if (lhs.is_zero()) return;
            const std::string fingerprint = lhs.normalized().to_string();
            if (!seen_homogeneous.insert(fingerprint).second) return;
        } else {
            const std::string fingerprint = lhs.to_string();
            if (!seen_inhomogeneous.insert(fingerprint).second) return;
        }
        system.equations.push_back(Equation{lhs, rhs, labels[x], labels[y], bracket, key});
    };

    const SPoly pp = anticommutator(px, py);
    for (const auto& [key, lhs] : pp.terms()) push(lhs, 0, "pp", key);

    const SPoly pd = anticommutator(px, py.adjoint());
    const TermKey identity_key{};
    bool saw_identity = false;
    for (const auto& [key, lhs] : pd.terms()) {
        const bool is_identity = key == identity_key;
        saw_identity = saw_identity || is_identity;
        push(lhs, is_identity && x == y ? 1 : 0, "pd", key);
    }
    if (x == y && !saw_identity) {
        // An empty rule never reproduces the identity; record the
        // unsatisfiable equation instead of silently accepting it.
        push(SymPoly::constant(GaussianRational(0)), 1, "pd", identity_key);
    }
}

}  // namespace

ConstraintSystem derive_constraints(const LocalRule& rule, bool full_enumeration) {
    ConstraintSystem system;
    system.graph = rule.graph;
    system.number_preserving = rule.number_preserving;

    std::set<std::string> names;
    for (const auto& [d, coeff] : rule.terms) {
        if (coeff.symbolic) names.insert(coeff.symbol);
    }
    system.variables.assign(names.begin(), names.end());

    std::set<std::string> seen_homogeneous, seen_inhomogeneous;
    const int n = rule.graph.group.order();
    if (full_enumeration) {
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) {
                append_bracket_equations(system, rule, x, y, seen_homogeneous, seen_inhomogeneous);
            }
        }
    } else {
        const int e = rule.graph.group.identity;
        for (int y = 0; y < n; ++y) {
            append_bracket_equations(system, rule, e, y, seen_homogeneous, seen_inhomogeneous);
        }
    }
    return system;
}

VerifyReport verify_assignment(const ConstraintSystem& system,
                               const std::map<std::string, std::complex<double>>& assignment,
                               double tol) {
    for (const auto& name : system.variables) {
        if (!assignment.count(name)) {
            fail(ErrorKind::invalid_argument, "no value assigned to variable '" + name + "'");
        }
    }
    VerifyReport report;
    report.tol = tol;
    for (std::size_t i = 0; i < system.equations.size(); ++i) {
        const Equation& eq = system.equations[i];
        const std::complex<double> value = eq.lhs.evaluate(assignment);
        const double residual = std::abs(value - static_cast<double>(eq.rhs));
        report.max_residual = std::max(report.max_residual, residual);
        if (residual > tol) report.failures.push_back(VerifyFailure{i, residual});
    }
    report.pass = report.failures.empty();
    return report;
}

std::map<std::string, std::complex<double>> assignment_of(const LocalRule& rule) {
    if (rule.symbolic()) fail(ErrorKind::invalid_argument, "cannot read values off a symbolic rule");
    std::map<std::string, std::complex<double>> out;
    const auto labels = rule.graph.template_labels();
    for (Descriptor d : all_descriptors(rule.arity(), rule.number_preserving)) {
        out[descriptor_name(labels, d)] = {0.0, 0.0};
    }
    for (const auto& [d, coeff] : rule.terms) {
        out[descriptor_name(labels, d)] = coeff.value;
    }
    return out;
}

VerifyReport verify_rule(const LocalRule& rule, double tol, bool full_enumeration) {
    if (rule.symbolic()) fail(ErrorKind::invalid_argument, "cannot numerically verify a symbolic rule");
    VerifyReport report;
    report.tol = tol;
    std::size_t bracket_index = 0;

    auto check = [&](int x, int y) {
        const CPoly px = evolved_numeric(rule, x);
        const CPoly py = evolved_numeric(rule, y);
        auto scan = [&](const CPoly& b) {
            double residual = 0.0;
            for (const auto& [key, c] : b.terms()) residual = std::max(residual, std::abs(c));
            report.max_residual = std::max(report.max_residual, residual);
            if (residual > tol) report.failures.push_back(VerifyFailure{bracket_index, residual});
            ++bracket_index;
        };
        scan(anticommutator(px, py));
        CPoly pd = anticommutator(px, py.adjoint());
        if (x == y) pd -= CPoly::identity(rule.graph.modes());
        scan(pd);
    };

    const int n = rule.graph.group.order();
    if (full_enumeration) {
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) check(x, y);
        }
    } else {
        for (int y = 0; y < n; ++y) check(rule.graph.group.identity, y);
    }
    report.pass = report.failures.empty();
    return report;
}

LinearSector linear_sector(const LocalRule& rule) {
    if (rule.symbolic()) fail(ErrorKind::invalid_argument, "linear sector needs a numeric rule");
    const int n = rule.graph.modes();
    const int arity = rule.arity();
    LinearSector sector;
    sector.particle = Eigen::MatrixXcd::Zero(n, n);
    sector.pair = Eigen::MatrixXcd::Zero(n, n);
    for (int g = 0; g < rule.graph.group.order(); ++g) {
        const auto positions = rule.graph.neighborhood_positions(g);
        const int row = rule.graph.position(g);
        for (int l = 0; l < arity; ++l) {
            auto it = rule.terms.find(Descriptor{0u, 1u << l});
            if (it != rule.terms.end()) sector.particle(row, positions[l]) += it->second.value;
            it = rule.terms.find(Descriptor{1u << l, 0u});
            if (it != rule.terms.end()) sector.pair(row, positions[l]) += it->second.value;
        }
    }
    sector.doubled = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    sector.doubled.topLeftCorner(n, n) = sector.particle;
    sector.doubled.topRightCorner(n, n) = sector.pair;
    sector.doubled.bottomLeftCorner(n, n) = sector.pair.conjugate();
    sector.doubled.bottomRightCorner(n, n) = sector.particle.conjugate();
    const Eigen::MatrixXcd b = sector.doubled;
    const double r1 = (b * b.adjoint() - Eigen::MatrixXcd::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff();
    const double r2 = (b.adjoint() * b - Eigen::MatrixXcd::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff();
    sector.unitarity_residual = std::max(r1, r2);
    return sector;
}

}  // namespace fca

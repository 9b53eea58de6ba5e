#include "families.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace fca {

namespace {

constexpr double kDomainTol = 1e-9;

double get_number(const FamilyParams& p, const std::string& name, const double* fallback = nullptr) {
    auto it = p.numbers.find(name);
    if (it != p.numbers.end()) return it->second;
    if (fallback) return *fallback;
    fail(ErrorKind::invalid_argument, "missing family parameter '" + name + "'");
}

std::string get_string(const FamilyParams& p, const std::string& name, const char* fallback = nullptr) {
    auto it = p.strings.find(name);
    if (it != p.strings.end()) return it->second;
    if (fallback) return fallback;
    fail(ErrorKind::invalid_argument, "missing family parameter '" + name + "'");
}

std::complex<double> phase(double angle) { return std::polar(1.0, angle); }

int template_position(const CayleyGraph& graph, const std::string& label) {
    const auto labels = graph.template_labels();
    for (std::size_t l = 0; l < labels.size(); ++l) {
        if (labels[l] == label) return static_cast<int>(l);
    }
    fail(ErrorKind::invalid_argument, "'" + label + "' is not a neighborhood template element");
}

std::uint32_t bit(int l) { return 1u << l; }

// Descriptor shapes used by the catalogued families, written over template
// positions: an excitation amplitude at position a is (s,t) = (0, {a}); a
// pair amplitude is ({a}, 0); a conditioned amplitude beta_{p,a} is
// ({p}, {p,a}); eta_{p,d} is ({p,d}, {p}); the five-operator terms measure
// two positions and move the third.
Descriptor alpha_desc(int a) { return Descriptor{0u, bit(a)}; }
Descriptor gamma_desc(int d) { return Descriptor{bit(d), 0u}; }
Descriptor beta_desc(int p, int a) { return Descriptor{bit(p), bit(p) | bit(a)}; }
Descriptor eta_desc(int p, int d) { return Descriptor{bit(p) | bit(d), bit(p)}; }
Descriptor mu_desc(int a) { return Descriptor{7u & ~bit(a), 7u}; }
Descriptor nu_desc(int d) { return Descriptor{7u, 7u & ~bit(d)}; }

LocalRule klein_family_two(const CayleyGraph& graph, const FamilyParams& params) {
    const double zero = 0.0;
    const std::string site = get_string(params, "alpha_site");
    const double theta = get_number(params, "theta", &zero);
    const double phi = get_number(params, "phi");
    const double c = std::cos(phi - theta);
    if (c > kDomainTol) {
        fail(ErrorKind::constraint,
             "family constraint violated: the conditioned amplitude modulus -2cos(phi - theta) is negative");
    }
    const double mod_beta = std::max(0.0, -2.0 * c);
    const int px = template_position(graph, site);
    const std::complex<double> alpha = phase(theta);
    const std::complex<double> beta = mod_beta * phase(phi);

    std::map<Descriptor, std::complex<double>> coeffs;
    coeffs[alpha_desc(px)] = alpha;
    for (int l = 0; l < 3; ++l) {
        if (l != px) coeffs[beta_desc(l, px)] = beta;
    }
    coeffs[mu_desc(px)] = beta * beta / alpha;
    return numeric_rule(graph, true, coeffs);
}

LocalRule klein_family_three(const CayleyGraph& graph, const FamilyParams& params) {
    const std::string sx = get_string(params, "site_x");
    const std::string sy = get_string(params, "site_y");
    if (sx == sy) fail(ErrorKind::invalid_argument, "site_x and site_y must differ");
    const double theta_x = get_number(params, "theta_x");
    const double theta_y = get_number(params, "theta_y");
    const double phi_yx = get_number(params, "phi_yx");
    const double t = get_number(params, "t");
    if (t < -kDomainTol || t > 1.0 + kDomainTol) {
        fail(ErrorKind::invalid_argument, "parameter t must lie in [0, 1]");
    }
    if (std::abs(std::cos(theta_x - theta_y)) > kDomainTol) {
        fail(ErrorKind::constraint,
             "family constraint violated: the two excitation phases must be in quadrature");
    }
    const double phi_xy = theta_y - theta_x + phi_yx;
    const double cz = std::cos(theta_x - phi_yx);
    if (cz > kDomainTol) {
        fail(ErrorKind::constraint,
             "family constraint violated: the conditioned amplitude moduli -2|alpha| cos(theta_x - phi_yx) are negative");
    }
    const double ax = std::sqrt(std::clamp(t, 0.0, 1.0));
    const double ay = std::sqrt(std::clamp(1.0 - t, 0.0, 1.0));
    const int px = template_position(graph, sx);
    const int py = template_position(graph, sy);

    std::map<Descriptor, std::complex<double>> coeffs;
    coeffs[alpha_desc(px)] = ax * phase(theta_x);
    coeffs[alpha_desc(py)] = ay * phase(theta_y);
    coeffs[beta_desc(py, px)] = (-2.0 * ax * std::min(cz, 0.0)) * phase(phi_yx);
    coeffs[beta_desc(px, py)] = (-2.0 * ay * std::min(cz, 0.0)) * phase(phi_xy);
    return numeric_rule(graph, true, coeffs);
}

LocalRule cyclic_family_one(const CayleyGraph& graph, const FamilyParams& params) {
    const double zero = 0.0;
    const std::string kind = get_string(params, "kind", "np");
    const std::string offset = get_string(params, "offset", "1");
    const double theta = get_number(params, "theta", &zero);
    const int p = template_position(graph, offset);
    std::map<Descriptor, std::complex<double>> coeffs;
    if (kind == "np") {
        coeffs[alpha_desc(p)] = phase(theta);
        return numeric_rule(graph, true, coeffs);
    }
    if (kind == "nnp") {
        coeffs[gamma_desc(p)] = phase(theta);
        return numeric_rule(graph, false, coeffs);
    }
    fail(ErrorKind::invalid_argument, "family parameter 'kind' must be \"np\" or \"nnp\"");
}

LocalRule cyclic_family_three(const CayleyGraph& graph, const FamilyParams& params) {
    const double zero = 0.0;
    const double theta0 = get_number(params, "theta0", &zero);
    const double phi = get_number(params, "phi");
    const double c = std::cos(phi - theta0);
    if (c > kDomainTol) {
        fail(ErrorKind::constraint,
             "family constraint violated: the conditioned amplitude modulus -2cos(phi - theta0) is negative");
    }
    const std::complex<double> alpha = phase(theta0);
    const std::complex<double> beta = std::max(0.0, -2.0 * c) * phase(phi);
    const int p1 = template_position(graph, "1");
    const int p0 = template_position(graph, "0");
    const int p4 = template_position(graph, "4");

    std::map<Descriptor, std::complex<double>> coeffs;
    coeffs[alpha_desc(p0)] = alpha;
    coeffs[beta_desc(p1, p0)] = beta;
    coeffs[beta_desc(p4, p0)] = beta;
    coeffs[mu_desc(p0)] = beta * beta / alpha;
    return numeric_rule(graph, true, coeffs);
}

LocalRule cyclic_family_two(const CayleyGraph& graph, const FamilyParams& params) {
    const bool direct = params.numbers.count("omega0") || params.numbers.count("phi_eta");
    if (!direct) {
        // Particle-hole flip of the number-preserving family at the same
        // parameters.
        return flip_rule(cyclic_family_three(graph, params));
    }
    const double zero = 0.0;
    const double omega0 = get_number(params, "omega0", &zero);
    const double phi_eta = get_number(params, "phi_eta");
    const double c = std::cos(phi_eta - omega0);
    if (c > kDomainTol) {
        fail(ErrorKind::constraint,
             "family constraint violated: the conditioned pair modulus -2cos(phi_eta - omega0) is negative");
    }
    const std::complex<double> gamma = phase(omega0);
    const std::complex<double> eta = std::max(0.0, -2.0 * c) * phase(phi_eta);
    const int p1 = template_position(graph, "1");
    const int p0 = template_position(graph, "0");
    const int p4 = template_position(graph, "4");

    std::map<Descriptor, std::complex<double>> coeffs;
    coeffs[gamma_desc(p0)] = gamma;
    coeffs[eta_desc(p1, p0)] = eta;
    coeffs[eta_desc(p4, p0)] = eta;
    coeffs[nu_desc(p0)] = eta * eta / gamma;
    return numeric_rule(graph, false, coeffs);
}

}  // namespace

CayleyGraph case_graph(const std::string& case_id) {
    if (case_id == "z2xz2") {
        return CayleyGraph::make(FiniteGroupModel::preset("z2xz2"), {"a", "b", "e"});
    }
    if (case_id == "z5") {
        return CayleyGraph::make(FiniteGroupModel::preset("z5"), {"1", "0", "4"});
    }
    fail(ErrorKind::invalid_argument, "unknown case '" + case_id + "' (expected z2xz2 or z5)");
}

LocalRule family_rule(const std::string& case_id, int family, const FamilyParams& params) {
    const CayleyGraph graph = case_graph(case_id);
    if (case_id == "z2xz2") {
        switch (family) {
            case 1:
                fail(ErrorKind::constraint,
                     "family 1 has no valid rules: no scalar automaton of that shape preserves the "
                     "anticommutation relations");
            case 2:
                return klein_family_two(graph, params);
            case 3:
                return klein_family_three(graph, params);
            default:
                break;
        }
    } else {
        switch (family) {
            case 1:
                return cyclic_family_one(graph, params);
            case 2:
                return cyclic_family_two(graph, params);
            case 3:
                return cyclic_family_three(graph, params);
            default:
                break;
        }
    }
    fail(ErrorKind::invalid_argument, "unknown family index " + std::to_string(family));
}

LocalRule linear_truncation(const LocalRule& rule) {
    if (rule.symbolic()) fail(ErrorKind::invalid_argument, "linear truncation needs a numeric rule");
    std::map<Descriptor, std::complex<double>> coeffs;
    for (const auto& [d, coeff] : rule.terms) {
        if (popcount32(d.s) + popcount32(d.t) == 1) coeffs[d] = coeff.value;
    }
    return numeric_rule(rule.graph, rule.number_preserving, coeffs);
}

}  // namespace fca

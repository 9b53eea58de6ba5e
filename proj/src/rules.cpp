#include "rules.hpp"

#include <algorithm>
#include <cstdlib>

namespace fca {

bool descriptor_valid(Descriptor d, int arity) {
    const std::uint32_t cover = arity >= 32 ? ~0u : ((1u << arity) - 1u);
    if ((d.s | d.t) == 0) return false;
    if ((d.s & ~cover) != 0 || (d.t & ~cover) != 0) return false;
    return ((popcount32(d.s) + popcount32(d.t)) % 2) == 1;
}

bool descriptor_number_preserving(Descriptor d) {
    return popcount32(d.t) == popcount32(d.s) + 1;
}

std::vector<Descriptor> all_descriptors(int arity, bool number_preserving_only) {
    if (arity < 1 || arity > 16) fail(ErrorKind::invalid_argument, "template arity out of range");
    std::vector<Descriptor> out;
    const std::uint32_t top = 1u << arity;
    for (std::uint32_t s = 0; s < top; ++s) {
        for (std::uint32_t t = 0; t < top; ++t) {
            Descriptor d{s, t};
            if (!descriptor_valid(d, arity)) continue;
            if (number_preserving_only && !descriptor_number_preserving(d)) continue;
            out.push_back(d);
        }
    }
    return out;
}

namespace {

std::vector<int> mask_positions(std::uint32_t m) {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i) {
        if (m & (1u << i)) out.push_back(i);
    }
    return out;
}

std::string join_labels(const std::vector<std::string>& labels, const std::vector<int>& positions) {
    bool single = true;
    for (const auto& l : labels) single = single && l.size() == 1;
    std::string out;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (!single && i > 0) out += "_";
        out += labels[positions[i]];
    }
    return out;
}

std::string positional_fallback(Descriptor d) {
    auto digits = [](std::uint32_t m) {
        std::string s;
        for (int p : mask_positions(m)) s += std::to_string(p);
        return s;
    };
    return "c_s" + digits(d.s) + "_t" + digits(d.t);
}

/// Template rotation (p, p+1, p+2) for arity-3 names.
std::vector<int> rotation_from(int p) { return {p % 3, (p + 1) % 3, (p + 2) % 3}; }

}  // namespace

std::string descriptor_name(const std::vector<std::string>& template_labels, Descriptor d) {
    const int arity = static_cast<int>(template_labels.size());
    if (!descriptor_valid(d, arity)) fail(ErrorKind::invalid_argument, "invalid rule term descriptor");
    const std::uint32_t p = d.s & d.t;    // measured and re-excited
    const std::uint32_t dd = d.s & ~d.t;  // pure creators
    const std::uint32_t a = d.t & ~d.s;   // pure annihilators
    const int np = popcount32(p), nd = popcount32(dd), na = popcount32(a);
    auto one = [](std::uint32_t m) { return mask_positions(m)[0]; };
    auto joined = [&](std::initializer_list<int> positions) {
        return join_labels(template_labels, std::vector<int>(positions));
    };

    if (np == 0 && nd == 0 && na == 1) return "alpha_" + joined({one(a)});
    if (np == 0 && nd == 1 && na == 0) return "gamma_" + joined({one(dd)});
    if (np == 1 && nd == 0 && na == 1) return "beta_" + joined({one(p), one(a)});
    if (np == 1 && nd == 1 && na == 0) return "eta_" + joined({one(p), one(dd)});
    if (arity == 3) {
        const bool covers = (d.s | d.t) == 7u;
        auto rot = [&](std::vector<int> r) { return join_labels(template_labels, r); };
        if (covers && np == 0 && nd == 1 && na == 2) return "xi_" + rot(rotation_from(one(dd)));
        if (covers && np == 0 && nd == 2 && na == 1) return "chi_" + rot(rotation_from(one(a) + 1));
        if (covers && np == 2 && nd == 0 && na == 1) return "mu_" + rot(rotation_from(one(a) + 1));
        if (covers && np == 2 && nd == 1 && na == 0) return "nu_" + rot(rotation_from(one(dd) + 1));
        if (np == 0 && nd == 0 && na == 3) return "theta";
        if (np == 0 && nd == 3 && na == 0) return "thetabar";
    }
    return positional_fallback(d);
}

bool LocalRule::symbolic() const {
    for (const auto& [d, c] : terms) {
        if (c.symbolic) return true;
    }
    return false;
}

LocalRule general_rule(const CayleyGraph& graph, bool number_preserving) {
    LocalRule rule;
    rule.graph = graph;
    rule.number_preserving = number_preserving;
    const int arity = static_cast<int>(graph.neighborhood.size());
    const auto labels = graph.template_labels();
    for (Descriptor d : all_descriptors(arity, number_preserving)) {
        rule.terms[d] = RuleCoeff::named(descriptor_name(labels, d));
    }
    return rule;
}

LocalRule numeric_rule(const CayleyGraph& graph, bool number_preserving,
                       const std::map<Descriptor, std::complex<double>>& coeffs) {
    LocalRule rule;
    rule.graph = graph;
    rule.number_preserving = number_preserving;
    const int arity = static_cast<int>(graph.neighborhood.size());
    for (const auto& [d, v] : coeffs) {
        if (!descriptor_valid(d, arity)) fail(ErrorKind::invalid_argument, "invalid rule term descriptor");
        if (number_preserving && !descriptor_number_preserving(d)) {
            fail(ErrorKind::invalid_argument,
                 "term '" + descriptor_name(graph.template_labels(), d) + "' breaks particle-number preservation");
        }
        if (v == std::complex<double>(0.0, 0.0)) continue;
        rule.terms[d] = RuleCoeff::number(v);
    }
    return rule;
}

namespace {

std::vector<LadderOp> emitted_ops(Descriptor d, const std::vector<int>& positions) {
    std::vector<LadderOp> ops;
    for (std::size_t l = 0; l < positions.size(); ++l) {
        if (d.s & (1u << l)) ops.push_back(LadderOp{positions[l], true});
        if (d.t & (1u << l)) ops.push_back(LadderOp{positions[l], false});
    }
    return ops;
}

}  // namespace

SPoly evolved_symbolic(const LocalRule& rule, int g) {
    const int modes = rule.graph.modes();
    const auto positions = rule.graph.neighborhood_positions(g);
    SPoly out = SPoly::zero(modes);
    for (const auto& [d, coeff] : rule.terms) {
        if (!coeff.symbolic) {
            fail(ErrorKind::invalid_argument,
                 "rule has fixed numeric coefficients; use the numeric evolution");
        }
        SPoly term = normal_order<SymPoly>(modes, emitted_ops(d, positions));
        out += term.scaled(SymPoly::variable(coeff.symbol));
    }
    return out;
}

CPoly evolved_numeric(const LocalRule& rule, int g) {
    const int modes = rule.graph.modes();
    const auto positions = rule.graph.neighborhood_positions(g);
    CPoly out = CPoly::zero(modes);
    for (const auto& [d, coeff] : rule.terms) {
        if (coeff.symbolic) {
            fail(ErrorKind::invalid_argument,
                 "rule has symbolic coefficients; assign values before evolving numerically");
        }
        CPoly term = normal_order<std::complex<double>>(modes, emitted_ops(d, positions));
        out += term.scaled(coeff.value);
    }
    return out;
}

std::pair<TermKey, int> descriptor_monomial(const CayleyGraph& graph, Descriptor d) {
    const int modes = graph.modes();
    const auto positions = graph.neighborhood_positions(graph.group.identity);
    CPoly p = normal_order<std::complex<double>>(modes, emitted_ops(d, positions));
    if (p.terms().size() != 1) fail(ErrorKind::internal, "rule term did not normalize to a single monomial");
    const auto& [key, coeff] = *p.terms().begin();
    const int sign = coeff.real() > 0 ? 1 : -1;
    return {key, sign};
}

LocalRule flip_rule(const LocalRule& rule) {
    if (rule.symbolic()) fail(ErrorKind::invalid_argument, "particle-hole flip needs a numeric rule");
    const int modes = rule.graph.modes();
    const int arity = static_cast<int>(rule.graph.neighborhood.size());

    std::map<TermKey, std::pair<Descriptor, int>> decode;
    for (Descriptor d : all_descriptors(arity, false)) {
        const auto [key, sign] = descriptor_monomial(rule.graph, d);
        if (!decode.emplace(key, std::make_pair(d, sign)).second) {
            fail(ErrorKind::internal, "rule term monomials are not distinct");
        }
    }

    const CPoly flip = flip_polynomial<std::complex<double>>(modes);
    const CPoly image = multiply(multiply(flip, evolved_numeric(rule, rule.graph.group.identity)), flip.adjoint());

    std::map<Descriptor, std::complex<double>> coeffs;
    for (const auto& [key, c] : image.terms()) {
        auto it = decode.find(key);
        if (it == decode.end()) fail(ErrorKind::internal, "flipped rule leaves the neighborhood support");
        const auto& [d, sign] = it->second;
        coeffs[d] = c * static_cast<double>(sign);
    }
    bool np = true;
    for (const auto& [d, c] : coeffs) np = np && descriptor_number_preserving(d);
    return numeric_rule(rule.graph, np, coeffs);
}

}  // namespace fca

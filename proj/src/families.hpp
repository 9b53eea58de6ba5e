#pragma once

#include "rules.hpp"

#include <map>
#include <string>

namespace fca {

/// Free parameters of a solution family, split by value kind.  Phases are in
/// radians; sites are template element labels.
struct FamilyParams {
    std::map<std::string, double> numbers;
    std::map<std::string, std::string> strings;
};

/// Canonical graph for a case id: "z2xz2" is the Klein four-group with
/// template (a, b, e); "z5" is the five-element cyclic group with template
/// (1, 0, 4).
CayleyGraph case_graph(const std::string& case_id);

/// Builds a fully numeric rule from one of the catalogued solution families,
/// computing every dependent coefficient from the family's closure relations.
///
/// case "z2xz2":
///   family 1: no rules of this shape exist; always errors.
///   family 2 (single excitation amplitude):
///     params: alpha_site in {a,b,e}; theta (default 0); phi.
///     alpha_x = e^{i theta}; beta_ix = beta_jx = |b| e^{i phi} with
///     |b| = -2 cos(phi - theta) (params with a positive cosine are
///     rejected); the five-operator coefficient is beta^2.
///   family 3 (two excitation amplitudes in quadrature):
///     params: site_x, site_y (distinct); theta_x, theta_y with
///     cos(theta_x - theta_y) = 0; phi_yx; t in [0, 1].
///     alpha_x = sqrt(t) e^{i theta_x}; alpha_y = sqrt(1-t) e^{i theta_y};
///     phi_xy = theta_y - theta_x + phi_yx; with z = theta_x - phi_yx,
///     |beta_yx| = -2|alpha_x| cos z and |beta_xy| = -2|alpha_y| cos z
///     (cos z must not be positive); no five-operator term.
///
/// case "z5":
///   family 1 (single shift):
///     params: kind in {np, nnp} (default np); offset in {1,0,4}
///     (default 1); theta (default 0).  One coefficient e^{i theta}: an
///     excitation amplitude for np, a pair amplitude for nnp.
///   family 2 (non-number-preserving):
///     params either {theta0 (default 0), phi} — built as the particle-hole
///     flip of family 3 at those parameters — or {omega0 (default 0),
///     phi_eta} — built directly as gamma_0 = e^{i omega0},
///     eta_10 = eta_40 = |h| e^{i phi_eta} with |h| = -2 cos(phi_eta -
///     omega0), nu = eta^2 / gamma_0.  The two constructions agree.
///   family 3 (number-preserving):
///     params: theta0 (default 0); phi.  alpha_0 = e^{i theta0};
///     beta_10 = beta_40 = |b| e^{i phi} with |b| = -2 cos(phi - theta0);
///     mu = beta^2 / alpha_0.
LocalRule family_rule(const std::string& case_id, int family, const FamilyParams& params);

/// The rule with every term of two or more operators removed: the linear
/// counterpart an automaton is discriminated against.
LocalRule linear_truncation(const LocalRule& rule);

}  // namespace fca

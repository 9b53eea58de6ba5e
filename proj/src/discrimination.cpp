#include "discrimination.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>

namespace fca {

namespace {

constexpr double kClusterTol = 1e-9;

struct HullResult {
    double distance = 1.0;
    std::vector<std::pair<int, double>> weights;  // (point index, weight)
};

// Distance from the origin to the convex hull of unit-modulus points,
// exactly: the origin lies inside iff no open half-plane through the origin
// contains every point, i.e. iff the largest circular gap between sorted
// arguments is at most pi.  Outside, the nearest hull point lies on a vertex
// or an edge, and every edge is the segment of some point pair, so the
// minimum over pairs and singletons is exact.
HullResult hull_origin_distance(const std::vector<std::complex<double>>& pts) {
    HullResult out;
    if (pts.empty()) return out;
    if (pts.size() == 1) {
        out.distance = std::abs(pts[0]);
        out.weights = {{0, 1.0}};
        return out;
    }

    std::vector<double> args;
    args.reserve(pts.size());
    for (const auto& p : pts) args.push_back(std::arg(p));
    std::sort(args.begin(), args.end());
    double max_gap = args.front() + 2.0 * M_PI - args.back();
    for (std::size_t i = 1; i < args.size(); ++i) max_gap = std::max(max_gap, args[i] - args[i - 1]);

    if (max_gap <= M_PI + kClusterTol) {
        // Origin inside (or on the boundary).  A boundary crossing between
        // unit-modulus vertices forces an antipodal pair; strictly inside,
        // some triangle of vertices contains the origin.
        int best_i = -1, best_j = -1;
        double best = 1e300;
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                const double s = std::abs(pts[i] + pts[j]);
                if (s < best) {
                    best = s;
                    best_i = static_cast<int>(i);
                    best_j = static_cast<int>(j);
                }
            }
        if (best <= 1e-8) {
            out.distance = 0.0;
            out.weights = {{best_i, 0.5}, {best_j, 0.5}};
            return out;
        }
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                for (std::size_t k = j + 1; k < pts.size(); ++k) {
                    const double xi = pts[i].real(), yi = pts[i].imag();
                    const double xj = pts[j].real(), yj = pts[j].imag();
                    const double xk = pts[k].real(), yk = pts[k].imag();
                    const double det = (xi - xk) * (yj - yk) - (xj - xk) * (yi - yk);
                    if (std::abs(det) < 1e-14) continue;
                    const double a = (-xk * (yj - yk) - (xj - xk) * -yk) / det;
                    const double b = ((xi - xk) * -yk - -xk * (yi - yk)) / det;
                    const double c = 1.0 - a - b;
                    if (a >= -1e-9 && b >= -1e-9 && c >= -1e-9) {
                        const double sum = std::max(a, 0.0) + std::max(b, 0.0) + std::max(c, 0.0);
                        out.distance = 0.0;
                        out.weights.clear();
                        if (a > 1e-12) out.weights.emplace_back(static_cast<int>(i), std::max(a, 0.0) / sum);
                        if (b > 1e-12) out.weights.emplace_back(static_cast<int>(j), std::max(b, 0.0) / sum);
                        if (c > 1e-12) out.weights.emplace_back(static_cast<int>(k), std::max(c, 0.0) / sum);
                        return out;
                    }
                }
        // Numerical boundary jitter: fall through to the outside geometry,
        // which then reports a near-zero distance consistently.
    }

    double best_dist = 1e300;
    std::vector<std::pair<int, double>> best_weights;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double d = std::abs(pts[i]);
        if (d < best_dist) {
            best_dist = d;
            best_weights = {{static_cast<int>(i), 1.0}};
        }
    }
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const std::complex<double> p = pts[i];
            const std::complex<double> v = pts[j] - pts[i];
            const double vv = std::norm(v);
            if (vv < 1e-30) continue;
            const double t = std::clamp(-(p.real() * v.real() + p.imag() * v.imag()) / vv, 0.0, 1.0);
            const double d = std::abs(p + t * v);
            if (d < best_dist) {
                best_dist = d;
                best_weights.clear();
                if (1.0 - t > 1e-12) best_weights.emplace_back(static_cast<int>(i), 1.0 - t);
                if (t > 1e-12) best_weights.emplace_back(static_cast<int>(j), t);
            }
        }
    out.distance = best_dist;
    out.weights = std::move(best_weights);
    return out;
}

double max_arc_separation(const std::vector<std::complex<double>>& pts) {
    double theta = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            theta = std::max(theta, std::abs(std::arg(pts[i] * std::conj(pts[j]))));
    return theta;
}

}  // namespace

EvolutionMatrix relative_unitary(const EvolutionMatrix& u0, const EvolutionMatrix& u1) {
    if (!(u0.ordering == u1.ordering))
        fail(ErrorKind::invalid_argument,
             "relative evolution needs both operators on the same basis ordering");
    EvolutionMatrix rel =
        EvolutionMatrix::from_computational(u0.ordering, Eigen::MatrixXcd(u0.computational().adjoint() *
                                                                          u1.computational()));
    const int dim = rel.ordering.dim();
    rel.unitarity_residual =
        (rel.state.adjoint() * rel.state - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff();
    return rel;
}

DiscriminationReport analyze(const EvolutionMatrix& utilde, bool parity_restricted) {
    const int dim = utilde.ordering.dim();
    const double unitarity =
        (utilde.state.adjoint() * utilde.state - Eigen::MatrixXcd::Identity(dim, dim))
            .cwiseAbs()
            .maxCoeff();
    if (unitarity > 1e-8)
        fail(ErrorKind::invalid_argument,
             "discrimination analysis needs a unitary input (residual " + std::to_string(unitarity) +
                 ")");

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(utilde.state);
    if (solver.info() != Eigen::Success)
        fail(ErrorKind::internal, "eigendecomposition failed in discrimination analysis");

    struct Cluster {
        std::complex<double> value;
        std::vector<int> columns;
    };
    std::vector<Cluster> clusters;
    for (int k = 0; k < dim; ++k) {
        const std::complex<double> lambda = solver.eigenvalues()(k);
        bool placed = false;
        for (Cluster& c : clusters)
            if (std::abs(lambda - c.value) <= kClusterTol) {
                c.columns.push_back(k);
                placed = true;
                break;
            }
        if (!placed) clusters.push_back({lambda, {k}});
    }

    Eigen::VectorXd parity_sign(dim);
    for (int r = 0; r < dim; ++r)
        parity_sign(r) = utilde.ordering.parity(utilde.ordering.state_order[r]) ? -1.0 : 1.0;

    DiscriminationReport report;
    report.parity_restricted = parity_restricted;

    struct ClusterSummary {
        std::complex<double> value;
        int first_even = -1, first_odd = -1, first_any = -1;
    };
    std::vector<ClusterSummary> summaries;
    for (const Cluster& c : clusters) {
        const int m = static_cast<int>(c.columns.size());
        Eigen::MatrixXcd v(dim, m);
        for (int i = 0; i < m; ++i) v.col(i) = solver.eigenvectors().col(c.columns[i]);
        // Orthonormalize the (possibly degenerate) eigenspace, then split it
        // against the parity reflection; for a parity-preserving unitary the
        // subspace is reflection-invariant and the split is exact.
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(v);
        Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(dim, m);
        Eigen::MatrixXcd w = q.adjoint() * parity_sign.asDiagonal() * q;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ws((w + w.adjoint()) * 0.5);
        int even = 0, odd = 0, mixed = 0;
        for (int i = 0; i < m; ++i) {
            const double s = ws.eigenvalues()(i);
            if (s > 1.0 - 1e-6)
                ++even;
            else if (s < -1.0 + 1e-6)
                ++odd;
            else
                ++mixed;
        }
        ClusterSummary summary;
        summary.value = c.value / std::abs(c.value);
        summary.first_any = static_cast<int>(report.eigenpairs.size());
        if (even > 0) {
            summary.first_even = static_cast<int>(report.eigenpairs.size());
            report.eigenpairs.push_back({summary.value, EigenvectorParity::even, even});
        }
        if (odd > 0) {
            summary.first_odd = static_cast<int>(report.eigenpairs.size());
            report.eigenpairs.push_back({summary.value, EigenvectorParity::odd, odd});
        }
        if (mixed > 0) report.eigenpairs.push_back({summary.value, EigenvectorParity::mixed, mixed});
        summaries.push_back(summary);
    }

    std::vector<std::complex<double>> full_pts, even_pts, odd_pts;
    std::vector<int> full_idx, even_idx, odd_idx;  // representative eigenpair indices
    for (const ClusterSummary& s : summaries) {
        full_pts.push_back(s.value);
        full_idx.push_back(s.first_any);
        if (s.first_even >= 0) {
            even_pts.push_back(s.value);
            even_idx.push_back(s.first_even);
        }
        if (s.first_odd >= 0) {
            odd_pts.push_back(s.value);
            odd_idx.push_back(s.first_odd);
        }
    }

    const HullResult full = hull_origin_distance(full_pts);
    const HullResult even = hull_origin_distance(even_pts);
    const HullResult odd = hull_origin_distance(odd_pts);
    report.hull_distance_full = full.distance;
    report.hull_distance_even = even.distance;
    report.hull_distance_odd = odd.distance;

    const bool use_even = even.distance <= odd.distance;
    const HullResult& governing = parity_restricted ? (use_even ? even : odd) : full;
    const std::vector<int>& governing_idx = parity_restricted ? (use_even ? even_idx : odd_idx) : full_idx;
    const std::vector<std::complex<double>>& governing_pts =
        parity_restricted ? (use_even ? even_pts : odd_pts) : full_pts;
    for (const auto& [local, weight] : governing.weights)
        report.optimal_weights[governing_idx[local]] = weight;

    report.theta = max_arc_separation(governing_pts);
    report.paper_p_succ = std::sin(report.theta / 2.0);
    const double d = std::min(1.0, governing.distance);
    report.standard_p_opt = (1.0 + std::sqrt(std::max(0.0, 1.0 - d * d))) / 2.0;
    report.perfectly_discriminable = report.hull_distance_full <= 1e-10;
    report.local_strategy_sufficient =
        std::min(report.hull_distance_even, report.hull_distance_odd) <=
            report.hull_distance_full + 1e-10 ||
        utilde.parity_character() == ParityCharacter::flipping;
    return report;
}

}  // namespace fca

#pragma once

#include "matrixrep.hpp"

#include <complex>
#include <map>
#include <vector>

namespace fca {

enum class EigenvectorParity { even, odd, mixed };

/// One entry of the clustered spectrum: a unit-modulus eigenvalue together
/// with the parity of its eigenvectors and how many of them share it.
/// "mixed" never occurs for a parity-preserving unitary (degenerate
/// eigenspaces are re-diagonalized against the parity operator first); it is
/// reported as a diagnostic for parity-flipping inputs, whose eigenspaces
/// straddle both parities, and for invalid matrices.
struct EigenPair {
    std::complex<double> value{1.0, 0.0};
    EigenvectorParity parity = EigenvectorParity::mixed;
    int multiplicity = 1;
};

/// Spectral discrimination geometry of a unitary against the identity.
///
/// The distinct eigenvalues are vertices of a polygon inscribed in the unit
/// circle; `hull_distance_full` is the distance from the origin to that
/// polygon (0 when the origin lies inside), and the even/odd variants
/// restrict the vertex set to eigenvalues carrying eigenvectors of that
/// parity (an empty restricted set reports the maximal distance 1.0).
/// `optimal_weights` maps indices into `eigenpairs` to the convex weights
/// realizing the governing minimum-distance point.  `theta` is the largest
/// pairwise arc separation of the governing vertex set, `paper_p_succ` =
/// sin(theta/2), and `standard_p_opt` = (1 + sqrt(1 - d^2))/2 for the
/// governing distance d.  The governing set is the full spectrum, or the
/// better parity-definite sector when `parity_restricted` is set.
///
/// `perfectly_discriminable` means the full-polygon distance vanishes (at
/// 1e-10); `local_strategy_sufficient` means a parity-definite vertex set
/// already achieves the full-polygon distance — a parity-flipping input
/// qualifies directly, since measuring parity separates it from the
/// identity without any ancilla.
struct DiscriminationReport {
    std::vector<EigenPair> eigenpairs;
    double hull_distance_full = 1.0;
    double hull_distance_even = 1.0;
    double hull_distance_odd = 1.0;
    std::map<int, double> optimal_weights;
    double theta = 0.0;
    double paper_p_succ = 0.0;
    double standard_p_opt = 0.5;
    bool perfectly_discriminable = false;
    bool local_strategy_sufficient = false;
    bool parity_restricted = false;
};

/// Relative evolution U0† U1 with the shared basis bookkeeping.  Errors when
/// the operators disagree on dimension or basis ordering.
EvolutionMatrix relative_unitary(const EvolutionMatrix& u0, const EvolutionMatrix& u1);

/// Eigen-decomposes a unitary, classifies eigenvector parities, and computes
/// the polygon geometry described on DiscriminationReport.  Eigenvalues are
/// clustered at absolute tolerance 1e-9.  Errors (invalid_argument) when the
/// input fails unitarity at 1e-8.
DiscriminationReport analyze(const EvolutionMatrix& utilde, bool parity_restricted = false);

}  // namespace fca

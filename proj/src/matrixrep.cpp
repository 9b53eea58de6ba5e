#include "matrixrep.hpp"

#include "errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>
#include <utility>

namespace fca {

namespace {

const std::vector<std::string> kKleinLabels = {"a", "b", "e", "c"};
const std::vector<std::string> kKleinStates = {
    "0000",
    "0011", "0101", "0110", "1100", "1010", "1001",
    "1111",
    "1000", "0100", "0010", "0001",
    "1110", "1101", "1011", "0111",
};

const std::vector<std::string> kCyclicLabels = {"1", "0", "4", "3", "2"};
const std::vector<std::string> kCyclicStates = {
    "00000",
    "11000", "10100", "10010", "10001", "01100",
    "01010", "01001", "00110", "00101", "00011",
    "11110", "11101", "11011", "10111", "01111",
    "10000", "01000", "00100", "00010", "00001",
    "11100", "11001", "10011", "00111", "01110",
    "01011", "10101", "11010", "01101", "10110",
    "11111",
};

std::vector<std::string> generic_state_list(int modes) {
    const int dim = 1 << modes;
    std::vector<int> indices(dim);
    std::iota(indices.begin(), indices.end(), 0);
    std::stable_sort(indices.begin(), indices.end(), [&](int a, int b) {
        const int pa = std::popcount(static_cast<unsigned>(a));
        const int pb = std::popcount(static_cast<unsigned>(b));
        if ((pa & 1) != (pb & 1)) return (pa & 1) < (pb & 1);
        if (pa != pb) return pa < pb;
        return a > b;
    });
    std::vector<std::string> out;
    out.reserve(dim);
    for (int idx : indices) {
        std::string s(modes, '0');
        for (int j = 0; j < modes; ++j)
            if ((idx >> (modes - 1 - j)) & 1) s[j] = '1';
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

int BasisOrdering::particle_number(int comp_index) const {
    return std::popcount(static_cast<unsigned>(comp_index));
}

std::string BasisOrdering::occupation_string(int comp_index) const {
    std::string s(modes, '0');
    for (int j = 0; j < modes; ++j)
        if (occupation(comp_index, j)) s[j] = '1';
    return s;
}

std::vector<int> BasisOrdering::parity_positions(int wanted) const {
    std::vector<int> out;
    for (int r = 0; r < dim(); ++r)
        if (parity(state_order[r]) == (wanted & 1)) out.push_back(r);
    return out;
}

BasisOrdering BasisOrdering::from_strings(std::vector<std::string> site_labels,
                                          const std::vector<std::string>& states) {
    BasisOrdering o;
    o.modes = static_cast<int>(site_labels.size());
    if (o.modes <= 0 || o.modes > kMaxDenseModes)
        fail(ErrorKind::invalid_argument, "mode count out of range for the dense representation");
    o.site_labels = std::move(site_labels);
    const int dim = 1 << o.modes;
    if (static_cast<int>(states.size()) != dim)
        fail(ErrorKind::invalid_argument, "state list must enumerate every occupation string exactly once");
    o.state_order.reserve(dim);
    o.state_position.assign(dim, -1);
    for (const std::string& s : states) {
        if (static_cast<int>(s.size()) != o.modes)
            fail(ErrorKind::invalid_argument, "occupation string '" + s + "' has the wrong length");
        int idx = 0;
        for (char c : s) {
            if (c != '0' && c != '1')
                fail(ErrorKind::invalid_argument, "occupation string '" + s + "' has characters other than 0/1");
            idx = (idx << 1) | (c - '0');
        }
        if (o.state_position[idx] != -1)
            fail(ErrorKind::invalid_argument, "occupation string '" + s + "' listed twice");
        o.state_position[idx] = static_cast<int>(o.state_order.size());
        o.state_order.push_back(idx);
    }
    return o;
}

BasisOrdering BasisOrdering::reference(const std::string& scheme) {
    if (scheme == "z2xz2") return from_strings(kKleinLabels, kKleinStates);
    if (scheme == "z5") return from_strings(kCyclicLabels, kCyclicStates);
    fail(ErrorKind::invalid_argument, "unknown block scheme '" + scheme + "' (expected z2xz2 or z5)");
}

BasisOrdering BasisOrdering::for_graph(const CayleyGraph& graph) {
    std::vector<std::string> labels;
    labels.reserve(graph.modes());
    for (int j = 0; j < graph.modes(); ++j) labels.push_back(graph.group.labels[graph.site_order[j]]);
    if (labels == kKleinLabels) return from_strings(labels, kKleinStates);
    if (labels == kCyclicLabels) return from_strings(labels, kCyclicStates);
    return from_strings(labels, generic_state_list(graph.modes()));
}

Eigen::MatrixXcd jordan_wigner(const CPoly& p) {
    const int n = p.modes();
    if (n <= 0 || n > kMaxDenseModes)
        fail(ErrorKind::invalid_argument, "mode count out of range for the dense representation");
    const int dim = 1 << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& [key, coeff] : p.terms()) {
        for (int col = 0; col < dim; ++col) {
            int idx = col;
            int sgn = 0;
            bool alive = true;
            // The canonical term is (creators ascending)(annihilators
            // ascending); acting on a ket the rightmost factor applies
            // first, i.e. annihilators by descending position, then
            // creators by descending position.  Each single operator on
            // position j picks up the parity of the occupations at
            // positions after j.
            for (int pos = n - 1; pos >= 0; --pos) {
                if (!(key.annihilate & site_bit(pos))) continue;
                const int b = n - 1 - pos;
                if (!((idx >> b) & 1)) {
                    alive = false;
                    break;
                }
                sgn ^= std::popcount(static_cast<unsigned>(idx) & ((1u << b) - 1)) & 1;
                idx &= ~(1 << b);
            }
            if (!alive) continue;
            for (int pos = n - 1; pos >= 0; --pos) {
                if (!(key.create & site_bit(pos))) continue;
                const int b = n - 1 - pos;
                if ((idx >> b) & 1) {
                    alive = false;
                    break;
                }
                sgn ^= std::popcount(static_cast<unsigned>(idx) & ((1u << b) - 1)) & 1;
                idx |= 1 << b;
            }
            if (!alive) continue;
            m(idx, col) += sgn ? -coeff : coeff;
        }
    }
    return m;
}

ParityCharacter EvolutionMatrix::parity_character(double tol) const {
    if (parity_leakage <= tol) return ParityCharacter::preserving;
    if (parity_diagonal <= tol) return ParityCharacter::flipping;
    return ParityCharacter::neither;
}

Eigen::MatrixXcd EvolutionMatrix::computational() const {
    const int dim = ordering.dim();
    Eigen::MatrixXcd comp(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) comp(ordering.state_order[r], ordering.state_order[c]) = state(r, c);
    return comp;
}

EvolutionMatrix EvolutionMatrix::from_computational(BasisOrdering ordering,
                                                    const Eigen::MatrixXcd& comp) {
    const int dim = ordering.dim();
    if (comp.rows() != dim || comp.cols() != dim)
        fail(ErrorKind::invalid_argument, "matrix dimension does not match the ordering");
    EvolutionMatrix u;
    u.state.resize(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) u.state(r, c) = comp(ordering.state_order[r], ordering.state_order[c]);
    for (int r = 0; r < dim; ++r) {
        const int nr = ordering.particle_number(ordering.state_order[r]);
        for (int c = 0; c < dim; ++c) {
            const int nc = ordering.particle_number(ordering.state_order[c]);
            const double mag = std::abs(u.state(r, c));
            if (nr != nc) u.number_leakage = std::max(u.number_leakage, mag);
            if ((nr & 1) != (nc & 1))
                u.parity_leakage = std::max(u.parity_leakage, mag);
            else
                u.parity_diagonal = std::max(u.parity_diagonal, mag);
        }
    }
    u.ordering = std::move(ordering);
    return u;
}

namespace {

// H += scale * (L ⊗ R) on the dim²-dimensional operator space, col-major
// vectorization: (L ⊗ R) vec(X) = vec(R X Lᵀ).
void add_kron(Eigen::MatrixXcd& h, const Eigen::MatrixXcd& l, const Eigen::MatrixXcd& r,
              double scale) {
    const int d = static_cast<int>(l.rows());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const std::complex<double> f = scale * l(i, j);
            if (f == std::complex<double>(0.0, 0.0)) continue;
            h.block(static_cast<Eigen::Index>(i) * d, static_cast<Eigen::Index>(j) * d, d, d) +=
                f * r;
        }
}

double stacked_residual(const Eigen::MatrixXcd& x,
                        const std::vector<std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd>>& maps) {
    double sq = 0.0;
    for (const auto& [a, b] : maps) sq += (a * x - x * b).squaredNorm();
    return std::sqrt(sq) / x.norm();
}

}  // namespace

EvolutionMatrix synthesize_unitary(const LocalRule& rule) {
    if (rule.symbolic())
        fail(ErrorKind::invalid_argument, "unitary synthesis needs a numeric rule");
    const int n = rule.graph.modes();
    if (n > kMaxSynthesisModes)
        fail(ErrorKind::invalid_argument,
             "unitary synthesis is capped at " + std::to_string(kMaxSynthesisModes) + " modes");
    BasisOrdering ordering = BasisOrdering::for_graph(rule.graph);
    const int dim = ordering.dim();

    // One conjugation constraint per group element plus its adjoint:
    // pairs (A, B) with A X - X B required to vanish.
    std::vector<std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd>> maps;
    std::vector<std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd>> generator_pairs;  // (M'_g, M_g)
    for (int g = 0; g < rule.graph.group.order(); ++g) {
        Eigen::MatrixXcd m = jordan_wigner(CPoly::annihilation(n, rule.graph.position(g)));
        Eigen::MatrixXcd mp = jordan_wigner(evolved_numeric(rule, g));
        maps.emplace_back(mp, m);
        maps.emplace_back(mp.adjoint(), m.adjoint());
        generator_pairs.emplace_back(std::move(mp), std::move(m));
    }

    // Gram operator of the stacked map: H = Σ L†L with L = I ⊗ A − Bᵀ ⊗ I;
    // its near-zero eigenvectors are the joint null directions.
    const Eigen::Index dd = static_cast<Eigen::Index>(dim) * dim;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dd, dd);
    const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto& [a, b] : maps) {
        add_kron(h, eye, a.adjoint() * a, 1.0);
        add_kron(h, b.conjugate() * b.transpose(), eye, 1.0);
        add_kron(h, -b.transpose(), a.adjoint(), 1.0);
        add_kron(h, -b.conjugate(), a, 1.0);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success)
        fail(ErrorKind::internal, "eigensolver failed on the stacked conjugation map");
    const double sigma_max = std::sqrt(std::max(solver.eigenvalues()(dd - 1), 0.0));
    if (sigma_max <= 0.0)
        fail(ErrorKind::internal, "stacked conjugation map is identically zero");
    const double threshold = 1e-9 * sigma_max;

    // Membership is decided by the direct residual of the candidate, which
    // for unit vectors equals the singular value of the stacked map in that
    // direction; eigenvalues come out ascending so the null candidates are
    // the leading columns.
    const int probe = static_cast<int>(std::min<Eigen::Index>(8, dd));
    int null_dim = 0;
    Eigen::MatrixXcd x;
    for (int k = 0; k < probe; ++k) {
        Eigen::MatrixXcd cand = Eigen::Map<const Eigen::MatrixXcd>(
            solver.eigenvectors().col(k).data(), dim, dim);
        if (stacked_residual(cand, maps) <= threshold) {
            ++null_dim;
            if (null_dim == 1) x = cand;
        }
    }
    if (null_dim != 1) {
        const std::string count =
            (null_dim == probe) ? ("at least " + std::to_string(probe)) : std::to_string(null_dim);
        fail(ErrorKind::constraint,
             "conjugation null space has dimension " + count +
                 " (expected exactly 1): the rule does not induce a mode-algebra automorphism");
    }

    const double scale_sq = (x.adjoint() * x).trace().real() / dim;
    if (scale_sq <= 0.0) fail(ErrorKind::internal, "null-space element has non-positive norm");
    Eigen::MatrixXcd u = x / std::sqrt(scale_sq);
    const double unitarity =
        (u.adjoint() * u - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff();
    if (unitarity > 1e-10)
        fail(ErrorKind::constraint,
             "synthesized operator is not unitary (residual " + std::to_string(unitarity) + ")");

    // Global phase: first significant entry of the empty-state column,
    // scanned in listed state order, is made real and positive.
    const int vacuum = ordering.state_order[0];
    const double column_max = u.col(vacuum).cwiseAbs().maxCoeff();
    for (int r = 0; r < dim; ++r) {
        const std::complex<double> entry = u(ordering.state_order[r], vacuum);
        if (std::abs(entry) > 1e-6 * column_max) {
            u *= std::conj(entry / std::abs(entry));
            break;
        }
    }

    double conjugation = 0.0;
    for (const auto& [mp, m] : generator_pairs)
        conjugation = std::max(conjugation, (u * m * u.adjoint() - mp).cwiseAbs().maxCoeff());

    EvolutionMatrix result = EvolutionMatrix::from_computational(std::move(ordering), u);
    result.unitarity_residual = unitarity;
    result.conjugation_residual = conjugation;
    return result;
}

Eigen::MatrixXcd flip_operator(const BasisOrdering& ordering) {
    return jordan_wigner(flip_polynomial<std::complex<double>>(ordering.modes));
}

namespace {

struct BlockRange {
    std::string name;
    int row0, rows, col0, cols;
};

}  // namespace

SectorBlocks sector_blocks(const EvolutionMatrix& u, const std::string& scheme) {
    const BasisOrdering expected = BasisOrdering::reference(scheme);
    if (!(u.ordering == expected))
        fail(ErrorKind::invalid_argument,
             "matrix ordering does not match the '" + scheme + "' catalogued basis");

    SectorBlocks out;
    out.scheme = scheme;
    std::vector<BlockRange> ranges;
    std::vector<std::pair<int, int>> sectors;  // diagonal sector extents [start, length]
    if (scheme == "z2xz2") {
        ranges = {{"A", 1, 3, 1, 3}, {"B", 1, 3, 4, 3}, {"S", 8, 4, 8, 4}, {"T", 12, 4, 12, 4}};
        sectors = {{0, 1}, {1, 6}, {7, 1}, {8, 4}, {12, 4}};
        out.exchange_symmetry_residual =
            std::max((u.state.block(4, 4, 3, 3) - u.state.block(1, 1, 3, 3)).cwiseAbs().maxCoeff(),
                     (u.state.block(4, 1, 3, 3) - u.state.block(1, 4, 3, 3)).cwiseAbs().maxCoeff());
    } else {
        ranges = {{"D", 1, 10, 1, 10}, {"C", 11, 5, 11, 5}, {"A", 16, 5, 16, 5}, {"B", 21, 10, 21, 10}};
        sectors = {{0, 1}, {1, 10}, {11, 5}, {16, 5}, {21, 10}, {31, 1}};
    }
    for (const BlockRange& r : ranges)
        out.blocks.emplace(r.name, u.state.block(r.row0, r.col0, r.rows, r.cols));

    const int dim = u.ordering.dim();
    auto sector_of = [&](int pos) {
        for (std::size_t s = 0; s < sectors.size(); ++s)
            if (pos >= sectors[s].first && pos < sectors[s].first + sectors[s].second)
                return static_cast<int>(s);
        return -1;
    };
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            if (sector_of(r) != sector_of(c))
                out.off_block_leakage = std::max(out.off_block_leakage, std::abs(u.state(r, c)));
    return out;
}

}  // namespace fca

#include "oporbits/matrix_lab.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace oporbits {

namespace {

using SVD = Eigen::JacobiSVD<ComplexMatrix>;

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw PreconditionError(std::string(op) + ": shape mismatch (" +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()) + ")");
}

ComplexMatrix column_space_projector(const ComplexMatrix& a, const Tolerances& tol) {
    if (a.size() == 0) return ComplexMatrix::Zero(a.rows(), a.rows());
    SVD svd(a, Eigen::ComputeFullU);
    const auto& sv = svd.singularValues();
    const double cut = sv.size() > 0 ? sv(0) * tol.rank_tol : 0.0;
    int r = 0;
    while (r < sv.size() && sv(r) > cut) ++r;
    const ComplexMatrix u = svd.matrixU().leftCols(r);
    return u * u.adjoint();
}

/// Hermitian part after checking the symmetry gap; throws when not psd.
Eigen::SelfAdjointEigenSolver<ComplexMatrix> psd_eigs(const ComplexMatrix& m, double tol,
                                                      const char* name) {
    const double herm_gap = op_norm(m - m.adjoint());
    if (herm_gap > tol)
        throw PreconditionError(std::string("lplus_member: ") + name +
                                " is not hermitian (gap " + std::to_string(herm_gap) + ")");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es((m + m.adjoint()) / 2.0);
    if (es.eigenvalues().size() > 0 && es.eigenvalues().minCoeff() < -tol)
        throw PreconditionError(std::string("lplus_member: ") + name +
                                " is not positive semidefinite (min eigenvalue " +
                                std::to_string(es.eigenvalues().minCoeff()) + ")");
    return es;
}

}  // namespace

double op_norm(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    return SVD(m).singularValues()(0);
}

Eigen::VectorXd singular_values(const ComplexMatrix& m) {
    if (m.size() == 0) return Eigen::VectorXd();
    return SVD(m).singularValues();
}

SvdResult svd_factor(const ComplexMatrix& m, const Tolerances& tol) {
    SVD svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    SvdResult out;
    out.values = svd.singularValues();
    out.u = svd.matrixU();
    out.v = svd.matrixV();
    ComplexMatrix sigma = ComplexMatrix::Zero(m.rows(), m.cols());
    for (int i = 0; i < out.values.size(); ++i) sigma(i, i) = out.values(i);
    const double scale = std::max(1.0, out.values.size() > 0 ? out.values(0) : 0.0);
    out.recon_error = op_norm(m - out.u * sigma * out.v.adjoint());
    out.unitary_error = std::max(
        op_norm(out.u * out.u.adjoint() - ComplexMatrix::Identity(m.rows(), m.rows())),
        op_norm(out.v * out.v.adjoint() - ComplexMatrix::Identity(m.cols(), m.cols())));
    if (out.recon_error > tol.recon_tol * scale)
        throw std::runtime_error("svd_factor: reconstruction residual " +
                                 std::to_string(out.recon_error) + " exceeds tolerance");
    if (out.unitary_error > tol.recon_tol * 10)
        throw std::runtime_error("svd_factor: factors lost unitarity");
    return out;
}

RankInfo matrix_rank(const ComplexMatrix& m, const Tolerances& tol) {
    RankInfo info;
    const Eigen::VectorXd sv = singular_values(m);
    if (sv.size() == 0 || sv(0) == 0.0) return info;
    const double cut = sv(0) * tol.rank_tol;
    while (info.rank < sv.size() && sv(info.rank) > cut) ++info.rank;
    // Flag answers whose deciding singular value sits close to the threshold.
    if (info.rank > 0 && sv(info.rank - 1) <= cut * 10.0) info.marginal = true;
    if (info.rank < sv.size() && sv(info.rank) > cut / 10.0) info.marginal = true;
    return info;
}

OperatorDescriptor svd_indices(const ComplexMatrix& m, const Tolerances& tol) {
    if (!m.allFinite()) throw InputError("svd_indices: matrix has non-finite entries");
    const int r = matrix_rank(m, tol).rank;
    RangeProfile profile;
    if (r > 0) profile.blocks.push_back({Cardinal::finite(static_cast<std::uint64_t>(r)), 1});
    return make_descriptor(Cardinal::finite(static_cast<std::uint64_t>(m.cols() - r)),
                           Cardinal::finite(static_cast<std::uint64_t>(m.rows() - r)),
                           std::move(profile));
}

SpectralTruncation spectral_truncate(const ComplexMatrix& m, double eps) {
    if (eps <= 0.0) throw PreconditionError("spectral_truncate: eps must be positive");
    SVD svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    int d = 0;
    while (d < sv.size() && sv(d) >= eps) ++d;
    SpectralTruncation out;
    out.v_basis = svd.matrixV().leftCols(d);
    out.error = d < sv.size() ? sv(d) : 0.0;
    return out;
}

bool closure_gg_contains_matrix(const ComplexMatrix& a, const ComplexMatrix& b,
                                const Tolerances& tol) {
    require_same_shape(a, b, "closure_gg_contains_matrix");
    return matrix_rank(b, tol).rank <= matrix_rank(a, tol).rank;
}

double gg_distance(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerances& tol) {
    require_same_shape(a, b, "gg_distance");
    const int r = matrix_rank(a, tol).rank;
    if (matrix_rank(b, tol).rank <= r) return 0.0;
    const Eigen::VectorXd sv = singular_values(b);
    return r < sv.size() ? sv(r) : 0.0;
}

GgApproximation gg_approximate(const ComplexMatrix& a, const ComplexMatrix& c, double eps,
                               const Tolerances& tol) {
    require_same_shape(a, c, "gg_approximate");
    if (eps <= 0.0) throw PreconditionError("gg_approximate: eps must be positive");
    GgApproximation out;
    const int rank_a = matrix_rank(a, tol).rank;
    const int rank_c = matrix_rank(c, tol).rank;
    if (rank_c > rank_a) return out;  // infeasible: no rank-increasing limits

    SVD svd_a(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    SVD svd_c(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::VectorXd sa = svd_a.singularValues();
    const Eigen::VectorXd sc = svd_c.singularValues();
    const double norm_a = sa.size() > 0 ? sa(0) : 0.0;

    const double n_real = std::ceil(2.0 * norm_a / eps);
    const double scale = std::max(1.0, n_real);

    // U carries the top rank_c singular directions of A onto those of C;
    // G matches them in the domain and blows up the complement so that
    // A G^{-1} vanishes there at rate ||A|| / scale.
    const ComplexMatrix u = svd_c.matrixU() * svd_a.matrixU().adjoint();
    const int n = static_cast<int>(a.cols());
    Eigen::VectorXd diag(n), diag_inv(n);
    for (int j = 0; j < n; ++j) {
        if (j < rank_c) {
            diag(j) = sa(j) / sc(j);
            diag_inv(j) = sc(j) / sa(j);
        } else {
            diag(j) = scale;
            diag_inv(j) = 1.0 / scale;
        }
    }
    const ComplexMatrix g =
        svd_c.matrixV() * diag.asDiagonal() * svd_a.matrixV().adjoint();
    const ComplexMatrix g_inv =
        svd_a.matrixV() * diag_inv.asDiagonal() * svd_c.matrixV().adjoint();

    out.feasible = true;
    out.unitary = u;
    out.invertible = g;
    out.achieved_error = op_norm(c - u * a * g_inv);
    out.condition_number = diag.maxCoeff() / diag.minCoeff();
    return out;
}

std::vector<AlignmentStep> unitary_align_sequence(const ComplexMatrix& a,
                                                  const std::vector<ComplexMatrix>& a_seq,
                                                  const ComplexMatrix& v_basis,
                                                  const Tolerances& tol) {
    const int m = static_cast<int>(a.rows());
    const int d = static_cast<int>(v_basis.cols());
    const double floor = std::max(op_norm(a) * tol.rank_tol, tol.rank_tol);

    const ComplexMatrix av = a * v_basis;
    if (d > 0 && singular_values(av).minCoeff() <= floor)
        throw PreconditionError("unitary_align_sequence: A is not bounded below on V");

    Eigen::HouseholderQR<ComplexMatrix> qr_a(av);
    const ComplexMatrix full_a = qr_a.householderQ() * ComplexMatrix::Identity(m, m);
    const ComplexMatrix basis_a = full_a.leftCols(d);
    const ComplexMatrix comp_a = full_a.rightCols(m - d);
    const ComplexMatrix p = basis_a * basis_a.adjoint();

    std::vector<AlignmentStep> steps;
    steps.reserve(a_seq.size());
    for (const ComplexMatrix& an : a_seq) {
        AlignmentStep step;
        if (an.rows() != a.rows() || an.cols() != a.cols()) {
            steps.push_back(step);
            continue;
        }
        const ComplexMatrix anv = an * v_basis;
        if (d > 0 && singular_values(anv).minCoeff() <= floor) {
            steps.push_back(step);  // V leaves the bounded-below family at this index
            continue;
        }
        Eigen::HouseholderQR<ComplexMatrix> qr_n(anv);
        const ComplexMatrix full_n = qr_n.householderQ() * ComplexMatrix::Identity(m, m);
        const ComplexMatrix basis_n = full_n.leftCols(d);
        const ComplexMatrix comp_n = full_n.rightCols(m - d);

        // Polar part of the projection of A(V) into A_n(V), in coordinates.
        const ComplexMatrix t_hat = basis_n.adjoint() * basis_a;
        SVD svd_t(t_hat, Eigen::ComputeFullU | Eigen::ComputeFullV);
        const ComplexMatrix q_hat = svd_t.matrixU() * svd_t.matrixV().adjoint();

        step.ok = true;
        step.z = basis_n * q_hat * basis_a.adjoint() + comp_n * comp_a.adjoint();
        step.projector_error = op_norm(step.z * p - p);
        step.subspace_error =
            op_norm((ComplexMatrix::Identity(m, m) - basis_n * basis_n.adjoint()) * step.z * p);
        steps.push_back(std::move(step));
    }
    return steps;
}

UnitaryWitness closure_u_right_contains(const ComplexMatrix& a, const ComplexMatrix& b,
                                        double tol, const Tolerances& tols) {
    require_same_shape(a, b, "closure_u_right_contains");
    UnitaryWitness out;
    out.gram_gap = op_norm(b.adjoint() * b - a.adjoint() * a);
    out.member = out.gram_gap <= tol;
    if (!out.member) return out;
    // Polar part of B A*: the codomain rotation matching the two polar
    // decompositions on the range, completed unitarily on the complement.
    SVD svd(b * a.adjoint(), Eigen::ComputeFullU | Eigen::ComputeFullV);
    const ComplexMatrix u = svd.matrixU() * svd.matrixV().adjoint();
    out.residual = op_norm(u * a - b);
    out.u = u;
    (void)tols;
    return out;
}

UnitaryWitness closure_u_left_contains(const ComplexMatrix& a, const ComplexMatrix& b,
                                       double tol, const Tolerances& tols) {
    require_same_shape(a, b, "closure_u_left_contains");
    UnitaryWitness mirrored = closure_u_right_contains(a.adjoint(), b.adjoint(), tol, tols);
    UnitaryWitness out;
    out.gram_gap = mirrored.gram_gap;
    out.member = mirrored.member;
    if (mirrored.u) {
        out.u = mirrored.u->adjoint();
        out.residual = op_norm(a * *out.u - b);
    }
    return out;
}

bool closure_uu_contains(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    require_same_shape(a, b, "closure_uu_contains");
    return uu_distance(a, b) <= tol;
}

double uu_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "uu_distance");
    const Eigen::VectorXd sa = singular_values(a);
    const Eigen::VectorXd sb = singular_values(b);
    if (sa.size() == 0) return 0.0;
    return (sa - sb).cwiseAbs().maxCoeff();
}

bool lplus_member(const ComplexMatrix& a_psd, const ComplexMatrix& b_psd, double tol,
                  const Tolerances& tols) {
    require_same_shape(a_psd, b_psd, "lplus_member");
    const auto es_a = psd_eigs(a_psd, tol, "A");
    psd_eigs(b_psd, tol, "B");

    const Eigen::VectorXd ev = es_a.eigenvalues();
    const double cut = ev.size() > 0 ? std::max(ev.maxCoeff(), 0.0) * tols.rank_tol : 0.0;
    int r = 0;
    std::vector<int> keep;
    for (int i = 0; i < ev.size(); ++i)
        if (ev(i) > cut) keep.push_back(i), ++r;
    ComplexMatrix basis(a_psd.rows(), r);
    for (int j = 0; j < r; ++j) basis.col(j) = es_a.eigenvectors().col(keep[j]);
    const ComplexMatrix q =
        ComplexMatrix::Identity(a_psd.rows(), a_psd.rows()) - basis * basis.adjoint();
    return op_norm(q * b_psd * q) <= tol && op_norm(q * b_psd) <= tol;
}

bool closure_g_right_contains(const ComplexMatrix& a, const ComplexMatrix& b, double tol,
                              const Tolerances& tols) {
    require_same_shape(a, b, "closure_g_right_contains");
    const ComplexMatrix p = column_space_projector(a, tols);
    const ComplexMatrix q = ComplexMatrix::Identity(a.rows(), a.rows()) - p;
    return op_norm(q * b) <= tol;
}

bool orbit_member_exact(const ComplexMatrix& a, const ComplexMatrix& b, OrbitGroup group,
                        double tol, const Tolerances& tols) {
    require_same_shape(a, b, "orbit_member_exact");
    switch (group) {
        case OrbitGroup::GG:
            return matrix_rank(a, tols).rank == matrix_rank(b, tols).rank;
        case OrbitGroup::URight:
            return op_norm(b.adjoint() * b - a.adjoint() * a) <= tol;
        case OrbitGroup::ULeft:
            return op_norm(b * b.adjoint() - a * a.adjoint()) <= tol;
        case OrbitGroup::GRight: {
            const ComplexMatrix pa = column_space_projector(a, tols);
            const ComplexMatrix pb = column_space_projector(b, tols);
            const ComplexMatrix id = ComplexMatrix::Identity(a.rows(), a.rows());
            return op_norm((id - pa) * b) <= tol && op_norm((id - pb) * a) <= tol &&
                   matrix_rank(a, tols).rank == matrix_rank(b, tols).rank;
        }
        case OrbitGroup::UU:
            return uu_distance(a, b) <= tol;
    }
    return false;
}

double sample_orbit_distance(const ComplexMatrix& a, const ComplexMatrix& b, OrbitGroup group,
                             int n_samples, std::uint64_t seed) {
    require_same_shape(a, b, "sample_orbit_distance");
    if (n_samples < 1) throw PreconditionError("sample_orbit_distance: n_samples must be >= 1");
    const int m = static_cast<int>(a.rows());
    const int n = static_cast<int>(a.cols());
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n_samples; ++k) {
        Rng rng = Rng::derive(seed, static_cast<std::uint64_t>(k));
        double value = 0.0;
        switch (group) {
            case OrbitGroup::GG: {
                const ComplexMatrix g2 = random_invertible(rng, m);
                const ComplexMatrix g1 = random_invertible(rng, n);
                value = op_norm(g2 * a * g1.inverse() - b);
                break;
            }
            case OrbitGroup::URight:
                value = op_norm(random_unitary(rng, m) * a - b);
                break;
            case OrbitGroup::ULeft:
                value = op_norm(a * random_unitary(rng, n).adjoint() - b);
                break;
            case OrbitGroup::GRight:
                value = op_norm(a * random_invertible(rng, n).inverse() - b);
                break;
            case OrbitGroup::UU: {
                const ComplexMatrix u = random_unitary(rng, m);
                const ComplexMatrix v = random_unitary(rng, n);
                value = op_norm(u * a * v.adjoint() - b);
                break;
            }
        }
        best = std::min(best, value);
    }
    return best;
}

// ---- Seeded randomness ----

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

Rng Rng::derive(std::uint64_t seed, std::uint64_t stream) {
    return Rng(splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL)));
}

double Rng::uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double Rng::gauss() {
    // Box-Muller on raw uniforms; implementation-defined distributions from
    // <random> are avoided so that streams are identical across platforms.
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::complex<double> Rng::cgauss() {
    const double re = gauss();
    const double im = gauss();
    return {re / std::numbers::sqrt2, im / std::numbers::sqrt2};
}

ComplexMatrix random_matrix(Rng& rng, int rows, int cols) {
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rng.cgauss();
    return m;
}

ComplexMatrix random_unitary(Rng& rng, int n) {
    const ComplexMatrix g = random_matrix(rng, n, n);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i) {
        const std::complex<double> d = r(i, i);
        q.col(i) *= std::abs(d) > 0.0 ? d / std::abs(d) : 1.0;
    }
    return q;
}

ComplexMatrix random_invertible(Rng& rng, int n, double cond_cap) {
    for (int tries = 0; tries < 1000; ++tries) {
        const ComplexMatrix m = ComplexMatrix::Identity(n, n) + random_matrix(rng, n, n);
        const Eigen::VectorXd sv = singular_values(m);
        if (sv(n - 1) > 0.0 && sv(0) / sv(n - 1) <= cond_cap) return m;
    }
    throw std::runtime_error("random_invertible: condition-number rejection did not converge");
}

ComplexMatrix random_matrix_of_rank(Rng& rng, int rows, int cols, int r) {
    if (r == 0) return ComplexMatrix::Zero(rows, cols);
    return random_matrix(rng, rows, r) * random_matrix(rng, r, cols);
}

ComplexMatrix random_psd_of_rank(Rng& rng, int n, int r) {
    const ComplexMatrix f = random_matrix(rng, n, r);
    return f * f.adjoint();
}

}  // namespace oporbits

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "oporbits/descriptor.hpp"

namespace oporbits {

using ComplexMatrix = Eigen::MatrixXcd;

struct Tolerances {
    double rank_tol = 1e-9;    // relative to the largest singular value
    double recon_tol = 1e-10;  // SVD reconstruction
    double match_tol = 1e-8;   // witness residuals / subspace matching
};

struct RankInfo {
    int rank = 0;
    /// The deciding singular value lies within a factor 10 of the rank
    /// threshold; boolean answers derived from this rank are fragile.
    bool marginal = false;
};

enum class OrbitGroup { GG, URight, ULeft, GRight, UU };

/// Operator norm (largest singular value).
double op_norm(const ComplexMatrix& m);

/// Descending singular values.
Eigen::VectorXd singular_values(const ComplexMatrix& m);

struct SvdResult {
    Eigen::VectorXd values;  // descending, nonnegative
    ComplexMatrix u;         // full left factor
    ComplexMatrix v;         // full right factor
    double recon_error = 0.0;
    double unitary_error = 0.0;
};

/// Full SVD with its reconstruction and unitarity residuals measured; throws
/// if either exceeds the tolerances.
SvdResult svd_factor(const ComplexMatrix& m, const Tolerances& tol = {});

RankInfo matrix_rank(const ComplexMatrix& m, const Tolerances& tol = {});

/// Rank / nullity / codefect of a finite matrix, as a descriptor with a
/// single closed block.
OperatorDescriptor svd_indices(const ComplexMatrix& m, const Tolerances& tol = {});

struct SpectralTruncation {
    ComplexMatrix v_basis;  // orthonormal columns spanning V
    double error = 0.0;     // ||M - M P_V||
};

/// Right-singular subspace with singular values >= eps; the truncation error
/// ||M - M P_V|| equals the largest discarded singular value.
SpectralTruncation spectral_truncate(const ComplexMatrix& m, double eps);

/// Finite-dimensional two-sided closure test: rank(B) <= rank(A).
bool closure_gg_contains_matrix(const ComplexMatrix& a, const ComplexMatrix& b,
                                const Tolerances& tol = {});

/// Distance from B to the closure of the two-sided invertible orbit of A in
/// operator norm: sigma_{rank(A)+1}(B), zero when rank(B) <= rank(A).
double gg_distance(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerances& tol = {});

struct GgApproximation {
    bool feasible = false;       // rank(C) <= rank(A) required
    ComplexMatrix unitary;       // U on the codomain
    ComplexMatrix invertible;    // G on the domain
    double achieved_error = 0.0; // ||C - U A G^{-1}||, recomputed from the factors
    double condition_number = 0.0;
};

/// Constructs (U unitary, G invertible) with ||C - U A G^{-1}|| <= eps,
/// feasible exactly when rank(C) <= rank(A). The domain factor acts as the
/// identity-composition on the active singular directions and as a large
/// multiple of a unitary on the rest, so that A G^{-1} dies off there.
GgApproximation gg_approximate(const ComplexMatrix& a, const ComplexMatrix& c, double eps,
                               const Tolerances& tol = {});

struct AlignmentStep {
    bool ok = false;             // A_n stays bounded below on V
    ComplexMatrix z;             // unitary with Z(A(V)) = A_n(V)
    double projector_error = 0.0;  // ||Z P_{A(V)} - P_{A(V)}||
    double subspace_error = 0.0;   // ||(I - P_{A_n(V)}) Z P_{A(V)}||
};

/// For a sequence A_n -> A and V on which A is bounded below, builds unitaries
/// Z_n mapping A(V) onto A_n(V) through the polar part of the projection
/// restricted to A(V); the projector errors must decay as A_n -> A.
std::vector<AlignmentStep> unitary_align_sequence(const ComplexMatrix& a,
                                                  const std::vector<ComplexMatrix>& a_seq,
                                                  const ComplexMatrix& v_basis,
                                                  const Tolerances& tol = {});

struct UnitaryWitness {
    bool member = false;
    std::optional<ComplexMatrix> u;
    double residual = 0.0;  // ||U A - B|| resp. ||A U - B||
    double gram_gap = 0.0;  // ||B*B - A*A|| resp. ||B B* - A A*||
};

/// B in the closure of {U A : U unitary}: B*B = A*A within tol. The witness
/// unitary comes from the polar part of B A* and is checked by its residual.
UnitaryWitness closure_u_right_contains(const ComplexMatrix& a, const ComplexMatrix& b,
                                        double tol, const Tolerances& tols = {});

/// B in the closure of {A U : U unitary}: B B* = A A* within tol.
UnitaryWitness closure_u_left_contains(const ComplexMatrix& a, const ComplexMatrix& b,
                                       double tol, const Tolerances& tols = {});

/// B in the closure of the unitary-unitary orbit: equal singular value lists
/// within tol.
bool closure_uu_contains(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

/// min over unitaries U, V of ||U A V - B|| = max_i |sigma_i(A) - sigma_i(B)|.
double uu_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// For positive semidefinite A, B: membership of B in the closed cone of
/// operators dominated by a multiple of A, i.e. range containment R(B) in R(A).
/// Throws PreconditionError if an input is not psd within tol.
bool lplus_member(const ComplexMatrix& a_psd, const ComplexMatrix& b_psd, double tol,
                  const Tolerances& tols = {});

/// B in the closure of {A G : G invertible}: column-space containment
/// R(B) in R(A).
bool closure_g_right_contains(const ComplexMatrix& a, const ComplexMatrix& b, double tol,
                              const Tolerances& tols = {});

/// Exact finite-dimensional orbit membership per group.
bool orbit_member_exact(const ComplexMatrix& a, const ComplexMatrix& b, OrbitGroup group,
                        double tol, const Tolerances& tols = {});

/// Empirical upper bound on the distance from B to the orbit of A: minimum of
/// ||g A h - b|| over seeded random group elements. Deterministic per seed;
/// sample k draws from a stream derived from (seed, k), so the result does
/// not depend on evaluation order.
double sample_orbit_distance(const ComplexMatrix& a, const ComplexMatrix& b, OrbitGroup group,
                             int n_samples, std::uint64_t seed);

// ---- Seeded randomness ----

/// Deterministic generator with platform-independent uniform and gaussian
/// draws (Box-Muller over the raw 64-bit stream).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    /// Independent stream k of a master seed.
    static Rng derive(std::uint64_t seed, std::uint64_t stream);

    double uniform();                 // [0, 1)
    double gauss();                   // standard normal
    std::complex<double> cgauss();    // standard complex normal

private:
    std::mt19937_64 eng_;
};

ComplexMatrix random_matrix(Rng& rng, int rows, int cols);
ComplexMatrix random_unitary(Rng& rng, int n);
/// I + gaussian, resampled until the condition number is below the cap.
ComplexMatrix random_invertible(Rng& rng, int n, double cond_cap = 1e6);
/// Random matrix of exact rank r (product of factors).
ComplexMatrix random_matrix_of_rank(Rng& rng, int rows, int cols, int r);
/// Random positive semidefinite matrix of rank r.
ComplexMatrix random_psd_of_rank(Rng& rng, int n, int r);

}  // namespace oporbits

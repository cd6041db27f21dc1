#include "oporbits/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "oporbits/cli.hpp"
#include "oporbits/fredholm.hpp"
#include "oporbits/io.hpp"
#include "oporbits/matrix_lab.hpp"
#include "oporbits/orbit.hpp"

namespace oporbits::verify {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Cardinal fin(std::uint64_t n) { return Cardinal::finite(n); }

RangeProfile make_profile(std::vector<RangeProfile::Block> blocks,
                          RangeProfile::Tail tail = RangeProfile::Tail::Zero,
                          Cardinal tail_value = Cardinal::finite(0)) {
    RangeProfile p;
    p.blocks = std::move(blocks);
    p.tail = tail;
    p.tail_value = tail_value;
    return p;
}

/// The bounded verification family: nullity/codefect in {0,1,2,aleph_0,aleph_1},
/// at most two blocks over {1,2,aleph_0,aleph_1}, all three tail kinds.
std::vector<OperatorDescriptor> descriptor_universe() {
    const std::vector<Cardinal> corner = {fin(0), fin(1), fin(2), Cardinal::aleph0(),
                                          Cardinal::aleph(1)};
    const std::vector<Cardinal> values = {fin(1), fin(2), Cardinal::aleph0(), Cardinal::aleph(1)};

    std::vector<std::vector<RangeProfile::Block>> shapes;
    shapes.push_back({});
    for (const Cardinal& v : values) shapes.push_back({{v, 1}});
    for (const Cardinal& v : values)
        for (const Cardinal& w : values) shapes.push_back({{v, 1}, {w, 1}});

    std::vector<RangeProfile> profiles;
    for (const auto& shape : shapes) {
        profiles.push_back(make_profile(shape));
        for (const Cardinal& v : values)
            profiles.push_back(make_profile(shape, RangeProfile::Tail::Repeat, v));
        profiles.push_back(make_profile(shape, RangeProfile::Tail::Cofinal,
                                        Cardinal::aleph_omega()));
    }

    std::vector<OperatorDescriptor> out;
    for (const Cardinal& nullity : corner)
        for (const Cardinal& codefect : corner)
            for (const RangeProfile& p : profiles)
                out.push_back(make_descriptor(nullity, codefect, p));
    return out;
}

/// Universe adequate for the family above: finite values through 6 (the
/// largest occurring rank is 4 and the largest finite dimension 6), the
/// occurring alephs, and a cardinal strictly between any two occurring
/// infinite cardinals where the notation has one.
std::vector<Cardinal> adequate_universe() {
    std::vector<Cardinal> u = default_universe();
    u.push_back(fin(4));
    u.push_back(fin(5));
    u.push_back(fin(6));
    return u;
}

std::map<std::pair<Cardinal, Cardinal>, std::vector<std::size_t>> group_by_dims(
    const std::vector<OperatorDescriptor>& all) {
    std::map<std::pair<Cardinal, Cardinal>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < all.size(); ++i)
        groups[{dim_domain(all[i]), dim_codomain(all[i])}].push_back(i);
    return groups;
}

std::string count_detail(std::size_t checks, double secs, const char* what) {
    std::ostringstream s;
    s << checks << " " << what << ", " << std::fixed << std::setprecision(2) << secs << " s";
    return s.str();
}

// ---- Criterion 1: the two closure characterizations agree ----

CriterionResult criterion_dual_oracle() {
    CriterionResult r{1, "dual-characterization oracle (orbit-closure vs lambda-inclusion)",
                      false, "", 0.0};
    const auto start = Clock::now();
    const auto all = descriptor_universe();
    const auto universe = adequate_universe();

    std::vector<std::vector<LambdaTriple>> lambdas(all.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        lambdas[i] = lambda_enumerate_casewise(all[i], universe);

    std::size_t pairs = 0, disagreements = 0;
    for (const auto& [dims, members] : group_by_dims(all)) {
        for (std::size_t ia : members)
            for (std::size_t ic : members) {
                ++pairs;
                const bool direct = closure_gg_contains(all[ia], all[ic]).member;
                const bool via_lambda = std::includes(lambdas[ia].begin(), lambdas[ia].end(),
                                                      lambdas[ic].begin(), lambdas[ic].end());
                if (direct != via_lambda) ++disagreements;
            }
    }
    r.seconds = seconds_since(start);
    r.passed = disagreements == 0 && pairs >= 5000 && r.seconds < 60.0;
    std::ostringstream d;
    d << pairs << " same-dimension pairs, " << disagreements << " disagreements, " << std::fixed
      << std::setprecision(2) << r.seconds << " s (limit 60)";
    r.detail = d.str();
    return r;
}

// ---- Criterion 2: index identities ----

CriterionResult criterion_index_identities() {
    CriterionResult r{2, "index identities and reductions", false, "", 0.0};
    const auto start = Clock::now();
    const auto all = descriptor_universe();
    std::size_t checks = 0, violations = 0;
    const auto expect = [&](bool ok) {
        ++checks;
        if (!ok) ++violations;
    };

    for (const auto& a : all) {
        const IndexVector v = indices(a);
        const IndexVector w = indices(adjoint(a));
        // adjoint permutation
        expect(w.iota_r == v.iota_r && w.iota_b == v.iota_b && w.iota_i == v.iota_f &&
               w.iota_f == v.iota_i);
        // dimension splits
        expect(card_add(v.iota_i, v.iota_r) == dim_domain(a));
        expect(card_add(v.iota_f, v.iota_r) == dim_codomain(a));
        // separable nonclosed ranges
        if (dim_domain(a) == Cardinal::aleph0() && dim_codomain(a) == Cardinal::aleph0() &&
            !profile_ic(a.profile).is_zero())
            expect(v.iota_i == Cardinal::aleph0() && v.iota_f == Cardinal::aleph0());
        // a defined extended index needs an attained range
        if (dim_domain(a) == dim_codomain(a) && ind(a).is_defined()) expect(v.iota_b == 1);
    }

    for (const auto& [dims, members] : group_by_dims(all)) {
        const bool square = dims.first == dims.second;
        for (std::size_t ia : members)
            for (std::size_t ic : members) {
                const OperatorDescriptor& a = all[ia];
                const OperatorDescriptor& c = all[ic];
                const IndexVector va = indices(a), vc = indices(c);
                const bool cond_a = vc.iota_r <= va.iota_r;
                const bool cond_b =
                    !(va.iota_b == 0 && vc.iota_b == 1) || vc.iota_r < va.iota_r;
                const bool cond_c = !solve_add(va.iota_i, vc.iota_i)
                                         .intersect(solve_add(va.iota_f, vc.iota_f))
                                         .is_empty();
                // rank-index reduction of (a) and (b)
                expect((cond_a && cond_b) == (iota_R(c) <= iota_R(a)));
                // minimal-index reduction of (c) at unequal dimensions
                if (!square) expect(cond_c == (iota_m(c) >= iota_m(a)));
                // saturated shortcut
                if (vc.iota_i == dim_domain(c) && vc.iota_f == dim_codomain(c)) expect(cond_c);
            }
    }
    r.seconds = seconds_since(start);
    r.passed = violations == 0;
    r.detail = count_detail(checks, r.seconds, "identities checked, 0 expected violations") +
               (violations ? " [" + std::to_string(violations) + " violations]" : "");
    return r;
}

// ---- Criterion 3: extended index geography ----

CriterionResult criterion_geography() {
    CriterionResult r{3, "extended-index geography and square casework", false, "", 0.0};
    const auto start = Clock::now();
    const auto all = descriptor_universe();
    std::size_t checks = 0, violations = 0;
    const auto expect = [&](bool ok) {
        ++checks;
        if (!ok) ++violations;
    };

    std::vector<const OperatorDescriptor*> square;
    for (const auto& d : all) {
        const Cardinal h = dim_domain(d);
        if (h == dim_codomain(d) && h.is_infinite()) square.push_back(&d);
    }

    const std::vector<SignedIndex> gammas = {
        SignedIndex::zero(),          SignedIndex::plus(fin(1)),  SignedIndex::minus(fin(1)),
        SignedIndex::plus(fin(2)),    SignedIndex::minus(fin(2)), SignedIndex::plus(Cardinal::aleph0()),
        SignedIndex::minus(Cardinal::aleph0()), SignedIndex::plus(Cardinal::aleph(1)),
        SignedIndex::minus(Cardinal::aleph(1))};

    for (const auto* ap : square) {
        const OperatorDescriptor& a = *ap;
        const Cardinal h = dim_domain(a);
        const IndexRegionQuery q0(SignedIndex::zero(), h);
        const IndexRegionQuery q1(SignedIndex::plus(fin(1)), h);
        // undefined set = meet of the first two region closures
        expect(uind_member(a) == (ind_closure_member(a, q0) && ind_closure_member(a, q1)));

        int region_hits = 0;
        for (const auto& g : gammas) {
            if (g.magnitude() > h) continue;
            const IndexRegionQuery q(g, h);
            const bool region = ind_region_member(a, q);
            const bool boundary = ind_boundary_member(a, q);
            const bool closure = ind_closure_member(a, q);
            if (region) ++region_hits;
            expect(!(region && boundary));
            expect(closure == (region || boundary));
        }
        expect(region_hits == (ind(a).is_defined() ? 1 : 0));
    }

    // square casework equals the general decider
    for (const auto* ap : square)
        for (const auto* bp : square) {
            const OperatorDescriptor& a = *ap;
            const OperatorDescriptor& b = *bp;
            if (dim_domain(a) != dim_domain(b)) continue;
            const bool general = closure_gg_contains(a, b).member;
            const IndexVector va = indices(a), vb = indices(b);
            const bool rank_side =
                vb.iota_r <= va.iota_r &&
                (!(va.iota_b == 0 && vb.iota_b == 1) || vb.iota_r < va.iota_r);
            bool casework = false;
            if (!ind(a).is_defined()) {
                casework = !ind(b).is_defined() && rank_side && iota_m(b) >= iota_m(a);
            } else if (ind(b).is_defined() && ind(b) == ind(a)) {
                casework = rank_side && iota_m(b) >= iota_m(a);
            } else if (!ind(b).is_defined()) {
                casework = rank_side && iota_m(b) >= ind(a).magnitude();
            }
            expect(general == casework);
        }

    r.seconds = seconds_since(start);
    r.passed = violations == 0;
    r.detail = count_detail(checks, r.seconds, "geography checks") +
               (violations ? " [" + std::to_string(violations) + " violations]" : "");
    return r;
}

// ---- Criterion 4: quantitative two-sided matrix suite ----

CriterionResult criterion_matrix_gg() {
    CriterionResult r{4, "matrix two-sided closure: distance, sampling, approximation", false, "",
                      0.0};
    const auto start = Clock::now();
    std::size_t violations = 0, pairs = 0, feasible_pairs = 0;

    for (int trial = 0; trial < 200; ++trial) {
        Rng rng = Rng::derive(0x6767, trial);
        const int m = 1 + static_cast<int>(rng.uniform() * 12);
        const int n = 1 + static_cast<int>(rng.uniform() * 12);
        const int mn = std::min(m, n);
        const int ra = static_cast<int>(rng.uniform() * (mn + 1));
        const bool deficient = rng.uniform() < 0.5;
        const int rb = deficient ? static_cast<int>(rng.uniform() * (mn + 1)) : mn;
        const ComplexMatrix a = random_matrix_of_rank(rng, m, n, ra);
        const ComplexMatrix b = random_matrix_of_rank(rng, m, n, rb);
        ++pairs;

        // closed-form distance against the raw singular value of B
        const int rank_a = matrix_rank(a).rank;
        const Eigen::VectorXd sv = singular_values(b);
        const double oracle = rank_a < sv.size() ? sv(rank_a) : 0.0;
        const double dist = gg_distance(a, b);
        if (std::abs(dist - oracle) > 1e-10) ++violations;

        // seeded sampling stays above the closed form
        const double sampled =
            sample_orbit_distance(a, b, OrbitGroup::GG, 25, 0x5a5a + trial);
        if (sampled < dist - 1e-12) ++violations;

        // constructive approximation whenever the rank constraint allows it
        if (matrix_rank(b).rank <= rank_a) {
            ++feasible_pairs;
            const auto approx = gg_approximate(a, b, 1e-6);
            if (!approx.feasible || approx.achieved_error > 1e-6) ++violations;
        }
    }
    r.seconds = seconds_since(start);
    r.passed = violations == 0 && r.seconds < 30.0;
    std::ostringstream d;
    d << pairs << " pairs (" << feasible_pairs << " feasible for approximation), " << violations
      << " violations, " << std::fixed << std::setprecision(2) << r.seconds << " s (limit 30)";
    r.detail = d.str();
    return r;
}

// ---- Criterion 5: one-sided unitary closure, constructive ----

CriterionResult criterion_unitary_witness() {
    CriterionResult r{5, "one-sided unitary closure with constructive witnesses", false, "", 0.0};
    const auto start = Clock::now();
    std::size_t violations = 0;

    for (int trial = 0; trial < 200; ++trial) {
        Rng rng = Rng::derive(0x55AA, trial);
        const int m = 2 + static_cast<int>(rng.uniform() * 9);
        const int n = 2 + static_cast<int>(rng.uniform() * 9);
        const ComplexMatrix a = random_matrix(rng, m, n);
        const ComplexMatrix u = random_unitary(rng, m);
        const ComplexMatrix b = u * a;

        const auto yes = closure_u_right_contains(a, b, 1e-8);
        if (!yes.member || !yes.u.has_value() || yes.residual > 1e-9) ++violations;

        const ComplexMatrix perturbed = b + 0.01 * random_matrix(rng, m, n);
        const double gap = op_norm(perturbed.adjoint() * perturbed - a.adjoint() * a);
        if (gap > 1e-6) {
            if (closure_u_right_contains(a, perturbed, 1e-8).member) ++violations;
        }
    }
    r.seconds = seconds_since(start);
    r.passed = violations == 0;
    r.detail = count_detail(200, r.seconds, "witness pairs") +
               (violations ? " [" + std::to_string(violations) + " violations]" : "");
    return r;
}

// ---- Criterion 6: unitary-unitary distance against unitary sampling ----

CriterionResult criterion_uu_mirsky() {
    CriterionResult r{6, "unitary-unitary distance: singular value gap, sampling floor", false, "",
                      0.0};
    const auto start = Clock::now();
    std::size_t violations = 0;

    // the stated spot pair: diag(3,1) against diag(2,2)
    ComplexMatrix d1 = ComplexMatrix::Zero(2, 2), d2 = ComplexMatrix::Zero(2, 2);
    d1(0, 0) = 3.0;
    d1(1, 1) = 1.0;
    d2(0, 0) = 2.0;
    d2(1, 1) = 2.0;
    if (std::abs(uu_distance(d1, d2) - 1.0) > 1e-12) ++violations;
    if (sample_orbit_distance(d1, d2, OrbitGroup::UU, 10000, 0xd1d2) <
        uu_distance(d1, d2) - 1e-12)
        ++violations;

    for (int trial = 0; trial < 200; ++trial) {
        Rng rng = Rng::derive(0x0131, trial);
        const int m = 2 + static_cast<int>(rng.uniform() * 7);
        const int n = 2 + static_cast<int>(rng.uniform() * 7);
        const ComplexMatrix a = random_matrix(rng, m, n);
        const ComplexMatrix b = random_matrix(rng, m, n);

        const Eigen::VectorXd sa = singular_values(a), sb = singular_values(b);
        const double oracle = (sa - sb).cwiseAbs().maxCoeff();
        const double dist = uu_distance(a, b);
        if (std::abs(dist - oracle) > 1e-10) ++violations;

        const double sampled =
            sample_orbit_distance(a, b, OrbitGroup::UU, 10000, 0xabc0 + trial);
        if (sampled < dist - 1e-12) ++violations;
    }
    r.seconds = seconds_since(start);
    r.passed = violations == 0;
    r.detail = count_detail(201, r.seconds, "pairs x 10000 unitary samples") +
               (violations ? " [" + std::to_string(violations) + " violations]" : "");
    return r;
}

// ---- Criterion 7: right-multiplication closure and the positive cone ----

CriterionResult criterion_g_right_lplus() {
    CriterionResult r{7, "right-invertible closure and positive-cone membership", false, "", 0.0};
    const auto start = Clock::now();
    std::size_t violations = 0;

    // column-space containment against an independent least-squares oracle
    for (int trial = 0; trial < 200; ++trial) {
        Rng rng = Rng::derive(0x0677, trial);
        const int m = 2 + static_cast<int>(rng.uniform() * 8);
        const int n = 2 + static_cast<int>(rng.uniform() * 8);
        const int ra = 1 + static_cast<int>(rng.uniform() * std::min(m, n));
        const ComplexMatrix a = random_matrix_of_rank(rng, m, n, ra);
        ComplexMatrix b;
        if (rng.uniform() < 0.5) {
            b = a * random_invertible(rng, n);  // member by construction
        } else {
            b = random_matrix_of_rank(rng, m, n, std::min(m, n));  // full column reach
        }
        const bool decided = closure_g_right_contains(a, b, 1e-8);
        // least-squares residual of A X = B decides containment independently
        const double resid =
            op_norm(a * a.completeOrthogonalDecomposition().solve(b) - b);
        const bool oracle = resid <= 1e-7 * std::max(1.0, op_norm(b));
        if (decided != oracle) ++violations;
    }

    // positive cone membership against the scalar-multiple sweep
    for (int trial = 0; trial < 500; ++trial) {
        Rng rng = Rng::derive(0x1107, trial);
        const int n = 2 + static_cast<int>(rng.uniform() * 6);
        const int rank_a = 1 + static_cast<int>(rng.uniform() * n);

        const ComplexMatrix q = random_unitary(rng, n);
        Eigen::VectorXd ev = Eigen::VectorXd::Zero(n), root_ev = Eigen::VectorXd::Zero(n);
        for (int i = 0; i < rank_a; ++i) {
            ev(i) = 0.25 + rng.uniform() * 4.0;
            root_ev(i) = std::sqrt(ev(i));
        }
        const ComplexMatrix a = q * ev.asDiagonal() * q.adjoint();
        const ComplexMatrix root = q * root_ev.asDiagonal() * q.adjoint();

        ComplexMatrix b;
        if (rng.uniform() < 0.5) {
            b = root * random_psd_of_rank(rng, n, n) * root;
        } else if (rank_a < n) {
            // off-range mass on the orthogonal complement of R(A)
            const ComplexMatrix tail_vec = q.col(n - 1);
            b = root * random_psd_of_rank(rng, n, n) * root +
                (0.5 + rng.uniform()) * tail_vec * tail_vec.adjoint();
        } else {
            b = random_psd_of_rank(rng, n, n);  // full range = R(A), member
        }

        const bool decided = lplus_member(a, b, 1e-8);
        bool sweep = false;
        const double norm_a = op_norm(a), norm_b = op_norm(b);
        for (int k = 0; k <= 30 && !sweep; ++k) {
            const double c = std::pow(2.0, k);
            Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(c * a - b);
            if (es.eigenvalues().minCoeff() >= -1e-12 * (c * norm_a + norm_b)) sweep = true;
        }
        if (decided != sweep) ++violations;
    }

    r.seconds = seconds_since(start);
    r.passed = violations == 0;
    r.detail = count_detail(700, r.seconds, "membership pairs") +
               (violations ? " [" + std::to_string(violations) + " violations]" : "");
    return r;
}

// ---- Criterion 8: ideals + rank lower semicontinuity ----

CriterionResult criterion_ideals(bool symbolic, bool numeric) {
    CriterionResult r{8, "ideal lattice and rank lower semicontinuity", false, "", 0.0};
    const auto start = Clock::now();
    std::size_t violations = 0, checks = 0;
    std::ostringstream detail;

    if (symbolic) {
        const auto all = descriptor_universe();
        std::vector<const OperatorDescriptor*> ambient1;
        for (const auto& d : all)
            if (dim_domain(d) == Cardinal::aleph(1) && dim_codomain(d) == Cardinal::aleph(1))
                ambient1.push_back(&d);

        const IdealHandle compacts(Cardinal::aleph0(), Cardinal::aleph(1));
        for (const auto* d : ambient1) {
            ++checks;
            if (ideal_member(*d, compacts) != is_compact(*d)) ++violations;
        }

        const std::vector<Cardinal> alphas = {Cardinal::aleph0(), Cardinal::aleph(1)};
        for (const Cardinal& x : alphas)
            for (const Cardinal& y : alphas) {
                const IdealHandle jx(x, Cardinal::aleph(1)), jy(y, Cardinal::aleph(1));
                bool contained = true;
                for (const auto* d : ambient1)
                    if (ideal_member(*d, jx) && !ideal_member(*d, jy)) contained = false;
                ++checks;
                if (contained != (x <= y)) ++violations;
            }
        detail << ambient1.size() << " descriptors on the aleph_1 space";
    }

    if (numeric) {
        std::size_t sequences = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            Rng rng = Rng::derive(0x0888, trial);
            const int m = 2 + static_cast<int>(rng.uniform() * 9);
            const int n = 2 + static_cast<int>(rng.uniform() * 9);
            const int rank = 1 + static_cast<int>(rng.uniform() * std::min(m, n));
            const ComplexMatrix a = random_matrix_of_rank(rng, m, n, rank);
            const ComplexMatrix e = random_matrix(rng, m, n);
            const double sigma_r = singular_values(a)(rank - 1);
            const double norm_e = op_norm(e);
            ++sequences;
            for (int k = 1; k <= 6; ++k) {
                const double scale = sigma_r / std::pow(4.0, k) / norm_e;
                ++checks;
                if (matrix_rank(a + scale * e).rank < rank) ++violations;
            }
        }
        if (symbolic) detail << "; ";
        detail << sequences << " perturbation sequences";
    }

    r.seconds = seconds_since(start);
    r.passed = violations == 0;
    detail << ", " << checks << " checks, " << std::fixed << std::setprecision(2) << r.seconds
           << " s";
    if (violations) detail << " [" << violations << " violations]";
    if (!symbolic) detail << " (symbolic half skipped)";
    if (!numeric) detail << " (numeric half skipped)";
    r.detail = detail.str();
    return r;
}

// ---- Criterion 9: round trips and CLI determinism ----

CriterionResult criterion_roundtrip(bool symbolic, bool numeric) {
    CriterionResult r{9, "serialization round trips and CLI determinism", false, "", 0.0};
    const auto start = Clock::now();
    std::size_t violations = 0, count_desc = 0, count_mat = 0;
    std::ostringstream detail;

    if (symbolic) {
        const auto all = descriptor_universe();
        for (std::size_t i = 0; i < all.size() && count_desc < 1000; i += 3) {
            ++count_desc;
            if (!(parse_descriptor(serialize_descriptor(all[i])) == all[i])) ++violations;
        }
        detail << count_desc << " descriptors";
    }

    if (numeric) {
        for (int trial = 0; trial < 1000; ++trial) {
            Rng rng = Rng::derive(0x0909, trial);
            const int m = 1 + static_cast<int>(rng.uniform() * 8);
            const int n = 1 + static_cast<int>(rng.uniform() * 8);
            const ComplexMatrix a = random_matrix(rng, m, n);
            const ComplexMatrix back = parse_matrix(serialize_matrix(a));
            ++count_mat;
            if (back.rows() != a.rows() || back.cols() != a.cols() || !(back == a)) ++violations;
        }
        if (symbolic) detail << "; ";
        detail << count_mat << " matrices";

        // two full CLI invocations must agree byte for byte
        namespace fs = std::filesystem;
        const fs::path dir = fs::temp_directory_path();
        const fs::path fa = dir / "oporb_verify_a.json";
        const fs::path fb = dir / "oporb_verify_b.json";
        Rng rng = Rng::derive(0x0909, 424242);
        {
            std::ofstream(fa) << serialize_matrix(random_matrix(rng, 6, 6));
            std::ofstream(fb) << serialize_matrix(random_matrix(rng, 6, 6));
        }
        const std::vector<std::vector<std::string>> commands = {
            {"matrix", "sample", "--group", "gg", "--A", fa.string(), "--B", fb.string(), "--n",
             "40", "--seed", "7"},
            {"matrix", "distance", "--group", "uu", "--A", fa.string(), "--B", fb.string()},
            {"matrix", "indices", "--A", fa.string()},
        };
        for (const auto& cmd : commands) {
            std::ostringstream out1, err1, out2, err2;
            const int rc1 = run_cli(cmd, out1, err1);
            const int rc2 = run_cli(cmd, out2, err2);
            if (rc1 != 0 || rc2 != 0 || out1.str() != out2.str() || out1.str().empty())
                ++violations;
        }
        std::error_code ec;
        fs::remove(fa, ec);
        fs::remove(fb, ec);
        detail << "; 3 CLI commands run twice";
    }

    r.seconds = seconds_since(start);
    r.passed = violations == 0;
    detail << ", " << std::fixed << std::setprecision(2) << r.seconds << " s";
    if (violations) detail << " [" << violations << " violations]";
    if (!symbolic) detail << " (descriptor half skipped)";
    if (!numeric) detail << " (matrix/CLI half skipped)";
    r.detail = detail.str();
    return r;
}

}  // namespace

std::vector<CriterionResult> run_criteria(bool symbolic, bool numeric) {
    std::vector<CriterionResult> out;
    if (symbolic) {
        out.push_back(criterion_dual_oracle());
        out.push_back(criterion_index_identities());
        out.push_back(criterion_geography());
    }
    if (numeric) {
        out.push_back(criterion_matrix_gg());
        out.push_back(criterion_unitary_witness());
        out.push_back(criterion_uu_mirsky());
        out.push_back(criterion_g_right_lplus());
    }
    out.push_back(criterion_ideals(symbolic, numeric));
    out.push_back(criterion_roundtrip(symbolic, numeric));
    return out;
}

bool run_acceptance(std::ostream& out, bool symbolic, bool numeric) {
    const auto results = run_criteria(symbolic, numeric);
    bool all_passed = true;
    for (const auto& r : results) {
        out << "[" << r.id << "] " << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  ("
            << r.detail << ")\n";
        all_passed = all_passed && r.passed;
    }
    out << "RESULT: " << (all_passed ? "all criteria passed" : "CRITERIA FAILED") << "\n";
    return all_passed;
}

}  // namespace oporbits::verify

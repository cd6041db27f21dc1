#include "oporbits/orbit.hpp"

#include <algorithm>
#include <set>

namespace oporbits {

namespace {

void require_same_ambient(const OperatorDescriptor& a, const OperatorDescriptor& b,
                          const char* op) {
    if (dim_domain(a) != dim_domain(b) || dim_codomain(a) != dim_codomain(b))
        throw PreconditionError(std::string(op) + ": operands act between different spaces (" +
                                format_cardinal(dim_domain(a)) + " -> " +
                                format_cardinal(dim_codomain(a)) + " vs " +
                                format_cardinal(dim_domain(b)) + " -> " +
                                format_cardinal(dim_codomain(b)) + ")");
}

}  // namespace

bool lambda_member(const OperatorDescriptor& a, const LambdaTriple& t) {
    const IndexVector v = indices(a);
    // mu is pinned by the middle coordinate; nu must solve all three equations.
    const Cardinal& mu = t.mid;
    if (v.iota_b == 0 && !(mu < v.iota_r)) return false;
    const AlphaSolutionSet nu = solve_add(mu, v.iota_r)
                                    .intersect(solve_add(v.iota_i, t.left))
                                    .intersect(solve_add(v.iota_f, t.right));
    return !nu.is_empty();
}

std::vector<LambdaTriple> lambda_enumerate(const OperatorDescriptor& a,
                                           const std::vector<Cardinal>& universe) {
    std::vector<LambdaTriple> out;
    for (const Cardinal& l : universe)
        for (const Cardinal& m : universe)
            for (const Cardinal& r : universe) {
                const LambdaTriple t{l, m, r};
                if (lambda_member(a, t)) out.push_back(t);
            }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Cardinal> default_universe() {
    return {Cardinal::finite(0), Cardinal::finite(1), Cardinal::finite(2), Cardinal::finite(3),
            Cardinal::aleph(0), Cardinal::aleph(1), Cardinal::aleph(2),
            Cardinal::aleph_omega(), Cardinal::aleph(OrdinalCNF::omega().successor())};
}

OrbitVerdict closure_gg_contains(const OperatorDescriptor& a, const OperatorDescriptor& c) {
    require_same_ambient(a, c, "closure_gg_contains");
    const IndexVector va = indices(a), vc = indices(c);

    if (!(vc.iota_r <= va.iota_r)) return OrbitVerdict{false, 'a', std::nullopt};
    if (va.iota_b == 0 && vc.iota_b == 1 && !(vc.iota_r < va.iota_r))
        return OrbitVerdict{false, 'b', std::nullopt};

    // Shortcut: when C's initial and final indices saturate the ambient
    // dimensions, the shift equation has a solution for any A.
    if (vc.iota_i == dim_domain(c) && vc.iota_f == dim_codomain(c)) {
        const AlphaSolutionSet alpha =
            solve_add(va.iota_i, vc.iota_i).intersect(solve_add(va.iota_f, vc.iota_f));
        return OrbitVerdict{true, std::nullopt, alpha};
    }

    const AlphaSolutionSet alpha =
        solve_add(va.iota_i, vc.iota_i).intersect(solve_add(va.iota_f, vc.iota_f));
    if (alpha.is_empty()) return OrbitVerdict{false, 'c', std::nullopt};
    return OrbitVerdict{true, std::nullopt, alpha};
}

namespace {

// Enumerates Lambda(X) over `universe` straight from the case formulas, with
// no use of the equation solver. The three cases:
//   finite range:            (dim H - j, j, dim K - j) for j = 0..iota_r,
//   binary index 0:          (dim H, beta, dim K) for beta < iota_r,
//   infinite attained range: the previous family plus
//                            (iota_i + alpha, iota_r, iota_f + alpha), alpha <= iota_r.
// Cardinal subtraction m - j here follows the convention m - j = m for
// infinite m and finite j.
std::set<LambdaTriple> lambda_casewise(const OperatorDescriptor& x,
                                       const std::vector<Cardinal>& universe) {
    const IndexVector v = indices(x);
    const Cardinal h = dim_domain(x), k = dim_codomain(x);

    // The comparable object on both sides of an inclusion test is the slice
    // Lambda(X) intersected with universe^3, so triples whose coordinates
    // escape the universe are dropped.
    const auto in_universe = [&universe](const Cardinal& c) {
        return std::find(universe.begin(), universe.end(), c) != universe.end();
    };
    std::set<LambdaTriple> out;
    const auto put = [&](LambdaTriple t) {
        if (in_universe(t.left) && in_universe(t.mid) && in_universe(t.right))
            out.insert(std::move(t));
    };

    const auto minus_finite = [](const Cardinal& m, std::uint64_t j) {
        if (m.is_infinite()) return m;
        return Cardinal::finite(m.finite_value() - j);  // j <= m in every use below
    };

    if (v.iota_r.is_finite()) {
        for (std::uint64_t j = 0; j <= v.iota_r.finite_value(); ++j)
            put(LambdaTriple{minus_finite(h, j), Cardinal::finite(j), minus_finite(k, j)});
        return out;
    }
    for (const Cardinal& beta : universe)
        if (beta < v.iota_r) put(LambdaTriple{h, beta, k});
    if (v.iota_b == 1) {
        for (const Cardinal& alpha : universe)
            if (alpha <= v.iota_r)
                put(LambdaTriple{card_add(v.iota_i, alpha), v.iota_r, card_add(v.iota_f, alpha)});
    }
    return out;
}

}  // namespace

std::vector<LambdaTriple> lambda_enumerate_casewise(const OperatorDescriptor& a,
                                                    const std::vector<Cardinal>& universe) {
    const std::set<LambdaTriple> s = lambda_casewise(a, universe);
    return std::vector<LambdaTriple>(s.begin(), s.end());
}

bool closure_gg_contains_via_lambda(const OperatorDescriptor& a, const OperatorDescriptor& c,
                                    const std::vector<Cardinal>& universe) {
    const std::set<LambdaTriple> la = lambda_casewise(a, universe);
    const std::set<LambdaTriple> lc = lambda_casewise(c, universe);
    return std::includes(la.begin(), la.end(), lc.begin(), lc.end());
}

bool closure_gg_equal(const OperatorDescriptor& a, const OperatorDescriptor& b) {
    require_same_ambient(a, b, "closure_gg_equal");
    return indices(a) == indices(b);
}

bool invertible_closure_member(const OperatorDescriptor& a) {
    if (dim_domain(a) != dim_codomain(a))
        throw PreconditionError("invertible_closure_member: dim H != dim K");
    const IndexVector v = indices(a);
    return v.iota_i == v.iota_f;
}

SeparableClassification classify_separable(const OperatorDescriptor& a) {
    if (dim_domain(a) != Cardinal::aleph0() || dim_codomain(a) != Cardinal::aleph0())
        throw PreconditionError("classify_separable: requires dim H = dim K = aleph_0");
    const IndexVector v = indices(a);
    SeparableClassification out{SeparableClass::FiniteRank, v.iota_r, ind(a), iota_m(a)};
    if (v.iota_r.is_finite()) {
        out.kind = SeparableClass::FiniteRank;
    } else if (is_compact(a)) {
        out.kind = SeparableClass::CompactInfRank;
    } else if (!out.index.is_defined()) {
        out.kind = SeparableClass::NonSemiFredholm;
    } else {
        out.kind = SeparableClass::SemiFredholm;
    }
    return out;
}

bool gg_open_neighbourhood_claim(const OperatorDescriptor& a) {
    return indices(a).iota_b == 1;
}

std::string format_lambda_triple(const LambdaTriple& t) {
    return "(" + format_cardinal(t.left) + ", " + format_cardinal(t.mid) + ", " +
           format_cardinal(t.right) + ")";
}

}  // namespace oporbits

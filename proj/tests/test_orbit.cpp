#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "oporbits/orbit.hpp"
#include "support.hpp"

using namespace oporbits;
using namespace oporbits::testsupport;

namespace {

/// Verification universe rich enough for the bounded descriptor family: all
/// finite values that occur as ranks or dimensions, every occurring aleph,
/// and a cardinal strictly between any two occurring infinite cardinals
/// whenever the notation has one.
std::vector<Cardinal> wide_universe() {
    std::vector<Cardinal> u = default_universe();
    u.push_back(fin(4));
    u.push_back(fin(5));
    u.push_back(fin(6));
    return u;
}

/// Descriptor pairs acting between the same spaces.
std::vector<std::pair<OperatorDescriptor, OperatorDescriptor>> same_dim_pairs(std::size_t cap) {
    const auto all = descriptor_universe();
    std::map<std::pair<Cardinal, Cardinal>, std::vector<const OperatorDescriptor*>> groups;
    for (const auto& d : all) groups[{dim_domain(d), dim_codomain(d)}].push_back(&d);
    std::vector<std::pair<OperatorDescriptor, OperatorDescriptor>> out;
    std::size_t stride_counter = 0;
    for (const auto& [dims, members] : groups)
        for (const auto* a : members)
            for (const auto* b : members) {
                if (++stride_counter % 7 != 0) continue;  // thin out deterministically
                out.emplace_back(*a, *b);
                if (out.size() >= cap) return out;
            }
    return out;
}

}  // namespace

TEST_CASE("lambda membership examples") {
    const OperatorDescriptor zero = zero_operator(fin(3), fin(5));
    CHECK(lambda_member(zero, LambdaTriple{fin(3), fin(0), fin(5)}));
    CHECK(!lambda_member(zero, LambdaTriple{fin(2), fin(1), fin(4)}));

    CHECK(lambda_member(identity_separable(), LambdaTriple{a0(), fin(5), a0()}));
    CHECK(!lambda_member(compact_dense_separable(), LambdaTriple{a0(), a0(), a0()}));
}

TEST_CASE("lambda enumeration of a finite-rank descriptor") {
    // rank 2 between three-dimensional spaces: (3-j, j, 3-j) for j = 0, 1, 2
    const OperatorDescriptor d = finite_rank(2, fin(3), fin(3));
    const auto triples = lambda_enumerate(d, {fin(0), fin(1), fin(2), fin(3)});
    const std::vector<LambdaTriple> expected = {
        {fin(1), fin(2), fin(1)}, {fin(2), fin(1), fin(2)}, {fin(3), fin(0), fin(3)}};
    CHECK(triples == expected);
}

TEST_CASE("lambda enumeration of the zero operator is a singleton") {
    const OperatorDescriptor zero = zero_operator(a0(), a0());
    const auto triples = lambda_enumerate(zero, default_universe());
    CHECK(triples == std::vector<LambdaTriple>{{a0(), fin(0), a0()}});
}

TEST_CASE("lambda enumeration of the separable identity") {
    const auto triples = lambda_enumerate(identity_separable(), {fin(0), fin(1), a0()});
    const std::vector<LambdaTriple> expected = {{fin(0), a0(), fin(0)},
                                                {fin(1), a0(), fin(1)},
                                                {a0(), fin(0), a0()},
                                                {a0(), fin(1), a0()},
                                                {a0(), a0(), a0()}};
    CHECK(triples == expected);
}

TEST_CASE("closure membership examples") {
    // compacts lie in the closure of the invertibles
    const OrbitVerdict in = closure_gg_contains(identity_separable(), compact_dense_separable());
    CHECK(in.member);
    REQUIRE(in.alpha.has_value());
    CHECK(in.alpha->contains(a0()));

    // the identity is not a norm limit of compacts: the attained-range clause
    const OrbitVerdict out = closure_gg_contains(compact_dense_separable(), identity_separable());
    CHECK(!out.member);
    CHECK(out.failed_condition == 'b');

    // ranks cannot grow in the closure
    const OrbitVerdict rank_block =
        closure_gg_contains(finite_rank(2, fin(3), fin(3)), finite_rank(3, fin(3), fin(3)));
    CHECK(!rank_block.member);
    CHECK(rank_block.failed_condition == 'a');
}

TEST_CASE("closure membership precondition") {
    CHECK_THROWS_AS(closure_gg_contains(identity_separable(), zero_operator(a1(), a1())),
                    PreconditionError);
}

TEST_CASE("lambda-inclusion route examples") {
    const auto u = wide_universe();
    CHECK(closure_gg_contains_via_lambda(identity_separable(), compact_dense_separable(), u));
    CHECK(!closure_gg_contains_via_lambda(compact_dense_separable(), identity_separable(), u));
    CHECK(!closure_gg_contains_via_lambda(finite_rank(2, fin(3), fin(3)),
                                          finite_rank(3, fin(3), fin(3)), u));
    CHECK(closure_gg_contains_via_lambda(shift(), shift(), u));
    CHECK(!closure_gg_contains_via_lambda(zero_operator(fin(3), fin(3)),
                                          finite_rank(1, fin(3), fin(3)), u));
}

TEST_CASE("the two closure characterizations agree") {
    const auto u = wide_universe();
    for (const auto& [a, c] : same_dim_pairs(30000)) {
        const bool direct = closure_gg_contains(a, c).member;
        const bool via_lambda = closure_gg_contains_via_lambda(a, c, u);
        CHECK(direct == via_lambda);
    }
}

TEST_CASE("closure containment is a preorder and equality is mutual containment") {
    const auto pairs = same_dim_pairs(8000);
    for (const auto& [a, b] : pairs) {
        CHECK(closure_gg_contains(a, a).member);
        const bool ab = closure_gg_contains(a, b).member;
        const bool ba = closure_gg_contains(b, a).member;
        CHECK(closure_gg_equal(a, b) == (ab && ba));
    }
    // transitivity on a thinner sample of triples
    const auto triples = same_dim_pairs(400);
    for (const auto& [a, b] : triples)
        for (const auto& second : triples) {
            const OperatorDescriptor& c = second.second;
            if (dim_domain(b) != dim_domain(c) || dim_codomain(b) != dim_codomain(c)) continue;
            if (closure_gg_contains(a, b).member && closure_gg_contains(b, c).member)
                CHECK(closure_gg_contains(a, c).member);
        }
}

TEST_CASE("rank-index reduction of the first two conditions") {
    for (const auto& [a, c] : same_dim_pairs(20000)) {
        const IndexVector va = indices(a), vc = indices(c);
        const bool cond_a = vc.iota_r <= va.iota_r;
        const bool cond_b = !(va.iota_b == 0 && vc.iota_b == 1) || vc.iota_r < va.iota_r;
        CHECK((cond_a && cond_b) == (iota_R(c) <= iota_R(a)));
    }
}

TEST_CASE("minimal-index reduction of the shift condition at unequal dimensions") {
    const auto all = descriptor_universe();
    std::size_t counter = 0;
    for (const auto& a : all)
        for (const auto& c : all) {
            if (dim_domain(a) != dim_domain(c) || dim_codomain(a) != dim_codomain(c)) continue;
            if (dim_domain(a) == dim_codomain(a)) continue;
            if (++counter % 11 != 0) continue;
            const IndexVector va = indices(a), vc = indices(c);
            const bool cond_c =
                !solve_add(va.iota_i, vc.iota_i).intersect(solve_add(va.iota_f, vc.iota_f)).is_empty();
            CHECK(cond_c == (iota_m(c) >= iota_m(a)));
        }
}

TEST_CASE("saturated shortcut agrees with the general solver") {
    for (const auto& [a, c] : same_dim_pairs(20000)) {
        const IndexVector va = indices(a), vc = indices(c);
        if (vc.iota_i == dim_domain(c) && vc.iota_f == dim_codomain(c)) {
            const bool general = !solve_add(va.iota_i, vc.iota_i)
                                      .intersect(solve_add(va.iota_f, vc.iota_f))
                                      .is_empty();
            CHECK(general);
        }
    }
}

TEST_CASE("closure queries commute with adjoints") {
    for (const auto& [a, c] : same_dim_pairs(8000))
        CHECK(closure_gg_contains(a, c).member == closure_gg_contains(adjoint(a), adjoint(c)).member);
}

TEST_CASE("closure equality examples") {
    // distinct compact-type profiles with the same index vector
    const OperatorDescriptor c1 = compact_dense_separable();
    const OperatorDescriptor c2 =
        make_descriptor(fin(0), fin(0), profile({{fin(2), 3}}, RangeProfile::Tail::Repeat, fin(1)));
    REQUIRE(indices(c1) == indices(c2));
    CHECK(closure_gg_equal(c1, c2));
    CHECK(!(c1 == c2));

    CHECK(!closure_gg_equal(identity_separable(), shift()));
    const OperatorDescriptor asym = make_descriptor(fin(1), fin(2), profile({{a0(), 1}}));
    CHECK(!closure_gg_equal(asym, adjoint(asym)));
}

TEST_CASE("invertible closure membership") {
    CHECK(invertible_closure_member(compact_dense_separable()));
    CHECK(!invertible_closure_member(shift()));
    CHECK(invertible_closure_member(finite_rank(2, fin(5), fin(5))));
    CHECK_THROWS_AS(invertible_closure_member(zero_operator(fin(2), fin(3))), PreconditionError);
}

TEST_CASE("separable classification") {
    const auto r2 = classify_separable(finite_rank(2, a0(), a0()));
    CHECK(r2.kind == SeparableClass::FiniteRank);
    CHECK(r2.rank == fin(2));

    CHECK(classify_separable(compact_dense_separable()).kind == SeparableClass::CompactInfRank);

    const auto sf = classify_separable(shift());
    CHECK(sf.kind == SeparableClass::SemiFredholm);
    CHECK(sf.index == SignedIndex::minus(fin(1)));
    CHECK(sf.min_index == fin(0));

    // noncompact, nonclosed range, dense: neither semi-Fredholm nor compact
    const OperatorDescriptor mixed =
        make_descriptor(fin(0), fin(0), profile({{a0(), 1}}, RangeProfile::Tail::Repeat, fin(1)));
    CHECK(classify_separable(mixed).kind == SeparableClass::NonSemiFredholm);

    CHECK_THROWS_AS(classify_separable(zero_operator(a1(), a1())), PreconditionError);
}

TEST_CASE("open neighbourhood hypothesis") {
    CHECK(gg_open_neighbourhood_claim(identity_separable()));
    CHECK(!gg_open_neighbourhood_claim(compact_dense_separable()));
    CHECK(gg_open_neighbourhood_claim(finite_rank(1, a0(), a0())));
}

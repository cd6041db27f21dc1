#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oporbits/descriptor.hpp"
#include "support.hpp"

using namespace oporbits;
using namespace oporbits::testsupport;

TEST_CASE("index vectors of the canonical operators") {
    CHECK(indices(identity_separable()) == IndexVector{a0(), fin(0), fin(0), 1});
    CHECK(indices(compact_dense_separable()) == IndexVector{a0(), a0(), a0(), 0});
    // Isometry: closed range, zero incompleteness, one-dimensional defect.
    CHECK(indices(shift()) == IndexVector{a0(), fin(0), fin(1), 1});
}

TEST_CASE("adjoint swaps the corner data") {
    const OperatorDescriptor s = shift();
    const OperatorDescriptor s_adj = adjoint(s);
    CHECK(s_adj.nullity == fin(1));
    CHECK(s_adj.codefect == fin(0));
    CHECK(s_adj.profile == s.profile);
    CHECK(adjoint(s_adj) == s);
}

TEST_CASE("adjoint permutes the index vector") {
    for (const auto& a : descriptor_universe()) {
        const IndexVector v = indices(a);
        const IndexVector w = indices(adjoint(a));
        CHECK(w.iota_r == v.iota_r);
        CHECK(w.iota_i == v.iota_f);
        CHECK(w.iota_f == v.iota_i);
        CHECK(w.iota_b == v.iota_b);
    }
}

TEST_CASE("dimension identities hold by construction") {
    for (const auto& a : descriptor_universe()) {
        const IndexVector v = indices(a);
        CHECK(card_add(v.iota_i, v.iota_r) == dim_domain(a));
        CHECK(card_add(v.iota_f, v.iota_r) == dim_codomain(a));
    }
}

TEST_CASE("separable nonclosed ranges force both indices to aleph_0") {
    for (const auto& a : descriptor_universe()) {
        const IndexVector v = indices(a);
        if (dim_domain(a) == a0() && dim_codomain(a) == a0() && !profile_ic(a.profile).is_zero()) {
            CHECK(v.iota_i == a0());
            CHECK(v.iota_f == a0());
        }
    }
}

TEST_CASE("iota_R examples") {
    CHECK(iota_R(finite_rank(3, a0(), a0())) == fin(4));
    CHECK(iota_R(compact_dense_separable()) == a0());
    CHECK(iota_R(identity_separable()) == a1());

    // Cross-check against the subspace test: iota_R is the least beta whose
    // complete subspace is missing.
    for (const auto& a : descriptor_universe()) {
        const Cardinal r = iota_R(a);
        CHECK(!contains_complete_subspace_of_dim(a.profile, r));
        const IndexVector v = indices(a);
        if (v.iota_b == 1) CHECK(contains_complete_subspace_of_dim(a.profile, v.iota_r));
    }
}

TEST_CASE("iota_m examples") {
    CHECK(iota_m(shift()) == fin(0));
    CHECK(iota_m(compact_dense_separable()) == a0());
    CHECK(iota_m(zero_operator(fin(3), fin(7))) == fin(3));
}

TEST_CASE("ind examples") {
    CHECK(ind(shift()) == SignedIndex::minus(fin(1)));
    CHECK(ind(compact_dense_separable()) == SignedIndex::undefined());
    CHECK(ind(zero_operator(fin(4), fin(4))) == SignedIndex::zero());
}

TEST_CASE("ind defined forces an attained range") {
    for (const auto& a : descriptor_universe()) {
        if (dim_domain(a) != dim_codomain(a)) continue;
        if (ind(a).is_defined()) CHECK(indices(a).iota_b == 1);
    }
}

TEST_CASE("compactness examples") {
    CHECK(is_compact(make_descriptor(fin(0), fin(0), profile({{fin(3), 2}}))));
    CHECK(is_compact(compact_dense_separable()));
    CHECK(!is_compact(identity_separable()));
}

TEST_CASE("compactness agrees with the block-wise description") {
    for (const auto& a : descriptor_universe()) {
        bool blockwise = a.profile.tail != RangeProfile::Tail::Cofinal;
        for (const auto& blk : a.profile.blocks)
            if (blk.value.is_infinite()) blockwise = false;
        if (a.profile.tail == RangeProfile::Tail::Repeat && a.profile.tail_value.is_infinite())
            blockwise = false;
        CHECK(is_compact(a) == blockwise);
        CHECK(is_compact(a) == !contains_complete_subspace_of_dim(a.profile, a0()));
    }
}

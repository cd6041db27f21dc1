#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "oporbits/range_profile.hpp"
#include "support.hpp"

using namespace oporbits;
using namespace oporbits::testsupport;

namespace {

/// Independent oracle for the index of incompleteness: expand the block list
/// into the explicit summand sequence and minimize the suffix sums directly.
/// Suffixes that start inside an infinite tail all sum to the tail total.
Cardinal ic_oracle(const RangeProfile& p) {
    std::vector<Cardinal> prefix;
    for (const auto& blk : p.blocks)
        for (std::uint64_t i = 0; i < blk.count; ++i) prefix.push_back(blk.value);

    Cardinal tail_total = fin(0);
    switch (p.tail) {
        case RangeProfile::Tail::Zero: tail_total = fin(0); break;
        case RangeProfile::Tail::Repeat: tail_total = std::max(a0(), p.tail_value); break;
        case RangeProfile::Tail::Cofinal: tail_total = p.tail_value; break;
    }

    Cardinal best = tail_total;  // cut right after the whole prefix
    for (std::size_t cut = 0; cut < prefix.size(); ++cut) {
        Cardinal sum = tail_total;
        for (std::size_t i = cut; i < prefix.size(); ++i) sum = card_add(sum, prefix[i]);
        best = std::min(best, sum);
    }
    return best;
}

std::vector<RangeProfile> profile_universe() {
    std::vector<RangeProfile> out;
    for (const auto& d : descriptor_universe()) {
        if (!d.nullity.is_zero() || !d.codefect.is_zero()) continue;
        out.push_back(d.profile);
    }
    return out;
}

}  // namespace

TEST_CASE("profile_total examples") {
    CHECK(profile_total(profile({{a0(), 1}})) == a0());
    CHECK(profile_total(profile({}, RangeProfile::Tail::Repeat, fin(1))) == a0());
    CHECK(profile_total(profile({{fin(2), 1}}, RangeProfile::Tail::Cofinal, aw())) == aw());
}

TEST_CASE("profile_ic examples") {
    CHECK(profile_ic(profile({{a0(), 1}})) == fin(0));
    // Suffix sums of (2,2,2,1,1,...): every cut inside the tail gives aleph_0,
    // cuts in the prefix only add on top.
    CHECK(profile_ic(profile({{fin(2), 3}}, RangeProfile::Tail::Repeat, fin(1))) == a0());
    // Cutting right after the aleph_1 block leaves the (1,1,...) tail: aleph_0.
    CHECK(profile_ic(profile({{a1(), 1}}, RangeProfile::Tail::Repeat, fin(1))) == a0());
}

TEST_CASE("profile_ic equals the suffix-sum oracle over the universe") {
    for (const auto& p : profile_universe()) CHECK(profile_ic(p) == ic_oracle(p));
}

TEST_CASE("profile_b examples") {
    CHECK(profile_b(profile({{a0(), 1}})) == 1);
    CHECK(profile_b(profile({}, RangeProfile::Tail::Repeat, fin(1))) == 0);
    CHECK(profile_b(profile({}, RangeProfile::Tail::Cofinal, aw())) == 0);
    CHECK(profile_b(profile({})) == 1);  // the zero space contains itself
}

TEST_CASE("contains_complete_subspace_of_dim examples") {
    CHECK(contains_complete_subspace_of_dim(profile({{a0(), 1}}), a0()));
    CHECK(!contains_complete_subspace_of_dim(profile({}, RangeProfile::Tail::Repeat, fin(1)), a0()));
    CHECK(contains_complete_subspace_of_dim(profile({}, RangeProfile::Tail::Repeat, fin(1)), fin(5)));
}

TEST_CASE("canonicalization merges, drops and validates") {
    const RangeProfile merged = profile_canonicalize(profile({{fin(2), 1}, {fin(2), 2}}));
    CHECK(merged.blocks == std::vector<RangeProfile::Block>{{fin(2), 3}});

    const RangeProfile dropped = profile_canonicalize(profile({{fin(0), 5}, {fin(3), 1}}));
    CHECK(dropped.blocks == std::vector<RangeProfile::Block>{{fin(3), 1}});

    CHECK_THROWS_AS(profile_canonicalize(profile({}, RangeProfile::Tail::Cofinal, a1())),
                    InputError);
    CHECK_THROWS_AS(profile_canonicalize(profile({}, RangeProfile::Tail::Cofinal, a0())),
                    InputError);

    // Repeat of the zero summand is the zero tail.
    const RangeProfile zeroed = profile_canonicalize(profile({}, RangeProfile::Tail::Repeat, fin(0)));
    CHECK(zeroed.tail == RangeProfile::Tail::Zero);
}

TEST_CASE("canonicalization is idempotent and preserves the indices") {
    for (const auto& p : profile_universe()) {
        const RangeProfile c = profile_canonicalize(p);
        CHECK(profile_canonicalize(c) == c);
        CHECK(profile_total(c) == profile_total(p));
        CHECK(profile_ic(c) == profile_ic(p));
        CHECK(profile_b(c) == profile_b(p));
    }
}

TEST_CASE("reordering blocks never changes the indices") {
    for (const auto& p : profile_universe()) {
        if (p.blocks.size() < 2) continue;
        RangeProfile swapped = p;
        std::swap(swapped.blocks.front(), swapped.blocks.back());
        CHECK(profile_total(swapped) == profile_total(p));
        CHECK(profile_ic(swapped) == profile_ic(p));
        CHECK(profile_b(swapped) == profile_b(p));
    }
}

TEST_CASE("index constraints over the universe") {
    for (const auto& p : profile_universe()) {
        const ProfileIndices idx = profile_indices(p);

        // ic = 0 exactly for a zero tail, otherwise infinite.
        CHECK((idx.ic == fin(0)) == (p.tail == RangeProfile::Tail::Zero));
        CHECK((idx.ic.is_zero() || idx.ic >= a0()));
        CHECK(idx.ic <= idx.total);

        // incomplete below the full dimension forces an attained block
        if (idx.ic < idx.total) CHECK(idx.b == 1);

        // b = 0 only at limit-of-countable-cofinality totals (aleph_0 included)
        if (idx.b == 0)
            CHECK((idx.total == a0() || is_limit_aleph_countable_cofinality(idx.total)));
    }
}

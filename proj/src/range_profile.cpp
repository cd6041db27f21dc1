#include "oporbits/range_profile.hpp"

namespace oporbits {

RangeProfile profile_canonicalize(const RangeProfile& p) {
    RangeProfile out;
    out.tail = p.tail;
    out.tail_value = p.tail_value;

    for (const auto& blk : p.blocks) {
        if (blk.count == 0 || blk.value.is_zero()) continue;
        if (!out.blocks.empty() && out.blocks.back().value == blk.value) {
            std::uint64_t merged = 0;
            if (__builtin_add_overflow(out.blocks.back().count, blk.count, &merged))
                throw std::overflow_error("profile block count overflow");
            out.blocks.back().count = merged;
        } else {
            out.blocks.push_back(blk);
        }
    }

    switch (p.tail) {
        case RangeProfile::Tail::Zero:
            out.tail_value = Cardinal::finite(0);
            break;
        case RangeProfile::Tail::Repeat:
            if (p.tail_value.is_zero()) {
                // omega repetitions of the zero summand: same range as a Zero tail.
                out.tail = RangeProfile::Tail::Zero;
                out.tail_value = Cardinal::finite(0);
            }
            break;
        case RangeProfile::Tail::Cofinal:
            if (!is_limit_aleph_countable_cofinality(p.tail_value))
                throw InputError("profile.tail: Cofinal supremum must be a limit aleph of "
                                 "countable cofinality, got " + format_cardinal(p.tail_value));
            break;
    }
    return out;
}

Cardinal profile_total(const RangeProfile& p) {
    std::vector<SumBlock> stream;
    stream.reserve(p.blocks.size() + 1);
    for (const auto& blk : p.blocks) stream.push_back({blk.value, blk.count, false});
    switch (p.tail) {
        case RangeProfile::Tail::Zero:
            break;
        case RangeProfile::Tail::Repeat:
            stream.push_back({p.tail_value, 0, true});
            break;
        case RangeProfile::Tail::Cofinal:
            // The strictly increasing sequence sums to its supremum.
            stream.push_back({p.tail_value, 1, false});
            break;
    }
    return card_sum_stream(stream);
}

Cardinal profile_ic(const RangeProfile& p) {
    // Every suffix inside an infinite tail sums to the tail's own total;
    // prefixes only add. A Zero tail admits an empty suffix.
    switch (p.tail) {
        case RangeProfile::Tail::Zero:
            return Cardinal::finite(0);
        case RangeProfile::Tail::Repeat:
            return std::max(Cardinal::aleph0(), p.tail_value);
        case RangeProfile::Tail::Cofinal:
            return p.tail_value;
    }
    return Cardinal::finite(0);
}

int profile_b(const RangeProfile& p) {
    const Cardinal total = profile_total(p);
    if (total.is_finite()) return 1;  // finite ranges are complete
    for (const auto& blk : p.blocks)
        if (blk.value == total) return 1;
    if (p.tail == RangeProfile::Tail::Repeat && p.tail_value == total) return 1;
    return 0;
}

ProfileIndices profile_indices(const RangeProfile& p) {
    return ProfileIndices{profile_total(p), profile_ic(p), profile_b(p)};
}

bool contains_complete_subspace_of_dim(const RangeProfile& p, const Cardinal& beta) {
    const Cardinal total = profile_total(p);
    if (beta < total) return true;
    if (beta == total) return profile_b(p) == 1;
    return false;
}

}  // namespace oporbits

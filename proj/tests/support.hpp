#pragma once

#include <vector>

#include "oporbits/descriptor.hpp"

namespace oporbits::testsupport {

inline Cardinal fin(std::uint64_t n) { return Cardinal::finite(n); }
inline Cardinal a0() { return Cardinal::aleph0(); }
inline Cardinal a1() { return Cardinal::aleph(1); }
inline Cardinal a2() { return Cardinal::aleph(2); }
inline Cardinal aw() { return Cardinal::aleph_omega(); }

inline RangeProfile profile(std::vector<RangeProfile::Block> blocks,
                            RangeProfile::Tail tail = RangeProfile::Tail::Zero,
                            Cardinal tail_value = Cardinal::finite(0)) {
    RangeProfile p;
    p.blocks = std::move(blocks);
    p.tail = tail;
    p.tail_value = tail_value;
    return p;
}

/// Identity on a separable space: closed full range.
inline OperatorDescriptor identity_separable() {
    return make_descriptor(fin(0), fin(0), profile({{a0(), 1}}));
}

/// Injective dense-range compact operator on a separable space.
inline OperatorDescriptor compact_dense_separable() {
    return make_descriptor(fin(0), fin(0),
                           profile({}, RangeProfile::Tail::Repeat, fin(1)));
}

/// The unilateral shift: isometry with one-dimensional codefect.
inline OperatorDescriptor shift() {
    return make_descriptor(fin(0), fin(1), profile({{a0(), 1}}));
}

/// Zero operator between spaces of the given dimensions.
inline OperatorDescriptor zero_operator(Cardinal dim_h, Cardinal dim_k) {
    return make_descriptor(dim_h, dim_k, profile({}));
}

/// Finite-rank descriptor on given ambient dimensions.
inline OperatorDescriptor finite_rank(std::uint64_t rank, Cardinal dim_h, Cardinal dim_k) {
    RangeProfile p = profile(rank > 0 ? std::vector<RangeProfile::Block>{{fin(rank), 1}}
                                      : std::vector<RangeProfile::Block>{});
    Cardinal nullity = card_sub(dim_h, fin(rank)).magnitude();
    Cardinal codefect = card_sub(dim_k, fin(rank)).magnitude();
    return make_descriptor(nullity, codefect, std::move(p));
}

/// Every descriptor in the bounded verification universe:
/// nullity/codefect in {0,1,2,aleph_0,aleph_1}, profiles with at most two
/// blocks over {1,2,aleph_0,aleph_1}, all three tail kinds.
std::vector<OperatorDescriptor> descriptor_universe();

inline std::vector<OperatorDescriptor> descriptor_universe() {
    const std::vector<Cardinal> corner = {fin(0), fin(1), fin(2), a0(), a1()};
    const std::vector<Cardinal> values = {fin(1), fin(2), a0(), a1()};

    std::vector<RangeProfile> profiles;
    profiles.push_back(profile({}));
    std::vector<std::vector<RangeProfile::Block>> shapes;
    shapes.push_back({});
    for (const Cardinal& v : values) shapes.push_back({{v, 1}});
    for (const Cardinal& v : values)
        for (const Cardinal& w : values) shapes.push_back({{v, 1}, {w, 1}});

    std::vector<RangeProfile> all;
    for (const auto& shape : shapes) {
        all.push_back(profile(shape));
        for (const Cardinal& v : values)
            all.push_back(profile(shape, RangeProfile::Tail::Repeat, v));
        all.push_back(profile(shape, RangeProfile::Tail::Cofinal, aw()));
    }

    std::vector<OperatorDescriptor> out;
    for (const Cardinal& nullity : corner)
        for (const Cardinal& codefect : corner)
            for (const RangeProfile& p : all)
                out.push_back(make_descriptor(nullity, codefect, p));
    return out;
}

}  // namespace oporbits::testsupport

#include "oporbits/descriptor.hpp"

namespace oporbits {

OperatorDescriptor make_descriptor(Cardinal nullity, Cardinal codefect, RangeProfile profile) {
    return OperatorDescriptor{std::move(nullity), std::move(codefect),
                              profile_canonicalize(profile)};
}

IndexVector indices(const OperatorDescriptor& a) {
    const ProfileIndices p = profile_indices(a.profile);
    return IndexVector{p.total, card_add(a.nullity, p.ic), card_add(a.codefect, p.ic), p.b};
}

Cardinal dim_domain(const OperatorDescriptor& a) {
    return card_add(a.nullity, profile_total(a.profile));
}

Cardinal dim_codomain(const OperatorDescriptor& a) {
    return card_add(a.codefect, profile_total(a.profile));
}

OperatorDescriptor adjoint(const OperatorDescriptor& a) {
    return OperatorDescriptor{a.codefect, a.nullity, a.profile};
}

Cardinal iota_R(const OperatorDescriptor& a) {
    const IndexVector v = indices(a);
    return v.iota_b == 0 ? v.iota_r : successor(v.iota_r);
}

Cardinal iota_m(const OperatorDescriptor& a) {
    const IndexVector v = indices(a);
    return std::min(v.iota_i, v.iota_f);
}

SignedIndex ind(const OperatorDescriptor& a) {
    const IndexVector v = indices(a);
    return card_sub(v.iota_i, v.iota_f);
}

bool is_compact(const OperatorDescriptor& a) {
    return !contains_complete_subspace_of_dim(a.profile, Cardinal::aleph0());
}

}  // namespace oporbits

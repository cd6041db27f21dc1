#pragma once

#include "oporbits/cardinal.hpp"
#include "oporbits/range_profile.hpp"

namespace oporbits {

/// Symbolic model of a bounded operator A : H -> K. Ambient dimensions are
/// derived, never stored: dim H = nullity + iota_r, dim K = codefect + iota_r.
struct OperatorDescriptor {
    Cardinal nullity;      // dim N(A)
    Cardinal codefect;     // dim (K minus closure of R(A))
    RangeProfile profile;  // decomposition of R(A), canonical

    friend bool operator==(const OperatorDescriptor&, const OperatorDescriptor&) = default;
};

/// The four indices of an operator.
struct IndexVector {
    Cardinal iota_r;  // dimension of the range closure
    Cardinal iota_i;  // nullity + IC
    Cardinal iota_f;  // codefect + IC
    int iota_b;       // binary index

    friend bool operator==(const IndexVector&, const IndexVector&) = default;
};

/// Canonicalizes the profile; throws InputError on malformed profiles.
OperatorDescriptor make_descriptor(Cardinal nullity, Cardinal codefect, RangeProfile profile);

IndexVector indices(const OperatorDescriptor& a);

Cardinal dim_domain(const OperatorDescriptor& a);
Cardinal dim_codomain(const OperatorDescriptor& a);

/// Swaps nullity and codefect; the range profile is shared by an operator and
/// its adjoint (their ranges are linearly isometric).
OperatorDescriptor adjoint(const OperatorDescriptor& a);

/// Least cardinal alpha such that the range contains no complete subspace of
/// dimension alpha: iota_r itself when iota_b = 0, its successor otherwise.
Cardinal iota_R(const OperatorDescriptor& a);

/// min(iota_i, iota_f).
Cardinal iota_m(const OperatorDescriptor& a);

/// Extended index iota_i - iota_f; undefined when both are equal and infinite.
SignedIndex ind(const OperatorDescriptor& a);

/// True iff the range contains no infinite-dimensional complete subspace.
bool is_compact(const OperatorDescriptor& a);

}  // namespace oporbits

#pragma once

#include "oporbits/descriptor.hpp"

namespace oporbits {

/// A query against the index region of value gamma inside operators on a
/// space of the given infinite dimension. gamma must be defined and satisfy
/// |gamma| <= ambient_dim.
class IndexRegionQuery {
public:
    IndexRegionQuery(SignedIndex gamma, Cardinal ambient_dim);
    const SignedIndex& gamma() const { return gamma_; }
    const Cardinal& ambient_dim() const { return ambient_; }

private:
    SignedIndex gamma_;
    Cardinal ambient_;
};

/// Handle of the closed two-sided ideal J_alpha inside the operators on a
/// space of dimension ambient_dim: alpha infinite, alpha <= ambient_dim.
/// The ideal classification holds for nonseparable ambient spaces; the
/// separable handle (ambient aleph_0, alpha aleph_0) is admitted as the
/// ideal of compact operators.
class IdealHandle {
public:
    IdealHandle(Cardinal alpha, Cardinal ambient_dim);
    const Cardinal& alpha() const { return alpha_; }
    const Cardinal& ambient_dim() const { return ambient_; }

private:
    Cardinal alpha_;
    Cardinal ambient_;
};

enum class IdealOrder { Less, Equal, Greater };

/// ind(A) undefined. Precondition: dim H = dim K infinite.
bool uind_member(const OperatorDescriptor& a);

/// ind(A) defined and equal to gamma. Precondition: ambient dims match the query.
bool ind_region_member(const OperatorDescriptor& a, const IndexRegionQuery& q);

/// Membership in the norm closure of the gamma region: the region itself plus
/// the undefined-index operators with iota_m >= |gamma|.
bool ind_closure_member(const OperatorDescriptor& a, const IndexRegionQuery& q);

/// Boundary of the gamma region: undefined index with iota_m >= |gamma|.
bool ind_boundary_member(const OperatorDescriptor& a, const IndexRegionQuery& q);

/// ind defined with finite or aleph_0 magnitude; such operators have closed
/// range. Precondition: dim H = dim K infinite.
bool semi_fredholm(const OperatorDescriptor& a);

/// The open dense cut of the gamma region: members with iota_m < m.
/// Precondition on m: m >= 1.
bool ind_cut_member(const OperatorDescriptor& a, const IndexRegionQuery& q, const Cardinal& m);

/// The orbit closure of A has nonempty interior iff A or its adjoint is an
/// epimorphism: ind defined and iota_m = 0. Precondition: square, infinite.
bool closure_has_interior(const OperatorDescriptor& a);

/// Membership in J_alpha: iota_r < alpha, or iota_r = alpha with iota_b = 0.
/// Precondition: dim H = dim K = ambient_dim of the handle.
bool ideal_member(const OperatorDescriptor& a, const IdealHandle& j);

/// Containment order of ideals: J_alpha <= J_beta iff alpha <= beta.
/// Precondition: equal ambient dims.
IdealOrder ideal_compare(const IdealHandle& j1, const IdealHandle& j2);

}  // namespace oporbits

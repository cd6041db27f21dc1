#include "oporbits/fredholm.hpp"

namespace oporbits {

namespace {

void require_square_infinite(const OperatorDescriptor& a, const char* op) {
    const Cardinal h = dim_domain(a), k = dim_codomain(a);
    if (h != k)
        throw PreconditionError(std::string(op) + ": requires dim H = dim K, got " +
                                format_cardinal(h) + " and " + format_cardinal(k));
    if (h.is_finite())
        throw PreconditionError(std::string(op) + ": requires an infinite-dimensional space");
}

void require_ambient(const OperatorDescriptor& a, const Cardinal& ambient, const char* op) {
    require_square_infinite(a, op);
    if (dim_domain(a) != ambient)
        throw PreconditionError(std::string(op) + ": operator acts on dimension " +
                                format_cardinal(dim_domain(a)) + ", query ambient is " +
                                format_cardinal(ambient));
}

}  // namespace

IndexRegionQuery::IndexRegionQuery(SignedIndex gamma, Cardinal ambient_dim)
    : gamma_(std::move(gamma)), ambient_(std::move(ambient_dim)) {
    if (!gamma_.is_defined())
        throw PreconditionError("IndexRegionQuery: gamma must be a defined signed cardinal");
    if (ambient_.is_finite())
        throw PreconditionError("IndexRegionQuery: ambient dimension must be infinite");
    if (!(gamma_.magnitude() <= ambient_))
        throw PreconditionError("IndexRegionQuery: |gamma| exceeds the ambient dimension");
}

IdealHandle::IdealHandle(Cardinal alpha, Cardinal ambient_dim)
    : alpha_(std::move(alpha)), ambient_(std::move(ambient_dim)) {
    if (alpha_.is_finite())
        throw PreconditionError("IdealHandle: alpha must be infinite");
    if (ambient_.is_finite())
        throw PreconditionError("IdealHandle: ambient dimension must be infinite");
    if (!(alpha_ <= ambient_))
        throw PreconditionError("IdealHandle: alpha exceeds the ambient dimension");
}

bool uind_member(const OperatorDescriptor& a) {
    require_square_infinite(a, "uind_member");
    return !ind(a).is_defined();
}

bool ind_region_member(const OperatorDescriptor& a, const IndexRegionQuery& q) {
    require_ambient(a, q.ambient_dim(), "ind_region_member");
    const SignedIndex i = ind(a);
    return i.is_defined() && i == q.gamma();
}

bool ind_closure_member(const OperatorDescriptor& a, const IndexRegionQuery& q) {
    require_ambient(a, q.ambient_dim(), "ind_closure_member");
    if (ind_region_member(a, q)) return true;
    return uind_member(a) && iota_m(a) >= q.gamma().magnitude();
}

bool ind_boundary_member(const OperatorDescriptor& a, const IndexRegionQuery& q) {
    require_ambient(a, q.ambient_dim(), "ind_boundary_member");
    return uind_member(a) && iota_m(a) >= q.gamma().magnitude();
}

bool semi_fredholm(const OperatorDescriptor& a) {
    require_square_infinite(a, "semi_fredholm");
    const SignedIndex i = ind(a);
    if (!i.is_defined()) return false;
    return i.magnitude() <= Cardinal::aleph0();
}

bool ind_cut_member(const OperatorDescriptor& a, const IndexRegionQuery& q, const Cardinal& m) {
    if (m.is_zero()) throw PreconditionError("ind_cut_member: m must be >= 1");
    return ind_region_member(a, q) && iota_m(a) < m;
}

bool closure_has_interior(const OperatorDescriptor& a) {
    require_square_infinite(a, "closure_has_interior");
    return ind(a).is_defined() && iota_m(a).is_zero();
}

bool ideal_member(const OperatorDescriptor& a, const IdealHandle& j) {
    require_ambient(a, j.ambient_dim(), "ideal_member");
    const IndexVector v = indices(a);
    return v.iota_r < j.alpha() || (v.iota_r == j.alpha() && v.iota_b == 0);
}

IdealOrder ideal_compare(const IdealHandle& j1, const IdealHandle& j2) {
    if (j1.ambient_dim() != j2.ambient_dim())
        throw PreconditionError("ideal_compare: handles live in different ambient dimensions");
    if (j1.alpha() < j2.alpha()) return IdealOrder::Less;
    if (j1.alpha() == j2.alpha()) return IdealOrder::Equal;
    return IdealOrder::Greater;
}

}  // namespace oporbits

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oporbits/descriptor.hpp"

namespace oporbits {

/// The triple (dim(H minus V), dim V, dim(K minus A(V))) attached to a closed
/// subspace V on which A is bounded below.
struct LambdaTriple {
    Cardinal left;
    Cardinal mid;
    Cardinal right;

    friend std::strong_ordering operator<=>(const LambdaTriple&, const LambdaTriple&) = default;
    friend bool operator==(const LambdaTriple&, const LambdaTriple&) = default;
};

/// Outcome of a closure-membership query. When the answer is negative,
/// `failed_condition` names the first orbit-closure condition that fails,
/// in the fixed order (a), (b), (c). When positive and the membership was
/// decided through the shift-cardinal equation, `alpha` carries its solution
/// set for reporting.
struct OrbitVerdict {
    bool member = false;
    std::optional<char> failed_condition;          // 'a', 'b' or 'c'
    std::optional<AlphaSolutionSet> alpha;         // witness for condition (c)
};

enum class SeparableClass { FiniteRank, CompactInfRank, NonSemiFredholm, SemiFredholm };

struct SeparableClassification {
    SeparableClass kind;
    Cardinal rank;        // FiniteRank payload
    SignedIndex index;    // SemiFredholm payload
    Cardinal min_index;   // SemiFredholm payload: iota_m
};

/// Membership of a triple in Lambda(A): t = (iota_i + nu, mu, iota_f + nu)
/// for cardinals mu, nu with mu + nu = iota_r, and mu < iota_r when iota_b = 0.
bool lambda_member(const OperatorDescriptor& a, const LambdaTriple& t);

/// All triples of Lambda(A) with every coordinate in `universe`, sorted.
std::vector<LambdaTriple> lambda_enumerate(const OperatorDescriptor& a,
                                           const std::vector<Cardinal>& universe);

/// The standard verification universe:
/// {0, 1, 2, 3, aleph_0, aleph_1, aleph_2, aleph_w, aleph_w+1}.
std::vector<Cardinal> default_universe();

/// Decides C in the closure of the two-sided invertible orbit of A by the
/// three index conditions:
///   (a) iota_r(C) <= iota_r(A),
///   (b) if iota_b(A) = 0 and iota_b(C) = 1 then iota_r(C) < iota_r(A),
///   (c) some cardinal alpha solves iota_i(C) = iota_i(A) + alpha and
///       iota_f(C) = iota_f(A) + alpha
///       (automatic when iota_i(C) = dim H and iota_f(C) = dim K).
/// Precondition: A and C share both ambient dimensions.
OrbitVerdict closure_gg_contains(const OperatorDescriptor& a, const OperatorDescriptor& c);

/// The slice of Lambda(A) inside universe^3, produced by the closed-form
/// case formulas (finite range / binary index 0 / attained infinite range)
/// with no use of the equation solver. Sorted.
std::vector<LambdaTriple> lambda_enumerate_casewise(const OperatorDescriptor& a,
                                                    const std::vector<Cardinal>& universe);

/// Independent route to the same question: inclusion of the enumerated
/// Lambda sets, built from the closed-form case formulas rather than from
/// the equation solver. Correct whenever `universe` is rich enough to
/// witness every inclusion failure (see README).
bool closure_gg_contains_via_lambda(const OperatorDescriptor& a, const OperatorDescriptor& c,
                                    const std::vector<Cardinal>& universe);

/// Closure equality: all four indices agree. Precondition: shared ambient dims.
bool closure_gg_equal(const OperatorDescriptor& a, const OperatorDescriptor& b);

/// Membership in the norm closure of the invertible group: iota_i = iota_f.
/// Precondition: dim H = dim K.
bool invertible_closure_member(const OperatorDescriptor& a);

/// The closure class of A on a separable infinite-dimensional space.
/// Precondition: dim H = dim K = aleph_0.
SeparableClassification classify_separable(const OperatorDescriptor& a);

/// True iff the open-neighbourhood property is asserted for A, i.e. iota_b = 1:
/// then every T close enough to A has A in the closure of its orbit.
bool gg_open_neighbourhood_claim(const OperatorDescriptor& a);

std::string format_lambda_triple(const LambdaTriple& t);

}  // namespace oporbits

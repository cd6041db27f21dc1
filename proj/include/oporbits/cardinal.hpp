#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oporbits/errors.hpp"

namespace oporbits {

/// Ordinal below omega^omega in Cantor normal form:
/// omega^e1*c1 + ... + omega^ek*ck + constant, with exponents strictly
/// decreasing and all exponents/coefficients >= 1. Every limit ordinal
/// representable here has cofinality omega.
struct OrdinalCNF {
    /// (exponent, coefficient) pairs, exponents strictly decreasing, both >= 1.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> terms;
    std::uint64_t constant = 0;

    static OrdinalCNF finite(std::uint64_t n) { return OrdinalCNF{{}, n}; }
    static OrdinalCNF omega() { return OrdinalCNF{{{1, 1}}, 0}; }

    bool is_zero() const { return terms.empty() && constant == 0; }
    bool is_finite() const { return terms.empty(); }
    /// Limit ordinal: nonzero with no trailing finite part.
    bool is_limit() const { return !terms.empty() && constant == 0; }

    OrdinalCNF successor() const;

    /// Throws InputError if the CNF shape invariants are violated.
    void validate() const;

    friend std::strong_ordering operator<=>(const OrdinalCNF& a, const OrdinalCNF& b) {
        // CNF order is lexicographic on the term list, then on the constant.
        if (auto c = a.terms <=> b.terms; c != 0) return c;
        return a.constant <=> b.constant;
    }
    friend bool operator==(const OrdinalCNF&, const OrdinalCNF&) = default;
};

/// A cardinal: a natural number or an aleph indexed by an OrdinalCNF.
class Cardinal {
public:
    Cardinal() : infinite_(false), n_(0) {}

    static Cardinal finite(std::uint64_t n) { return Cardinal(n); }
    static Cardinal aleph(OrdinalCNF index);
    static Cardinal aleph(std::uint64_t finite_index) {
        return aleph(OrdinalCNF::finite(finite_index));
    }
    static Cardinal aleph0() { return aleph(OrdinalCNF::finite(0)); }
    static Cardinal aleph_omega() { return aleph(OrdinalCNF::omega()); }

    bool is_finite() const { return !infinite_; }
    bool is_infinite() const { return infinite_; }
    bool is_zero() const { return !infinite_ && n_ == 0; }

    std::uint64_t finite_value() const;
    const OrdinalCNF& aleph_index() const;

    friend std::strong_ordering operator<=>(const Cardinal& a, const Cardinal& b) {
        if (a.infinite_ != b.infinite_) return a.infinite_ <=> b.infinite_;
        if (!a.infinite_) return a.n_ <=> b.n_;
        return a.index_ <=> b.index_;
    }
    friend bool operator==(const Cardinal& a, const Cardinal& b) {
        return (a <=> b) == 0;
    }

private:
    explicit Cardinal(std::uint64_t n) : infinite_(false), n_(n) {}
    bool infinite_;
    std::uint64_t n_;
    OrdinalCNF index_;  // meaningful only when infinite_
};

/// Value of the extended index: a cardinal, the negative of a nonzero
/// cardinal, or undefined. Plus(0) is the unique zero.
class SignedIndex {
public:
    enum class Kind { Plus, Minus, Undefined };

    SignedIndex() : kind_(Kind::Undefined) {}
    static SignedIndex plus(Cardinal c) { return SignedIndex(Kind::Plus, std::move(c)); }
    static SignedIndex minus(Cardinal c);
    static SignedIndex undefined() { return SignedIndex(); }
    static SignedIndex zero() { return plus(Cardinal::finite(0)); }

    Kind kind() const { return kind_; }
    bool is_defined() const { return kind_ != Kind::Undefined; }
    /// |plus(c)| = |minus(c)| = c; precondition: defined.
    const Cardinal& magnitude() const;

    friend bool operator==(const SignedIndex& a, const SignedIndex& b) {
        if (a.kind_ != b.kind_) return false;
        if (a.kind_ == Kind::Undefined) return true;
        return a.mag_ == b.mag_;
    }

private:
    SignedIndex(Kind k, Cardinal c) : kind_(k), mag_(std::move(c)) {}
    Kind kind_;
    Cardinal mag_;
};

/// Solution set of a cardinal equation x + alpha = y: empty, a single point,
/// or a closed interval [lo, hi] of cardinals.
class AlphaSolutionSet {
public:
    enum class Kind { Empty, Point, ClosedInterval };

    static AlphaSolutionSet empty() { return AlphaSolutionSet(); }
    static AlphaSolutionSet point(Cardinal c) {
        return AlphaSolutionSet(Kind::Point, c, c);
    }
    static AlphaSolutionSet closed_interval(Cardinal lo, Cardinal hi);

    Kind kind() const { return kind_; }
    bool is_empty() const { return kind_ == Kind::Empty; }
    bool contains(const Cardinal& c) const;
    /// Precondition: nonempty.
    const Cardinal& min_element() const;
    const Cardinal& max_element() const;

    AlphaSolutionSet intersect(const AlphaSolutionSet& other) const;

    friend bool operator==(const AlphaSolutionSet& a, const AlphaSolutionSet& b) {
        if (a.kind_ != b.kind_) return false;
        if (a.kind_ == Kind::Empty) return true;
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }

private:
    AlphaSolutionSet() : kind_(Kind::Empty) {}
    AlphaSolutionSet(Kind k, Cardinal lo, Cardinal hi)
        : kind_(k), lo_(std::move(lo)), hi_(std::move(hi)) {}
    Kind kind_;
    Cardinal lo_, hi_;
};

// ---- Arithmetic ----

/// Cardinal sum: natural sum when both finite, max otherwise.
Cardinal card_add(const Cardinal& a, const Cardinal& b);

/// Signed cardinal difference a - b. Undefined exactly when a = b >= aleph_0;
/// the dominant infinite side wins with its sign.
SignedIndex card_sub(const Cardinal& a, const Cardinal& b);

/// One summand of a cardinal series: `value` repeated `count` times, where
/// count is a natural number or omega (count_omega = true).
struct SumBlock {
    Cardinal value;
    std::uint64_t count = 1;
    bool count_omega = false;
};

/// Sum of a countable series given as repetition blocks. Omega-count blocks
/// of value 0 are dropped; an omega-count block of value v >= 1 contributes
/// max(aleph_0, v).
Cardinal card_sum_stream(const std::vector<SumBlock>& blocks);

/// Direct cardinal successor: n -> n+1, aleph_i -> aleph_{i+1}.
Cardinal successor(const Cardinal& a);

/// True iff a is an aleph whose index is a limit ordinal. All limit ordinals
/// representable in OrdinalCNF have cofinality omega.
bool is_limit_aleph_countable_cofinality(const Cardinal& a);

/// Exact solution set of x + alpha = y.
AlphaSolutionSet solve_add(const Cardinal& x, const Cardinal& y);

// ---- Text grammar ----
//
//   cardinal := natural | "aleph_" ordinal
//   ordinal  := term ("+" term)* ;  term := "w" ("^" natural)? ("*" natural)? | natural
//
// Examples: "3", "aleph_0", "aleph_w", "aleph_w+2", "aleph_w*2".

std::string format_ordinal(const OrdinalCNF& o);
std::string format_cardinal(const Cardinal& c);
/// "-" prefix for Minus, "undefined" for Undefined.
std::string format_signed_index(const SignedIndex& s);
std::string format_solution_set(const AlphaSolutionSet& s);

OrdinalCNF parse_ordinal(const std::string& text);
Cardinal parse_cardinal(const std::string& text);
SignedIndex parse_signed_index(const std::string& text);

}  // namespace oporbits

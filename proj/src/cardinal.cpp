#include "oporbits/cardinal.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace oporbits {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("natural overflow in cardinal sum");
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("natural overflow in cardinal product");
    return r;
}

}  // namespace

OrdinalCNF OrdinalCNF::successor() const {
    OrdinalCNF s = *this;
    s.constant = checked_add(s.constant, 1);
    return s;
}

void OrdinalCNF::validate() const {
    std::uint64_t prev = 0;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (e == 0) throw InputError("ordinal: omega-term exponent must be >= 1");
        if (c == 0) throw InputError("ordinal: omega-term coefficient must be >= 1");
        if (!first && e >= prev) throw InputError("ordinal: exponents must be strictly decreasing");
        prev = e;
        first = false;
    }
}

Cardinal Cardinal::aleph(OrdinalCNF index) {
    index.validate();
    Cardinal c;
    c.infinite_ = true;
    c.index_ = std::move(index);
    return c;
}

std::uint64_t Cardinal::finite_value() const {
    if (infinite_) throw std::logic_error("finite_value() on an infinite cardinal");
    return n_;
}

const OrdinalCNF& Cardinal::aleph_index() const {
    if (!infinite_) throw std::logic_error("aleph_index() on a finite cardinal");
    return index_;
}

SignedIndex SignedIndex::minus(Cardinal c) {
    if (c.is_zero()) throw std::logic_error("Minus(0) is forbidden; Plus(0) is the unique zero");
    return SignedIndex(Kind::Minus, std::move(c));
}

const Cardinal& SignedIndex::magnitude() const {
    if (kind_ == Kind::Undefined) throw std::logic_error("magnitude() of an undefined index");
    return mag_;
}

AlphaSolutionSet AlphaSolutionSet::closed_interval(Cardinal lo, Cardinal hi) {
    if (lo > hi) throw std::logic_error("ClosedInterval requires lo <= hi");
    if (lo == hi) return point(lo);
    return AlphaSolutionSet(Kind::ClosedInterval, std::move(lo), std::move(hi));
}

bool AlphaSolutionSet::contains(const Cardinal& c) const {
    switch (kind_) {
        case Kind::Empty: return false;
        case Kind::Point: return c == lo_;
        case Kind::ClosedInterval: return lo_ <= c && c <= hi_;
    }
    return false;
}

const Cardinal& AlphaSolutionSet::min_element() const {
    if (kind_ == Kind::Empty) throw std::logic_error("min_element() of empty solution set");
    return lo_;
}

const Cardinal& AlphaSolutionSet::max_element() const {
    if (kind_ == Kind::Empty) throw std::logic_error("max_element() of empty solution set");
    return hi_;
}

AlphaSolutionSet AlphaSolutionSet::intersect(const AlphaSolutionSet& other) const {
    if (is_empty() || other.is_empty()) return empty();
    const Cardinal lo = std::max(lo_, other.lo_);
    const Cardinal hi = std::min(hi_, other.hi_);
    if (lo > hi) return empty();
    return closed_interval(lo, hi);
}

Cardinal card_add(const Cardinal& a, const Cardinal& b) {
    if (a.is_finite() && b.is_finite())
        return Cardinal::finite(checked_add(a.finite_value(), b.finite_value()));
    return std::max(a, b);
}

SignedIndex card_sub(const Cardinal& a, const Cardinal& b) {
    if (a.is_finite() && b.is_finite()) {
        const std::uint64_t x = a.finite_value(), y = b.finite_value();
        if (x >= y) return SignedIndex::plus(Cardinal::finite(x - y));
        return SignedIndex::minus(Cardinal::finite(y - x));
    }
    if (a == b) return SignedIndex::undefined();  // a = b >= aleph_0: outside the domain
    if (a > b) return SignedIndex::plus(a);       // a infinite here
    return SignedIndex::minus(b);                 // b infinite here
}

Cardinal card_sum_stream(const std::vector<SumBlock>& blocks) {
    Cardinal total = Cardinal::finite(0);
    for (const SumBlock& blk : blocks) {
        Cardinal contribution = Cardinal::finite(0);
        if (blk.count_omega) {
            if (blk.value.is_zero()) continue;  // zero summands are dropped
            contribution = std::max(Cardinal::aleph0(), blk.value);
        } else if (blk.count == 0 || blk.value.is_zero()) {
            continue;
        } else if (blk.value.is_finite()) {
            contribution = Cardinal::finite(checked_mul(blk.value.finite_value(), blk.count));
        } else {
            contribution = blk.value;
        }
        total = card_add(total, contribution);
    }
    return total;
}

Cardinal successor(const Cardinal& a) {
    if (a.is_finite()) return Cardinal::finite(checked_add(a.finite_value(), 1));
    return Cardinal::aleph(a.aleph_index().successor());
}

bool is_limit_aleph_countable_cofinality(const Cardinal& a) {
    return a.is_infinite() && a.aleph_index().is_limit();
}

AlphaSolutionSet solve_add(const Cardinal& x, const Cardinal& y) {
    if (y < x) return AlphaSolutionSet::empty();
    if (x.is_finite()) {
        if (y.is_finite())
            return AlphaSolutionSet::point(Cardinal::finite(y.finite_value() - x.finite_value()));
        return AlphaSolutionSet::point(y);
    }
    if (y > x) return AlphaSolutionSet::point(y);
    // x = y infinite: absorption makes every alpha <= x a solution.
    return AlphaSolutionSet::closed_interval(Cardinal::finite(0), x);
}

// ---- Text grammar ----

std::string format_ordinal(const OrdinalCNF& o) {
    if (o.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : o.terms) {
        if (!first) out << "+";
        out << "w";
        if (e != 1) out << "^" << e;
        if (c != 1) out << "*" << c;
        first = false;
    }
    if (o.constant != 0) {
        if (!first) out << "+";
        out << o.constant;
    }
    return out.str();
}

std::string format_cardinal(const Cardinal& c) {
    if (c.is_finite()) return std::to_string(c.finite_value());
    return "aleph_" + format_ordinal(c.aleph_index());
}

std::string format_signed_index(const SignedIndex& s) {
    switch (s.kind()) {
        case SignedIndex::Kind::Undefined: return "undefined";
        case SignedIndex::Kind::Plus: return format_cardinal(s.magnitude());
        case SignedIndex::Kind::Minus: return "-" + format_cardinal(s.magnitude());
    }
    return "undefined";
}

std::string format_solution_set(const AlphaSolutionSet& s) {
    switch (s.kind()) {
        case AlphaSolutionSet::Kind::Empty: return "{}";
        case AlphaSolutionSet::Kind::Point: return format_cardinal(s.min_element());
        case AlphaSolutionSet::Kind::ClosedInterval:
            return "[" + format_cardinal(s.min_element()) + ", " +
                   format_cardinal(s.max_element()) + "]";
    }
    return "{}";
}

namespace {

std::uint64_t parse_natural(const std::string& text, std::size_t& pos) {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw InputError("cardinal grammar: expected a natural number at position " +
                         std::to_string(pos) + " in \"" + text + "\"");
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        const std::uint64_t digit = static_cast<std::uint64_t>(text[pos] - '0');
        if (v > (UINT64_MAX - digit) / 10)
            throw InputError("cardinal grammar: natural number too large in \"" + text + "\"");
        v = v * 10 + digit;
        ++pos;
    }
    return v;
}

}  // namespace

OrdinalCNF parse_ordinal(const std::string& text) {
    if (text.empty()) throw InputError("ordinal grammar: empty string");
    OrdinalCNF o;
    std::size_t pos = 0;
    bool saw_constant = false;
    while (pos < text.size()) {
        if (saw_constant)
            throw InputError("ordinal grammar: finite part must be the last term in \"" + text + "\"");
        if (text[pos] == 'w') {
            ++pos;
            std::uint64_t exponent = 1, coefficient = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                exponent = parse_natural(text, pos);
            }
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                coefficient = parse_natural(text, pos);
            }
            if (exponent == 0) throw InputError("ordinal grammar: w^0 is not a term; write the natural directly");
            if (coefficient == 0) throw InputError("ordinal grammar: zero coefficient in \"" + text + "\"");
            if (!o.terms.empty() && o.terms.back().first <= exponent)
                throw InputError("ordinal grammar: terms must have strictly decreasing exponents in \"" +
                                 text + "\"");
            o.terms.emplace_back(exponent, coefficient);
        } else {
            o.constant = parse_natural(text, pos);
            saw_constant = true;
        }
        if (pos < text.size()) {
            if (text[pos] != '+')
                throw InputError("ordinal grammar: expected '+' at position " + std::to_string(pos) +
                                 " in \"" + text + "\"");
            ++pos;
            if (pos == text.size())
                throw InputError("ordinal grammar: dangling '+' in \"" + text + "\"");
        }
    }
    o.validate();
    return o;
}

Cardinal parse_cardinal(const std::string& text) {
    static const std::string kPrefix = "aleph_";
    if (text.rfind(kPrefix, 0) == 0)
        return Cardinal::aleph(parse_ordinal(text.substr(kPrefix.size())));
    std::size_t pos = 0;
    const std::uint64_t v = parse_natural(text, pos);
    if (pos != text.size())
        throw InputError("cardinal grammar: trailing characters in \"" + text + "\"");
    return Cardinal::finite(v);
}

SignedIndex parse_signed_index(const std::string& text) {
    if (text == "undefined") return SignedIndex::undefined();
    if (!text.empty() && text[0] == '-') {
        const Cardinal mag = parse_cardinal(text.substr(1));
        if (mag.is_zero()) throw InputError("signed cardinal: -0 is not a value; write 0");
        return SignedIndex::minus(mag);
    }
    return SignedIndex::plus(parse_cardinal(text));
}

}  // namespace oporbits

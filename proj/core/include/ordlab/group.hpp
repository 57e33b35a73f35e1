#pragma once

#include "ordlab/numeric.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ordlab {

/// Normal form a^r b^s of an element of BS(1,n) = <a, b | b^-1 a b = a^n>.
/// Two elements are equal iff their (r, s) pairs are equal; the base n rides
/// along inside r.
struct GroupElement {
    NAdic r;
    long long s = 0;

    int base() const { return r.base(); }
    bool is_identity() const { return r.is_zero() && s == 0; }

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.s == b.s && a.r == b.r;
    }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
    // (s, r) lexicographic; a deterministic total order for containers.
    friend bool operator<(const GroupElement& a, const GroupElement& b) {
        if (a.s != b.s) return a.s < b.s;
        return NAdic::compare(a.r, b.r) < 0;
    }
};

GroupElement identity(int n);
GroupElement gen_a(int n); // a = (1, 0)
GroupElement gen_b(int n); // b = (0, 1)

/// Product in normal form: (r, s)(r', s') = (r + n^{-s} r', s + s').
GroupElement mul(const GroupElement& g, const GroupElement& h);

/// Inverse: (-n^s r, -s).
GroupElement inv(const GroupElement& g);

GroupElement pow(const GroupElement& g, long long e);

/// Normal-form word text, e.g. "a^{3/2^1} b^2"; identity prints as "".
std::string print_word(const GroupElement& g);

/// Word grammar: word := term*; term := gen exp?; gen := a|A|b|B (capitals
/// are inverses); exp := '^' (integer | '{' nadic '}'). Exponents on b must
/// be integers. Terms multiply left to right.
GroupElement parse_word(const std::string& text, int n);

/// All elements reachable by products of at most `radius` generators from
/// {a, a^-1, b, b^-1}, deduplicated by normal form and ordered by
/// (discovery depth, s, r). Closed under inversion and contains the identity.
struct BallEnumeration {
    int radius = 0;
    std::vector<GroupElement> elements;
    std::map<GroupElement, int> index; // element -> position in `elements`

    bool contains(const GroupElement& g) const { return index.count(g) != 0; }
};

BallEnumeration ball(int radius, int n);

/// Fixed computable bijection N -> BS(1,n) with enumerate_element(0) == id.
/// Indices interleave (s, r) through a diagonal pairing; r runs through the
/// canonical mantissa/exponent pairs.
GroupElement enumerate_element(std::uint64_t i, int n);
std::uint64_t enumerate_index(const GroupElement& g);
std::vector<GroupElement> enumerate_prefix(std::size_t count, int n);

} // namespace ordlab

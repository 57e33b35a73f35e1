#pragma once

#include "ordlab/group.hpp"
#include "ordlab/reals.hpp"

#include <string>
#include <vector>

namespace ordlab {

/// Base-n digit word of the fractional part of a real. Eventually periodic
/// words are stored canonically: shortest preperiod first, then the period
/// rotated to its lexicographically least (primitive) rotation, with the
/// rotated-off digits absorbed into the preperiod. Non-rational inputs yield
/// a truncated prefix instead (period empty, truncated set).
struct DigitWord {
    int base = 2;
    std::vector<int> pre;
    std::vector<int> period; // non-empty iff the word is eventually periodic
    bool truncated = false;

    /// k-th digit; truncated words only know their prefix.
    int at(std::size_t k) const;
    std::size_t known_length() const; // infinite stored as a large sentinel

    friend bool operator==(const DigitWord& a, const DigitWord& b) {
        return a.base == b.base && a.pre == b.pre && a.period == b.period &&
               a.truncated == b.truncated;
    }
};

/// Digit word of frac(x). Exact (preperiod + period) for rationals; a
/// budget-length prefix for quadratics and streams.
DigitWord reduce(const BasePoint& x, int n, int budget = kDefaultDigitBudget);

/// Shift pair witnessing tail equivalence of reduce(x) and reduce(y):
/// the y-word shifted by p equals the x-word shifted by q, i.e.
/// frac(n^p y) = frac(n^q x).
struct TailWitness {
    long long p = 0;
    long long q = 0;
};

struct TailDecision {
    enum class Kind { witness, not_equivalent, unknown } kind;
    TailWitness w; // valid when kind == witness
};

/// Decides tail equivalence. Exact for two eventually periodic words
/// (equivalent iff the canonical periods coincide); the minimal witness in
/// lexicographic (p+q, p) order is returned. Truncated words get a bounded
/// search: shifts up to `budget` and matches of at least 3*budget digits,
/// otherwise unknown.
TailDecision tail_equivalent(const DigitWord& A, const DigitWord& B, int budget = 32);

/// Reconstructs a group element from a tail witness for rational points:
/// t = n^p y - n^q x must be an integer, and g = a^{t/n^p} b^{p-q} maps x to
/// y. Throws when the witness is invalid for the pair.
GroupElement witness_to_group(const Rat& x, const Rat& y, const TailWitness& w, int n);

struct RoundtripReport {
    bool pass = true;
    TailWitness witness;
    GroupElement reconstructed;
    std::string detail;
};

/// Forward-and-back check of the digit reduction along one orbit move:
/// y = act(g, x), the digit words must be tail equivalent, and the witness
/// must reconstruct some g' with act(g', x) = y.
RoundtripReport reduction_roundtrip_check(const Rat& x, const GroupElement& g);

} // namespace ordlab

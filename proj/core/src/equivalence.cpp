#include "ordlab/equivalence.hpp"

#include "ordlab/action.hpp"

#include <algorithm>
#include <limits>

namespace ordlab {

namespace {

// Shortest u with w = u^j; the classic failure-function reduction.
std::vector<int> primitive_root(const std::vector<int>& w) {
    const std::size_t L = w.size();
    for (std::size_t t = 1; t <= L / 2; ++t) {
        if (L % t != 0) continue;
        bool ok = true;
        for (std::size_t i = t; i < L && ok; ++i) ok = w[i] == w[i - t];
        if (ok) return std::vector<int>(w.begin(), w.begin() + static_cast<long>(t));
    }
    return w;
}

std::size_t least_rotation(const std::vector<int>& w) {
    // Booth's algorithm would be overkill; periods here are tiny.
    std::size_t best = 0;
    const std::size_t L = w.size();
    auto less_rot = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < L; ++k) {
            int a = w[(i + k) % L], b = w[(j + k) % L];
            if (a != b) return a < b;
        }
        return false;
    };
    for (std::size_t i = 1; i < L; ++i)
        if (less_rot(i, best)) best = i;
    return best;
}

void canonicalize(DigitWord& w) {
    if (w.period.empty()) return;
    // Shrink the preperiod while its tail matches the period's tail.
    while (!w.pre.empty() && w.pre.back() == w.period.back()) {
        w.pre.pop_back();
        std::rotate(w.period.begin(), w.period.end() - 1, w.period.end());
    }
    w.period = primitive_root(w.period);
    // Rotate the period to its least rotation, absorbing the offset.
    std::size_t j = least_rotation(w.period);
    w.pre.insert(w.pre.end(), w.period.begin(), w.period.begin() + static_cast<long>(j));
    std::rotate(w.period.begin(), w.period.begin() + static_cast<long>(j), w.period.end());
}

constexpr std::size_t kInfinite = std::numeric_limits<std::size_t>::max();

} // namespace

int DigitWord::at(std::size_t k) const {
    if (k < pre.size()) return pre[k];
    if (period.empty()) throw Error("DigitWord: digit index beyond the known prefix");
    return period[(k - pre.size()) % period.size()];
}

std::size_t DigitWord::known_length() const {
    return period.empty() ? pre.size() : kInfinite;
}

DigitWord reduce(const BasePoint& x, int n, int budget) {
    DigitWord w;
    w.base = n;
    if (const Rat* r = std::get_if<Rat>(&x)) {
        RationalExpansion e = rational_expansion(*r, n);
        w.pre = std::move(e.preperiod);
        w.period = std::move(e.period);
        canonicalize(w);
        return w;
    }
    w.truncated = true;
    w.pre = digits(x, static_cast<std::size_t>(budget), n);
    return w;
}

namespace {

// Does Y shifted by p equal X shifted by q? Exact for periodic words; for
// truncated data, demands at least `need` matching digits (0 = all exact).
enum class MatchResult { yes, no, short_data };

MatchResult shifted_equal(const DigitWord& X, const DigitWord& Y, long long q, long long p,
                          std::size_t need) {
    const bool exact = !X.truncated && !Y.truncated;
    std::size_t limit;
    if (exact) {
        // Compare through both preperiods plus two full periods; beyond that
        // pure periodicity repeats.
        std::size_t px = X.pre.size() > static_cast<std::size_t>(q) ? X.pre.size() - q : 0;
        std::size_t py = Y.pre.size() > static_cast<std::size_t>(p) ? Y.pre.size() - p : 0;
        std::size_t lcmish = X.period.size() * Y.period.size();
        limit = std::max(px, py) + 2 * std::max<std::size_t>(lcmish, 1);
    } else {
        std::size_t ax = X.known_length() == kInfinite ? kInfinite
                                                       : X.known_length() - std::min<std::size_t>(q, X.known_length());
        std::size_t ay = Y.known_length() == kInfinite ? kInfinite
                                                       : Y.known_length() - std::min<std::size_t>(p, Y.known_length());
        std::size_t avail = std::min(ax, ay);
        if (avail < need) return MatchResult::short_data;
        limit = need;
    }
    for (std::size_t k = 0; k < limit; ++k) {
        if (X.at(q + k) != Y.at(p + k)) return MatchResult::no;
    }
    return MatchResult::yes;
}

} // namespace

TailDecision tail_equivalent(const DigitWord& A, const DigitWord& B, int budget) {
    if (A.base != B.base) throw Error("tail_equivalent: words in different bases");

    const bool exact = !A.truncated && !B.truncated;
    if (exact) {
        if (A.period != B.period) return {TailDecision::Kind::not_equivalent, {}};
        const long long pmax = static_cast<long long>(B.pre.size() + B.period.size());
        const long long qmax = static_cast<long long>(A.pre.size() + A.period.size());
        for (long long sum = 0; sum <= pmax + qmax; ++sum) {
            for (long long p = 0; p <= std::min(sum, pmax); ++p) {
                long long q = sum - p;
                if (q > qmax) continue;
                if (shifted_equal(A, B, q, p, 0) == MatchResult::yes)
                    return {TailDecision::Kind::witness, {p, q}};
            }
        }
        // Unreachable for words with equal canonical periods.
        throw Error("tail_equivalent: no witness found despite equal periods");
    }

    const std::size_t need = 3 * static_cast<std::size_t>(budget);
    for (long long sum = 0; sum <= 2 * budget; ++sum) {
        for (long long p = 0; p <= std::min<long long>(sum, budget); ++p) {
            long long q = sum - p;
            if (q > budget) continue;
            if (shifted_equal(A, B, q, p, need) == MatchResult::yes)
                return {TailDecision::Kind::witness, {p, q}};
        }
    }
    return {TailDecision::Kind::unknown, {}};
}

GroupElement witness_to_group(const Rat& x, const Rat& y, const TailWitness& w, int n) {
    if (w.p < 0 || w.q < 0) throw Error("witness_to_group: negative shift");
    const BigInt np = int_pow(n, w.p);
    const BigInt nq = int_pow(n, w.q);
    const Rat t = Rat(np) * y - Rat(nq) * x;
    if (denominator(t) != 1)
        throw Error("witness_to_group: invalid witness, residual " + rat_to_string(t) +
                    " is not an integer");
    // n^p y = n^q x + t  =>  y = n^{q-p} x + t n^{-p}, realized by a^{t/n^p} b^{p-q}.
    NAdic r = NAdic(numerator(t), 0, n).scale_pow(-w.p);
    return {r, w.p - w.q};
}

RoundtripReport reduction_roundtrip_check(const Rat& x, const GroupElement& g) {
    RoundtripReport rep;
    const int n = g.base();
    const Rat y = act(g, x);
    TailDecision d = tail_equivalent(reduce(BasePoint(x), n), reduce(BasePoint(y), n));
    if (d.kind != TailDecision::Kind::witness) {
        rep.pass = false;
        rep.detail = "no tail witness for x=" + rat_to_string(x) + ", g=" + print_word(g);
        return rep;
    }
    rep.witness = d.w;
    rep.reconstructed = witness_to_group(x, y, d.w, n);
    if (act(rep.reconstructed, x) != y) {
        rep.pass = false;
        rep.detail = "reconstructed element does not map x to y";
        return rep;
    }
    rep.detail = "witness (" + std::to_string(d.w.p) + "," + std::to_string(d.w.q) + ")";
    return rep;
}

} // namespace ordlab

#pragma once

#include "ordlab/group.hpp"
#include "ordlab/numeric.hpp"

#include <functional>
#include <optional>
#include <variant>
#include <vector>

namespace ordlab {

constexpr int kDefaultDigitBudget = 256;

/// u + v*sqrt(d) with v != 0 and d > 1 non-square. The constructor pulls
/// square factors out of the radicand, so equal values get equal fields.
struct Quadratic {
    Rat u;
    Rat v;
    BigInt d;

    Quadratic(Rat u_, Rat v_, BigInt d_);

    friend bool operator==(const Quadratic& a, const Quadratic& b) {
        return a.u == b.u && a.v == b.v && a.d == b.d;
    }
};

Quadratic make_sqrt(BigInt d); // sqrt(d)

/// A real given by its integer part and a base-n fractional digit oracle.
/// The oracle must be a pure function of the index. A memoizing oracle must
/// either synchronize internally or be confined to a single thread; the
/// oracles constructed by this module are stateless and safe to share.
struct DigitStream {
    BigInt ipart;
    std::function<int(std::size_t)> digit;
    int base = 2;
    int budget = kDefaultDigitBudget;
    std::string ref; // label used by the JSON encoding
};

using BasePoint = std::variant<Rat, Quadratic, DigitStream>;

bool is_rational(const BasePoint&);

enum class Sign { negative, zero, positive, unknown };

int sign_to_int(Sign s); // -1/0/+1; throws on unknown

/// Exact sign of u + v*sqrt(d); d must be non-square when v != 0.
Sign quadratic_sign(const Rat& u, const Rat& v, const BigInt& d);

BigInt quadratic_floor(const Quadratic& q);

/// Sign of rho(g)(eps) - eps = (n^{-s} - 1) eps + r. Exact for Rat and
/// Quadratic; for DigitStream the interval is refined up to the budget and
/// `unknown` is returned if it still straddles zero. Zero can only come from
/// the exact representations.
Sign sign_affine_form(const BasePoint& eps, const GroupElement& g);

/// Sign of eps - q.
Sign compare_to_rat(const BasePoint& eps, const Rat& q);

/// First `count` base-n digits of the fractional part of eps.
std::vector<int> digits(const BasePoint& eps, std::size_t count, int n);

/// Exact expansion of a rational: digits of frac(x) as preperiod + repeating
/// period (period non-empty; an integer yields preperiod "" and period "0").
struct RationalExpansion {
    std::vector<int> preperiod;
    std::vector<int> period;
};
RationalExpansion rational_expansion(const Rat& x, int n);

/// Stream backed by an exact rational (for tests and the CLI "stream:" refs).
DigitStream rational_digit_stream(const Rat& x, int n, int budget);
/// Stream backed by sqrt(d).
DigitStream sqrt_digit_stream(BigInt d, int n, int budget);

} // namespace ordlab

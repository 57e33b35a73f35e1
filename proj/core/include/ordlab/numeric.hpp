#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace ordlab {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Base error for contract violations (bad arguments, mixed bases,
/// malformed input). Budget exhaustion gets its own type so callers
/// can map it to a distinct exit code.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct BudgetError : Error {
    explicit BudgetError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    std::size_t pos;
    ParseError(std::size_t p, const std::string& msg)
        : Error("parse error at " + std::to_string(p) + ": " + msg), pos(p) {}
};

/// b^e for e >= 0. Guards against absurd exponents so a typo in a CLI
/// argument cannot allocate gigabytes.
BigInt int_pow(const BigInt& b, long long e);

/// Largest divisor of q coprime to n (q > 0, n >= 2).
BigInt coprime_part(BigInt q, const BigInt& n);

/// Least e >= 1 with n^e == 1 (mod m), for m coprime to n; returns 1 for m == 1.
long long multiplicative_order(const BigInt& n, const BigInt& m);

int sign_of(const BigInt& v);
int sign_of(const Rat& v);

BigInt rat_floor(const Rat& x);
Rat rat_frac(const Rat& x); // x - floor(x), in [0,1)
Rat rat_abs(const Rat& x);

std::string rat_to_string(const Rat& x); // "p/q", "p" when q == 1
Rat parse_rat(const std::string& text);

/// If v == n^e or v == n^-e for an integer e, return e with v == n^-e
/// convention used by the affine slope (i.e. returns s with v == n^{-s}).
/// Returns false when v is not an integer power of n.
bool slope_exponent_of(const Rat& v, const BigInt& n, long long& s_out);

/// An element of Z[1/n]: value m / n^k with k minimal (k == 0, or n does not
/// divide m). The base n is part of the value; operations on mixed bases are
/// contract violations and throw.
class NAdic {
public:
    NAdic() : m_(0), k_(0), n_(2) {}
    NAdic(BigInt m, long long k, int n);

    static NAdic integer(BigInt v, int n) { return NAdic(std::move(v), 0, n); }
    static NAdic zero(int n) { return NAdic(0, 0, n); }

    const BigInt& mantissa() const { return m_; }
    long long exponent() const { return k_; }
    int base() const { return n_; }

    bool is_zero() const { return m_ == 0; }
    bool is_integer() const { return k_ == 0; }
    int sign() const { return sign_of(m_); }

    Rat to_rat() const;

    /// this * n^e, e may be negative.
    NAdic scale_pow(long long e) const;

    NAdic operator-() const;
    friend NAdic operator+(const NAdic& a, const NAdic& b);
    friend NAdic operator-(const NAdic& a, const NAdic& b);
    friend NAdic operator*(const NAdic& a, const NAdic& b);

    /// -1, 0, +1; agrees with the real order.
    static int compare(const NAdic& a, const NAdic& b);

    friend bool operator==(const NAdic& a, const NAdic& b) {
        check_same_base(a, b);
        return a.m_ == b.m_ && a.k_ == b.k_;
    }
    friend bool operator!=(const NAdic& a, const NAdic& b) { return !(a == b); }
    friend bool operator<(const NAdic& a, const NAdic& b) { return compare(a, b) < 0; }
    friend bool operator<=(const NAdic& a, const NAdic& b) { return compare(a, b) <= 0; }
    friend bool operator>(const NAdic& a, const NAdic& b) { return compare(a, b) > 0; }
    friend bool operator>=(const NAdic& a, const NAdic& b) { return compare(a, b) >= 0; }

    /// Canonical text form "m/n^k", e.g. "3/2^1".
    std::string to_string() const;

    /// Accepts "m", "m/D" with D a power of the base, or "m/n^k" with n equal
    /// to the base.
    static NAdic parse(const std::string& text, int n);

private:
    static void check_same_base(const NAdic& a, const NAdic& b);
    void normalize();

    BigInt m_;
    long long k_;
    int n_;
};

/// Exact conversion Q -> Z[1/n]; throws when the denominator has a prime
/// factor outside n.
NAdic rat_to_nadic(const Rat& x, int n);

bool rat_in_z_one_over_n(const Rat& x, int n);

} // namespace ordlab

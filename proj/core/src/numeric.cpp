#include "ordlab/numeric.hpp"

#include <boost/multiprecision/integer.hpp>

namespace ordlab {

namespace {
constexpr long long kMaxExponent = 1 << 22; // generous for desk scale, fatal for typos
}

BigInt int_pow(const BigInt& b, long long e) {
    if (e < 0) throw Error("int_pow: negative exponent");
    if (e > kMaxExponent) throw Error("int_pow: exponent too large");
    BigInt r = 1, base = b;
    long long n = e;
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

BigInt coprime_part(BigInt q, const BigInt& n) {
    if (q <= 0) throw Error("coprime_part: q must be positive");
    BigInt g = gcd(q, n);
    while (g > 1) {
        q /= g;
        g = gcd(q, n);
    }
    return q;
}

long long multiplicative_order(const BigInt& n, const BigInt& m) {
    if (m <= 0) throw Error("multiplicative_order: modulus must be positive");
    if (m == 1) return 1;
    if (gcd(n, m) != 1) throw Error("multiplicative_order: arguments not coprime");
    BigInt acc = n % m;
    long long ord = 1;
    while (acc != 1) {
        acc = (acc * n) % m;
        ++ord;
        if (ord > (1 << 26)) throw Error("multiplicative_order: runaway order");
    }
    return ord;
}

int sign_of(const BigInt& v) { return v.sign(); }
int sign_of(const Rat& v) { return v.sign(); }

BigInt rat_floor(const Rat& x) {
    BigInt p = numerator(x), q = denominator(x);
    BigInt d = p / q;
    if (p % q != 0 && p < 0) --d;
    return d;
}

Rat rat_frac(const Rat& x) { return x - Rat(rat_floor(x)); }

Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

std::string rat_to_string(const Rat& x) {
    BigInt p = numerator(x), q = denominator(x);
    if (q == 1) return p.str();
    return p.str() + "/" + q.str();
}

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(text));
        BigInt p(text.substr(0, slash));
        BigInt q(text.substr(slash + 1));
        if (q == 0) throw Error("zero denominator");
        return Rat(p, q);
    } catch (const std::exception& e) {
        throw Error("bad rational literal '" + text + "': " + e.what());
    }
}

bool slope_exponent_of(const Rat& v, const BigInt& n, long long& s_out) {
    if (v <= 0) return false;
    BigInt p = numerator(v), q = denominator(v);
    auto log_exact = [&](const BigInt& value, long long& e) {
        e = 0;
        BigInt t = value;
        while (t > 1) {
            if (t % n != 0) return false;
            t /= n;
            ++e;
        }
        return true;
    };
    long long e = 0;
    if (q == 1) {
        if (!log_exact(p, e)) return false;
        s_out = -e; // v == n^e == n^{-(-e)}
        return true;
    }
    if (p == 1) {
        if (!log_exact(q, e)) return false;
        s_out = e; // v == n^{-e}
        return true;
    }
    return false;
}

NAdic::NAdic(BigInt m, long long k, int n) : m_(std::move(m)), k_(k), n_(n) {
    if (n_ < 2) throw Error("NAdic: base must be >= 2");
    if (k_ < 0) throw Error("NAdic: exponent must be non-negative");
    if (k_ > kMaxExponent) throw Error("NAdic: exponent too large");
    normalize();
}

void NAdic::normalize() {
    if (m_ == 0) {
        k_ = 0;
        return;
    }
    while (k_ > 0 && m_ % n_ == 0) {
        m_ /= n_;
        --k_;
    }
}

void NAdic::check_same_base(const NAdic& a, const NAdic& b) {
    if (a.n_ != b.n_)
        throw Error("NAdic: mixed bases " + std::to_string(a.n_) + " and " +
                    std::to_string(b.n_));
}

Rat NAdic::to_rat() const { return Rat(m_, int_pow(n_, k_)); }

NAdic NAdic::scale_pow(long long e) const {
    if (e >= 0) {
        long long keep = std::min(e, k_);
        return NAdic(m_ * int_pow(n_, e - keep), k_ - keep, n_);
    }
    return NAdic(m_, k_ - e, n_);
}

NAdic NAdic::operator-() const { return NAdic(-m_, k_, n_); }

NAdic operator+(const NAdic& a, const NAdic& b) {
    NAdic::check_same_base(a, b);
    long long k = std::max(a.k_, b.k_);
    BigInt m = a.m_ * int_pow(a.n_, k - a.k_) + b.m_ * int_pow(b.n_, k - b.k_);
    return NAdic(std::move(m), k, a.n_);
}

NAdic operator-(const NAdic& a, const NAdic& b) { return a + (-b); }

NAdic operator*(const NAdic& a, const NAdic& b) {
    NAdic::check_same_base(a, b);
    return NAdic(a.m_ * b.m_, a.k_ + b.k_, a.n_);
}

int NAdic::compare(const NAdic& a, const NAdic& b) {
    check_same_base(a, b);
    // a.m / n^a.k vs b.m / n^b.k, cross-multiplied over positive powers.
    BigInt lhs = a.m_ * int_pow(a.n_, b.k_);
    BigInt rhs = b.m_ * int_pow(b.n_, a.k_);
    return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
}

std::string NAdic::to_string() const {
    return m_.str() + "/" + std::to_string(n_) + "^" + std::to_string(k_);
}

NAdic NAdic::parse(const std::string& text, int n) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return NAdic(BigInt(text), 0, n);
        BigInt m(text.substr(0, slash));
        std::string den = text.substr(slash + 1);
        auto caret = den.find('^');
        if (caret != std::string::npos) {
            BigInt b(den.substr(0, caret));
            if (b != n)
                throw Error("denominator base " + b.str() + " does not match session base " +
                            std::to_string(n));
            long long k = std::stoll(den.substr(caret + 1));
            return NAdic(std::move(m), k, n);
        }
        // Plain denominator: must be an exact power of the base.
        BigInt d(den);
        if (d <= 0) throw Error("denominator must be positive");
        long long k = 0;
        while (d > 1) {
            if (d % n != 0)
                throw Error("denominator is not a power of " + std::to_string(n) +
                            " (value not in Z[1/" + std::to_string(n) + "])");
            d /= n;
            ++k;
        }
        return NAdic(std::move(m), k, n);
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error("bad n-adic literal '" + text + "': " + e.what());
    }
}

bool rat_in_z_one_over_n(const Rat& x, int n) {
    return coprime_part(denominator(x), n) == 1;
}

NAdic rat_to_nadic(const Rat& x, int n) {
    BigInt q = denominator(x);
    long long k = 0;
    BigInt t = q;
    while (t > 1) {
        BigInt g = gcd(t, BigInt(n));
        if (g == 1)
            throw Error("rational " + rat_to_string(x) + " is not in Z[1/" +
                        std::to_string(n) + "]");
        t /= g;
        ++k;
    }
    BigInt m = numerator(x) * int_pow(n, k) / q;
    return NAdic(std::move(m), k, n);
}

} // namespace ordlab

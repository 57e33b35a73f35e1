#include "ordlab/reals.hpp"

#include <boost/multiprecision/integer.hpp>

#include <map>

namespace ordlab {

namespace {

bool is_square(const BigInt& v, BigInt* root = nullptr) {
    if (v < 0) return false;
    BigInt s = sqrt(v);
    if (root) *root = s;
    return s * s == v;
}

} // namespace

Quadratic::Quadratic(Rat u_, Rat v_, BigInt d_) : u(std::move(u_)), v(std::move(v_)), d(std::move(d_)) {
    if (v == 0) throw Error("Quadratic: v must be non-zero (value would be rational)");
    if (d <= 1) throw Error("Quadratic: radicand must be > 1");
    // Pull square factors into v so equal values compare equal.
    BigInt f = 2;
    while (f * f <= d && f <= 1000000) {
        while (d % (f * f) == 0) {
            d /= f * f;
            v *= Rat(f);
        }
        ++f;
    }
    if (is_square(d)) throw Error("Quadratic: radicand is a perfect square (value is rational)");
}

Quadratic make_sqrt(BigInt d) { return Quadratic(Rat(0), Rat(1), std::move(d)); }

bool is_rational(const BasePoint& p) { return std::holds_alternative<Rat>(p); }

int sign_to_int(Sign s) {
    switch (s) {
    case Sign::negative: return -1;
    case Sign::zero: return 0;
    case Sign::positive: return 1;
    default: throw Error("sign_to_int: sign is unknown");
    }
}

Sign quadratic_sign(const Rat& u, const Rat& v, const BigInt& d) {
    if (v == 0) {
        int s = sign_of(u);
        return s < 0 ? Sign::negative : (s == 0 ? Sign::zero : Sign::positive);
    }
    if (u == 0) return v > 0 ? Sign::positive : Sign::negative;
    if (u > 0 && v > 0) return Sign::positive;
    if (u < 0 && v < 0) return Sign::negative;
    // Opposite signs: compare u^2 against v^2 d. Equality would make sqrt(d)
    // rational, which the non-square invariant excludes.
    Rat lhs = u * u;
    Rat rhs = v * v * Rat(d);
    if (lhs == rhs) throw Error("quadratic_sign: radicand is a square");
    bool u_side_bigger = lhs > rhs;
    if (u > 0) return u_side_bigger ? Sign::positive : Sign::negative;
    return u_side_bigger ? Sign::negative : Sign::positive;
}

BigInt quadratic_floor(const Quadratic& q) {
    BigInt s0 = sqrt(q.d); // floor(sqrt(d))
    Rat lo, hi;
    if (q.v > 0) {
        lo = q.u + q.v * Rat(s0);
        hi = q.u + q.v * Rat(s0 + 1);
    } else {
        lo = q.u + q.v * Rat(s0 + 1);
        hi = q.u + q.v * Rat(s0);
    }
    BigInt mlo = rat_floor(lo);        // eps >= mlo
    BigInt mhi = rat_floor(hi) + 1;    // eps < mhi
    // Largest m in [mlo, mhi) with eps >= m.
    while (mlo + 1 < mhi) {
        BigInt mid = (mlo + mhi) / 2;
        Sign s = quadratic_sign(q.u - Rat(mid), q.v, q.d);
        if (s == Sign::negative)
            mhi = mid;
        else
            mlo = mid;
    }
    return mlo;
}

namespace {

Rat affine_coeff(int n, long long s) {
    // n^{-s} - 1
    Rat slope = s >= 0 ? Rat(1, int_pow(n, s)) : Rat(int_pow(n, -s));
    return slope - 1;
}

Sign interval_sign(const DigitStream& st, const Rat& coeff, const Rat& offset) {
    // Sign of coeff * eps + offset with eps in the stream's shrinking interval.
    if (coeff == 0) {
        int s = sign_of(offset);
        return s < 0 ? Sign::negative : (s == 0 ? Sign::zero : Sign::positive);
    }
    Rat lo(st.ipart);
    Rat step(1);
    const Rat nn(st.base);
    for (int j = 0;; ++j) {
        Rat a = coeff * lo + offset;
        Rat b = coeff * (lo + step) + offset;
        Rat vmin = a < b ? a : b;
        Rat vmax = a < b ? b : a;
        if (vmin > 0) return Sign::positive;
        if (vmax < 0) return Sign::negative;
        if (j >= st.budget) return Sign::unknown;
        int dig = st.digit(static_cast<std::size_t>(j));
        if (dig < 0 || dig >= st.base)
            throw Error("DigitStream: digit out of range");
        step /= nn;
        lo += Rat(dig) * step;
    }
}

} // namespace

Sign sign_affine_form(const BasePoint& eps, const GroupElement& g) {
    const int n = g.base();
    const Rat r = g.r.to_rat();
    const Rat coeff = affine_coeff(n, g.s);
    if (const Rat* x = std::get_if<Rat>(&eps)) {
        int s = sign_of(coeff * (*x) + r);
        return s < 0 ? Sign::negative : (s == 0 ? Sign::zero : Sign::positive);
    }
    if (const Quadratic* qd = std::get_if<Quadratic>(&eps)) {
        return quadratic_sign(coeff * qd->u + r, coeff * qd->v, qd->d);
    }
    const DigitStream& st = std::get<DigitStream>(eps);
    if (st.base != n)
        throw Error("DigitStream base " + std::to_string(st.base) +
                    " does not match session base " + std::to_string(n));
    return interval_sign(st, coeff, r);
}

Sign compare_to_rat(const BasePoint& eps, const Rat& q) {
    if (const Rat* x = std::get_if<Rat>(&eps)) {
        int s = sign_of(*x - q);
        return s < 0 ? Sign::negative : (s == 0 ? Sign::zero : Sign::positive);
    }
    if (const Quadratic* qd = std::get_if<Quadratic>(&eps)) {
        return quadratic_sign(qd->u - q, qd->v, qd->d);
    }
    const DigitStream& st = std::get<DigitStream>(eps);
    return interval_sign(st, Rat(1), -q);
}

RationalExpansion rational_expansion(const Rat& x, int n) {
    Rat f = rat_frac(x);
    BigInt num = numerator(f);
    const BigInt den = denominator(f);
    std::map<BigInt, std::size_t> seen; // remainder -> digit position
    std::vector<int> digs;
    for (;;) {
        auto [it, fresh] = seen.emplace(num, digs.size());
        if (!fresh) {
            RationalExpansion out;
            out.preperiod.assign(digs.begin(), digs.begin() + static_cast<long>(it->second));
            out.period.assign(digs.begin() + static_cast<long>(it->second), digs.end());
            return out;
        }
        num *= n;
        BigInt d = num / den;
        num -= d * den;
        digs.push_back(static_cast<int>(d));
    }
}

std::vector<int> digits(const BasePoint& eps, std::size_t count, int n) {
    std::vector<int> out;
    out.reserve(count);
    if (const Rat* x = std::get_if<Rat>(&eps)) {
        RationalExpansion e = rational_expansion(*x, n);
        for (std::size_t i = 0; i < count; ++i) {
            if (i < e.preperiod.size())
                out.push_back(e.preperiod[i]);
            else
                out.push_back(e.period[(i - e.preperiod.size()) % e.period.size()]);
        }
        return out;
    }
    if (const Quadratic* qd = std::get_if<Quadratic>(&eps)) {
        BigInt fl = quadratic_floor(*qd);
        Quadratic x(qd->u - Rat(fl), qd->v, qd->d);
        for (std::size_t i = 0; i < count; ++i) {
            Quadratic scaled(x.u * n, x.v * n, x.d);
            BigInt d = quadratic_floor(scaled);
            out.push_back(static_cast<int>(d));
            x = Quadratic(scaled.u - Rat(d), scaled.v, scaled.d);
        }
        return out;
    }
    const DigitStream& st = std::get<DigitStream>(eps);
    if (st.base != n)
        throw Error("DigitStream base does not match session base");
    if (count > static_cast<std::size_t>(st.budget))
        throw BudgetError("digit budget exhausted: requested " + std::to_string(count) +
                          " digits, budget " + std::to_string(st.budget));
    for (std::size_t i = 0; i < count; ++i) {
        int d = st.digit(i);
        if (d < 0 || d >= st.base) throw Error("DigitStream: digit out of range");
        out.push_back(d);
    }
    return out;
}

DigitStream rational_digit_stream(const Rat& x, int n, int budget) {
    Rat f = rat_frac(x);
    BigInt p = numerator(f), q = denominator(f);
    DigitStream st;
    st.ipart = rat_floor(x);
    st.base = n;
    st.budget = budget;
    st.ref = "rat:" + rat_to_string(x);
    st.digit = [p, q, n](std::size_t i) {
        // floor(f * n^{i+1}) mod n, straight from the definition; stateless.
        BigInt scaled = p * int_pow(n, static_cast<long long>(i) + 1) / q;
        return static_cast<int>(scaled % n);
    };
    return st;
}

DigitStream sqrt_digit_stream(BigInt d, int n, int budget) {
    if (is_square(d)) throw Error("sqrt_digit_stream: radicand is a perfect square");
    BigInt root = sqrt(d);
    DigitStream st;
    st.ipart = root;
    st.base = n;
    st.budget = budget;
    st.ref = "sqrt:" + d.str();
    st.digit = [d, n](std::size_t i) {
        // floor(sqrt(d) * n^{i+1}) = isqrt(d * n^{2(i+1)})
        BigInt scale = int_pow(n, static_cast<long long>(i) + 1);
        BigInt scaled = d * scale * scale;
        BigInt v = sqrt(scaled);
        return static_cast<int>(v % n);
    };
    return st;
}

} // namespace ordlab

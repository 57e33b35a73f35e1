#include "ordlab/action.hpp"

namespace ordlab {

AffineMap affine_of(const GroupElement& g) { return {-g.s, g.r}; }

AffineMap compose(const AffineMap& f, const AffineMap& g) {
    // f(g(x)) = n^{f.e} (n^{g.e} x + g.r) + f.r
    return {f.slope_exp + g.slope_exp, g.intercept.scale_pow(f.slope_exp) + f.intercept};
}

Rat apply(const AffineMap& f, const Rat& x) { return f.slope() * x + f.intercept.to_rat(); }

Rat act(const GroupElement& g, const Rat& x) {
    int n = g.base();
    Rat slope = g.s >= 0 ? Rat(1, int_pow(n, g.s)) : Rat(int_pow(n, -g.s));
    return slope * x + g.r.to_rat();
}

NAdic act(const GroupElement& g, const NAdic& x) { return x.scale_pow(-g.s) + g.r; }

Quadratic act(const GroupElement& g, const Quadratic& x) {
    int n = g.base();
    Rat slope = g.s >= 0 ? Rat(1, int_pow(n, g.s)) : Rat(int_pow(n, -g.s));
    return Quadratic(slope * x.u + g.r.to_rat(), slope * x.v, x.d);
}

BasePoint act(const GroupElement& g, const BasePoint& x) {
    if (const Rat* r = std::get_if<Rat>(&x)) return act(g, *r);
    if (const Quadratic* q = std::get_if<Quadratic>(&x)) return act(g, *q);
    throw Error("act: digit-stream points only support sign queries");
}

Rat fixed_point(const GroupElement& g) {
    if (g.s == 0) throw Error("fixed_point: element acts by translation (s == 0)");
    int n = g.base();
    Rat slope = g.s >= 0 ? Rat(1, int_pow(n, g.s)) : Rat(int_pow(n, -g.s));
    return g.r.to_rat() / (Rat(1) - slope);
}

GroupElement stabilizer_generator(const Rat& x, int n) {
    BigInt qhat = coprime_part(denominator(x), n);
    long long s = qhat == 1 ? 1 : multiplicative_order(n, qhat);
    // act((r, -s), x) = n^s x + r, so r = x (1 - n^s).
    Rat r = x * (Rat(1) - Rat(int_pow(n, s)));
    return {rat_to_nadic(r, n), -s};
}

namespace {

std::optional<GroupElement> rational_witness(const Rat& x, const Rat& y, int n) {
    BigInt qx = coprime_part(denominator(x), n);
    BigInt qy = coprime_part(denominator(y), n);
    if (qx != qy) return std::nullopt;
    long long d = qx == 1 ? 1 : multiplicative_order(n, qx);

    auto r_for = [&](long long s) -> Rat {
        Rat slope = s >= 0 ? Rat(1, int_pow(n, s)) : Rat(int_pow(n, -s));
        return Rat(y - slope * x);
    };

    std::optional<long long> s0;
    for (long long s = 0; s < d; ++s) {
        if (rat_in_z_one_over_n(r_for(s), n)) {
            s0 = s;
            break;
        }
    }
    if (!s0) return std::nullopt;

    // Solutions form the progression s0 + dZ; minimize |s|, then |r|.
    long long c1 = *s0;              // least non-negative
    long long c2 = c1 - d;           // greatest negative
    long long best = c1;
    if (c1 != 0) {
        long long a1 = c1, a2 = -c2;
        if (a2 < a1) {
            best = c2;
        } else if (a2 == a1) {
            best = rat_abs(r_for(c2)) < rat_abs(r_for(c1)) ? c2 : c1;
        }
    }
    return GroupElement{rat_to_nadic(r_for(best), n), best};
}

std::optional<GroupElement> quadratic_witness(const Quadratic& x, const Quadratic& y, int n) {
    if (x.d != y.d) return std::nullopt;
    long long s = 0;
    if (!slope_exponent_of(y.v / x.v, n, s)) return std::nullopt;
    Rat slope = s >= 0 ? Rat(1, int_pow(n, s)) : Rat(int_pow(n, -s));
    Rat r = y.u - slope * x.u;
    if (!rat_in_z_one_over_n(r, n)) return std::nullopt;
    return GroupElement{rat_to_nadic(r, n), s};
}

} // namespace

std::optional<GroupElement> orbit_witness(const BasePoint& eps, const BasePoint& delta, int n) {
    if (const Rat* x = std::get_if<Rat>(&eps)) {
        const Rat* y = std::get_if<Rat>(&delta);
        if (!y) throw Error("orbit_witness: mixed representation kinds");
        return rational_witness(*x, *y, n);
    }
    if (const Quadratic* x = std::get_if<Quadratic>(&eps)) {
        const Quadratic* y = std::get_if<Quadratic>(&delta);
        if (!y) throw Error("orbit_witness: mixed representation kinds");
        return quadratic_witness(*x, *y, n);
    }
    throw Error("orbit_witness: digit-stream points are not supported");
}

} // namespace ordlab

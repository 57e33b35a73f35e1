#pragma once

#include "ordlab/group.hpp"
#include "ordlab/reals.hpp"

#include <optional>

namespace ordlab {

/// The affine map x -> n^{-s} x + r realized by a^r b^s. Kept explicit so the
/// composition law can be checked against the group product.
struct AffineMap {
    long long slope_exp = 0; // slope is n^{slope_exp}
    NAdic intercept;

    int base() const { return intercept.base(); }
    Rat slope() const {
        int n = base();
        return slope_exp >= 0 ? Rat(int_pow(n, slope_exp)) : Rat(1, int_pow(n, -slope_exp));
    }
};

AffineMap affine_of(const GroupElement& g);
AffineMap compose(const AffineMap& f, const AffineMap& g); // f after g
Rat apply(const AffineMap& f, const Rat& x);

/// rho(g)(x) = n^{-s} x + r, in the representation of the input.
Rat act(const GroupElement& g, const Rat& x);
NAdic act(const GroupElement& g, const NAdic& x);
Quadratic act(const GroupElement& g, const Quadratic& x);
/// DigitStream inputs are rejected; only sign queries are supported on streams.
BasePoint act(const GroupElement& g, const BasePoint& x);

/// The unique fixed point r / (1 - n^{-s}); requires s != 0.
Rat fixed_point(const GroupElement& g);

/// Generator of Stab(x) for rational x: a^r b^{-s} with the least s >= 1 such
/// that the n-coprime part of den(x) divides n^s - 1, and r = x (1 - n^s).
/// Every element fixing x is a power of it.
GroupElement stabilizer_generator(const Rat& x, int n);

/// Some g with act(g, eps) = delta, or nullopt when the points are in
/// different orbits. Both points must be rational or both quadratic.
/// Rational case: witnesses form a stabilizer coset; the one minimizing
/// (|s|, |r|) is returned. Quadratic case: the slope is pinned by v'/v.
std::optional<GroupElement> orbit_witness(const BasePoint& eps, const BasePoint& delta, int n);

} // namespace ordlab

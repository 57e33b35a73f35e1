#include "ordlab/reals.hpp"

#include "ordlab/action.hpp"

#include <doctest.h>

#include <random>

using namespace ordlab;

TEST_CASE("quadratic construction canonicalizes the radicand") {
    Quadratic q(Rat(0), Rat(1), 8); // sqrt(8) = 2 sqrt(2)
    CHECK(q.v == Rat(2));
    CHECK(q.d == 2);

    CHECK_THROWS_AS(Quadratic(Rat(0), Rat(1), 4), Error);  // perfect square
    CHECK_THROWS_AS(Quadratic(Rat(0), Rat(0), 2), Error);  // rational value
    CHECK_THROWS_AS(Quadratic(Rat(0), Rat(1), 1), Error);
}

TEST_CASE("quadratic sign and floor are exact") {
    CHECK(quadratic_sign(Rat(0), Rat(1), 2) == Sign::positive);
    CHECK(quadratic_sign(Rat(-1), Rat(1), 2) == Sign::positive);  // sqrt2 - 1 > 0
    CHECK(quadratic_sign(Rat(-2), Rat(1), 2) == Sign::negative);  // sqrt2 - 2 < 0
    CHECK(quadratic_sign(Rat(3, 2), Rat(-1), 2) == Sign::positive);
    CHECK(quadratic_sign(Rat(7, 5), Rat(-1), 2) == Sign::negative);
    CHECK(quadratic_sign(Rat(0), Rat(0), 2) == Sign::zero);

    CHECK(quadratic_floor(make_sqrt(2)) == 1);
    CHECK(quadratic_floor(Quadratic(Rat(1, 2), Rat(1, 2), 5)) == 1); // golden ratio
    CHECK(quadratic_floor(Quadratic(Rat(0), Rat(-1), 2)) == -2);
    CHECK(quadratic_floor(Quadratic(Rat(10), Rat(7, 3), 3)) == 14); // 10 + 7sqrt3/3 ~ 14.04
}

TEST_CASE("sign of the affine displacement") {
    // b squeezes sqrt(2) toward 0
    CHECK(sign_affine_form(BasePoint(make_sqrt(2)), gen_b(2)) == Sign::negative);
    // a translates every point up
    CHECK(sign_affine_form(BasePoint(make_sqrt(2)), gen_a(2)) == Sign::positive);
    CHECK(sign_affine_form(BasePoint(Rat(1, 3)), gen_a(2)) == Sign::positive);
    // 2 is the fixed point of (r=1, s=1)
    GroupElement g{NAdic(1, 0, 2), 1};
    CHECK(sign_affine_form(BasePoint(Rat(2)), g) == Sign::zero);
}

TEST_CASE("zero displacement only at fixed points") {
    std::mt19937_64 rng(5);
    BallEnumeration B = ball(4, 2);
    const Rat eps(3, 7);
    for (const auto& g : B.elements) {
        Sign s = sign_affine_form(BasePoint(eps), g);
        if (g.is_identity()) {
            CHECK(s == Sign::zero);
            continue;
        }
        bool fixes = g.s != 0 && fixed_point(g) == eps;
        CHECK((s == Sign::zero) == fixes);
    }
}

TEST_CASE("digit expansions") {
    CHECK(digits(BasePoint(Rat(1, 3)), 6, 2) == std::vector<int>{0, 1, 0, 1, 0, 1});
    CHECK(digits(BasePoint(Rat(5, 4)), 3, 2) == std::vector<int>{0, 1, 0});
    CHECK(digits(BasePoint(make_sqrt(2)), 4, 2) == std::vector<int>{0, 1, 1, 0});
    CHECK(digits(BasePoint(Rat(1, 2)), 4, 3) == std::vector<int>{1, 1, 1, 1});

    RationalExpansion e = rational_expansion(Rat(1, 3), 2);
    CHECK(e.preperiod.empty());
    CHECK(e.period == std::vector<int>{0, 1});

    RationalExpansion e54 = rational_expansion(Rat(5, 4), 2);
    CHECK(e54.preperiod == std::vector<int>{0, 1});
    CHECK(e54.period == std::vector<int>{0});
}

TEST_CASE("rational periods divide the order of n modulo the coprime part") {
    std::mt19937_64 rng(17);
    for (int n : {2, 3, 10}) {
        for (int it = 0; it < 100; ++it) {
            long long q = 1 + static_cast<long long>(rng() % 60);
            long long p = static_cast<long long>(rng() % 200) - 100;
            Rat x(p, q);
            RationalExpansion e = rational_expansion(x, n);
            BigInt qhat = coprime_part(denominator(rat_frac(x)), n);
            if (qhat == 1) continue;
            long long ord = multiplicative_order(n, qhat);
            CHECK(ord % static_cast<long long>(e.period.size()) == 0);
        }
    }
}

TEST_CASE("digit truncations bracket the value") {
    for (int n : {2, 10}) {
        for (Rat x : {Rat(1, 3), Rat(22, 7), Rat(-5, 6)}) {
            auto ds = digits(BasePoint(x), 20, n);
            Rat trunc(0), scale(1);
            const Rat f = rat_frac(x);
            for (int k = 0; k < 20; ++k) {
                scale /= n;
                trunc += Rat(ds[k]) * scale;
                CHECK(trunc <= f);
                CHECK(f <= trunc + scale);
            }
        }
    }
}

TEST_CASE("comparisons against rationals") {
    CHECK(compare_to_rat(BasePoint(make_sqrt(2)), Rat(1)) == Sign::positive);
    CHECK(compare_to_rat(BasePoint(Rat(1, 3)), Rat(1, 3)) == Sign::zero);
    CHECK(compare_to_rat(BasePoint(make_sqrt(2)), Rat(3, 2)) == Sign::negative);
}

TEST_CASE("digit streams answer within their budget and say unknown past it") {
    DigitStream s2 = sqrt_digit_stream(2, 2, 64);
    CHECK(compare_to_rat(BasePoint(s2), Rat(1)) == Sign::positive);
    CHECK(compare_to_rat(BasePoint(s2), Rat(3, 2)) == Sign::negative);
    CHECK(sign_affine_form(BasePoint(s2), gen_b(2)) == Sign::negative);

    // stream digits agree with the exact quadratic expansion
    CHECK(digits(BasePoint(s2), 16, 2) == digits(BasePoint(make_sqrt(2)), 16, 2));
    CHECK_THROWS_AS(digits(BasePoint(s2), 65, 2), BudgetError);

    // a stream sitting exactly on a fixed point can never resolve
    DigitStream two = rational_digit_stream(Rat(2), 2, 32);
    GroupElement g{NAdic(1, 0, 2), 1}; // fixes 2
    CHECK(sign_affine_form(BasePoint(two), g) == Sign::unknown);
    CHECK(compare_to_rat(BasePoint(two), Rat(2)) == Sign::unknown);

    // rational stream digits match the exact expansion
    DigitStream third = rational_digit_stream(Rat(1, 3), 2, 32);
    CHECK(digits(BasePoint(third), 8, 2) == digits(BasePoint(Rat(1, 3)), 8, 2));

    // translations are decided without any digits
    CHECK(sign_affine_form(BasePoint(two), gen_a(2)) == Sign::positive);
}

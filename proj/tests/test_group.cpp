#include "ordlab/group.hpp"

#include "ordlab/action.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <set>

using namespace ordlab;

TEST_CASE("multiplication matches the affine composition law") {
    // (r=1,s=1)(r=1,s=0) -> (3/2, 1), read off from composing the affine maps
    GroupElement g{NAdic(1, 0, 2), 1}, h{NAdic(1, 0, 2), 0};
    GroupElement gh = mul(g, h);
    CHECK(gh.r == NAdic(3, 1, 2));
    CHECK(gh.s == 1);

    // independent route: compose the affine maps directly
    AffineMap via_maps = compose(affine_of(g), affine_of(h));
    AffineMap via_group = affine_of(gh);
    CHECK(via_maps.slope_exp == via_group.slope_exp);
    CHECK(via_maps.intercept == via_group.intercept);

    CHECK(mul(g, identity(2)) == g);
    CHECK(mul(identity(2), g) == g);
}

TEST_CASE("defining relation b^-1 a b = a^n") {
    for (int n : {2, 3, 10}) {
        GroupElement lhs = mul(mul(inv(gen_b(n)), gen_a(n)), gen_b(n));
        CHECK(lhs == GroupElement{NAdic(n, 0, n), 0});
    }
}

TEST_CASE("inverses") {
    GroupElement g{NAdic(1, 0, 2), 1};
    GroupElement gi = inv(g);
    CHECK(gi.r == NAdic(-2, 0, 2));
    CHECK(gi.s == -1);
    CHECK(mul(g, gi) == identity(2));
    CHECK(inv(identity(2)) == identity(2));

    std::mt19937_64 rng(3);
    BallEnumeration B = ball(4, 2);
    for (int it = 0; it < 100; ++it) {
        const GroupElement& x = B.elements[rng() % B.elements.size()];
        CHECK(inv(inv(x)) == x);
        CHECK(mul(inv(x), x) == identity(2));
    }
}

TEST_CASE("associativity and the s-homomorphism on balls") {
    BallEnumeration B3 = ball(3, 2);
    for (const auto& g : B3.elements)
        for (const auto& h : B3.elements)
            CHECK(mul(g, h).s == g.s + h.s);

    std::mt19937_64 rng(11);
    BallEnumeration B4 = ball(4, 2);
    for (int it = 0; it < 500; ++it) {
        const GroupElement& a = B4.elements[rng() % B4.elements.size()];
        const GroupElement& b = B4.elements[rng() % B4.elements.size()];
        const GroupElement& c = B4.elements[rng() % B4.elements.size()];
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    }
}

TEST_CASE("word parsing") {
    CHECK(parse_word("b^-1 a b", 2) == GroupElement{NAdic(2, 0, 2), 0});
    CHECK(parse_word("", 2) == identity(2));
    CHECK(parse_word("   ", 2) == identity(2));
    GroupElement e = parse_word("a^{3/2^1} b^2", 2);
    CHECK(e.r == NAdic(3, 1, 2));
    CHECK(e.s == 2);
    CHECK(parse_word("A", 2) == inv(gen_a(2)));
    CHECK(parse_word("B^3", 2) == GroupElement{NAdic::zero(2), -3});
    CHECK(parse_word("aA", 2) == identity(2));

    CHECK_THROWS_AS(parse_word("c", 2), ParseError);
    CHECK_THROWS_AS(parse_word("a^", 2), ParseError);
    CHECK_THROWS_AS(parse_word("a^{1/3}", 2), ParseError);  // not in Z[1/2]
    CHECK_THROWS_AS(parse_word("b^{3/2^1}", 2), ParseError); // b exponent must be integral
    CHECK_THROWS_AS(parse_word("a^{1/2^1", 2), ParseError);

    try {
        parse_word("a b c", 2);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.pos == 4);
    }
}

TEST_CASE("printing round trips through the parser") {
    for (const auto& g : ball(3, 2).elements)
        CHECK(parse_word(print_word(g), 2) == g);
    for (const auto& g : ball(3, 10).elements)
        CHECK(parse_word(print_word(g), 10) == g);
}

namespace {

// Independent ball oracle: fold letter sequences through affine-map
// composition (never through mul) and count distinct maps.
std::size_t ball_size_via_affine(int radius, int n) {
    std::set<std::pair<long long, std::pair<std::string, long long>>> seen;
    auto key = [](const AffineMap& m) {
        return std::make_pair(m.slope_exp,
                              std::make_pair(m.intercept.mantissa().str(), m.intercept.exponent()));
    };
    AffineMap gens[4] = {affine_of(gen_a(n)), affine_of(inv(gen_a(n))), affine_of(gen_b(n)),
                         affine_of(inv(gen_b(n)))};
    std::vector<AffineMap> frontier{AffineMap{0, NAdic::zero(n)}};
    seen.insert(key(frontier[0]));
    for (int level = 1; level <= radius; ++level) {
        std::vector<AffineMap> next;
        for (const auto& m : frontier)
            for (const auto& g : gens) {
                AffineMap c = compose(m, g);
                if (seen.insert(key(c)).second) next.push_back(c);
            }
        frontier = std::move(next);
    }
    return seen.size();
}

} // namespace

TEST_CASE("ball sizes and structure") {
    CHECK(ball(0, 2).elements.size() == 1);
    CHECK(ball(1, 2).elements.size() == 5);
    CHECK(ball(2, 2).elements.size() == 17);
    CHECK(ball(2, 2).elements.size() == ball_size_via_affine(2, 2));
    CHECK(ball(4, 3).elements.size() == ball_size_via_affine(4, 3));

    BallEnumeration B = ball(3, 2);
    CHECK(B.contains(identity(2)));
    for (const auto& g : B.elements) CHECK(B.contains(inv(g)));

    // deterministic order
    BallEnumeration B2 = ball(3, 2);
    CHECK(B.elements == B2.elements);
}

TEST_CASE("enumeration is a bijection anchored at the identity") {
    CHECK(enumerate_element(0, 2) == identity(2));
    CHECK(enumerate_prefix(1, 2)[0] == identity(2));

    auto prefix = enumerate_prefix(10000, 2);
    std::set<GroupElement> distinct(prefix.begin(), prefix.end());
    CHECK(distinct.size() == prefix.size());

    // prefix agrees with the single-index accessor
    for (std::uint64_t i : {0ULL, 1ULL, 2ULL, 17ULL, 999ULL})
        CHECK(prefix[i] == enumerate_element(i, 2));

    // the index map inverts the enumeration on a ball
    for (const auto& g : ball(3, 2).elements) {
        std::uint64_t i = enumerate_index(g);
        CHECK(enumerate_element(i, 2) == g);
    }

    // every ball(2) element shows up in a reasonable prefix
    std::set<GroupElement> found;
    BallEnumeration B = ball(2, 2);
    for (const auto& g : prefix)
        if (B.contains(g)) found.insert(g);
    CHECK(found.size() == B.elements.size());
}

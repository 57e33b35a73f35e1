#include "ordlab/cones.hpp"

#include <doctest.h>

#include <array>

using namespace ordlab;

namespace {

ConeDescriptor pinf_pp() { return make_cone(ConeTag::pinf_pp, std::nullopt); }
ConeDescriptor p_sqrt2(ConeTag t = ConeTag::p_plus) { return make_cone(t, BasePoint(make_sqrt(2))); }
ConeDescriptor q_at(const Rat& x, ConeTag t) { return make_cone(t, BasePoint(x)); }

} // namespace

TEST_CASE("membership basics across the ten types") {
    CHECK(member(pinf_pp(), gen_a(2)) == Member::yes);
    CHECK(member(pinf_pp(), inv(gen_a(2))) == Member::no);
    CHECK(member(make_cone(ConeTag::pinf_pm, std::nullopt), inv(gen_a(2))) == Member::yes);
    CHECK(member(make_cone(ConeTag::pinf_mp, std::nullopt), gen_b(2)) == Member::no);
    CHECK(member(make_cone(ConeTag::pinf_mp, std::nullopt), inv(gen_b(2))) == Member::yes);

    // the identity is never a member
    for (const auto& c : {pinf_pp(), p_sqrt2(), q_at(Rat(0), ConeTag::q_pp)})
        CHECK(member(c, identity(2)) == Member::no);

    // b pushes sqrt(2) down
    CHECK(member(p_sqrt2(ConeTag::p_plus), gen_b(2)) == Member::no);
    CHECK(member(p_sqrt2(ConeTag::p_minus), gen_b(2)) == Member::yes);

    // b fixes 0 and pushes 1 down: the tie decoration decides
    CHECK(member(q_at(Rat(0), ConeTag::q_pp), gen_b(2)) == Member::no);
    CHECK(member(q_at(Rat(0), ConeTag::q_pm), gen_b(2)) == Member::yes);
}

TEST_CASE("the slope shortcut agrees with the literal second clause") {
    // for elements fixing the base, membership in Q++ must equal the literal
    // test rho(g)(eps+1) > eps+1
    const Rat eps(1, 3);
    for (const auto& g : ball(6, 2).elements) {
        if (g.is_identity() || g.s == 0) continue;
        if (act(g, eps) != eps) continue;
        Rat moved = act(g, Rat(eps + 1));
        CHECK((member(q_at(eps, ConeTag::q_pp), g) == Member::yes) == (moved > eps + 1));
        CHECK((member(q_at(eps, ConeTag::q_pm), g) == Member::yes) == (moved < eps + 1));
    }
}

TEST_CASE("tag/base compatibility is validated") {
    CHECK_THROWS_AS(make_cone(ConeTag::p_plus, BasePoint(Rat(1, 3))), Error);
    CHECK_THROWS_AS(make_cone(ConeTag::q_pp, BasePoint(make_sqrt(2))), Error);
    CHECK_THROWS_AS(make_cone(ConeTag::pinf_pp, BasePoint(Rat(0))), Error);
    CHECK_THROWS_AS(make_cone(ConeTag::q_mm, std::nullopt), Error);
    CHECK_NOTHROW(make_cone(ConeTag::p_plus, BasePoint(sqrt_digit_stream(2, 2, 64))));
}

TEST_CASE("reverse complements membership") {
    for (const auto& c : {pinf_pp(), p_sqrt2(), q_at(Rat(1, 3), ConeTag::q_pp)}) {
        ConeDescriptor rc = reverse(c);
        CHECK(reverse(rc).tag == c.tag);
        for (const auto& g : ball(5, 2).elements) {
            if (g.is_identity()) continue;
            Member m = member(c, g), mr = member(rc, g);
            CHECK(m != mr);
        }
    }
    CHECK(reverse(pinf_pp()).tag == ConeTag::pinf_mm);
    CHECK(reverse(p_sqrt2()).tag == ConeTag::p_minus);
}

TEST_CASE("conjugation transports the base along the action") {
    // Pinf cones are fixed
    for (const auto& g : ball(4, 2).elements)
        CHECK(conjugate(pinf_pp(), g).tag == ConeTag::pinf_pp);

    ConeDescriptor moved = conjugate(p_sqrt2(), gen_b(2));
    const Quadratic* base = std::get_if<Quadratic>(&*moved.base);
    REQUIRE(base != nullptr);
    CHECK(base->u == Rat(0));
    CHECK(base->v == Rat(1, 2)); // sqrt(2)/2
    CHECK(base->d == 2);

    ConeDescriptor same = conjugate(p_sqrt2(), identity(2));
    CHECK(same.tag == p_sqrt2().tag);
    CHECK(*std::get_if<Quadratic>(&*same.base) == make_sqrt(2));

    // coherence: h in g(c) iff g^-1 h g in c
    BallEnumeration B = ball(3, 2);
    for (const auto& c : {pinf_pp(), p_sqrt2(), q_at(Rat(1, 3), ConeTag::q_mp)})
        for (const auto& g : B.elements) {
            ConeDescriptor cg = conjugate(c, g);
            for (const auto& h : B.elements)
                CHECK(member(cg, h) == member(c, mul(mul(inv(g), h), g)));
        }
}

TEST_CASE("cone axioms hold for descriptors and fail for frauds") {
    for (int n : {2, 3, 10}) {
        for (ConeTag t : {ConeTag::pinf_pp, ConeTag::pinf_mm})
            CHECK(cone_axioms_check(make_cone(t, std::nullopt), 4, n).pass);
        CHECK(cone_axioms_check(make_cone(ConeTag::p_plus, BasePoint(make_sqrt(2))), 4, n).pass);
        CHECK(cone_axioms_check(make_cone(ConeTag::q_mm, BasePoint(Rat(1, 3))), 4, n).pass);
    }

    // yes on everything: disjointness breaks
    AxiomReport r1 = cone_axioms_check([](const GroupElement&) { return Member::yes; }, 2, 2);
    CHECK_FALSE(r1.pass);
    CHECK(r1.violation.find("disjointness") != std::string::npos);

    // only s > 0: trichotomy breaks at a
    AxiomReport r2 = cone_axioms_check(
        [](const GroupElement& g) { return g.s > 0 ? Member::yes : Member::no; }, 2, 2);
    CHECK_FALSE(r2.pass);
    CHECK(r2.violation.find("trichotomy") != std::string::npos);

    // a finite perturbation of a genuine cone: swap a^2 with a^-2; the pair
    // survives disjointness and trichotomy but a * a lands outside
    AxiomReport r3 = cone_axioms_check(
        [](const GroupElement& g) {
            GroupElement a2{NAdic(2, 0, 2), 0}, am2{NAdic(-2, 0, 2), 0};
            if (g == a2) return Member::no;
            if (g == am2) return Member::yes;
            bool in = g.s > 0 || (g.s == 0 && g.r.sign() > 0);
            return in ? Member::yes : Member::no;
        },
        3, 2);
    CHECK_FALSE(r3.pass);
    CHECK(r3.violation.find("closure") != std::string::npos);
}

TEST_CASE("order_compare induces a left-invariant order") {
    ConeDescriptor c = pinf_pp();
    GroupElement a = gen_a(2), b = gen_b(2);
    CHECK(order_compare(c, a, a) == Order::equal);
    CHECK(order_compare(c, a, b) == Order::less); // a^-1 b has s = 1
    CHECK(order_compare(c, mul(b, a), mul(b, b)) == Order::less);

    BallEnumeration B = ball(3, 2);
    for (const auto& f : B.elements)
        for (const auto& g : B.elements)
            for (const auto& h : {gen_a(2), gen_b(2), inv(gen_a(2))}) {
                Order plain = order_compare(c, g, h);
                Order shifted = order_compare(c, mul(f, g), mul(f, h));
                CHECK(plain == shifted);
            }
}

TEST_CASE("cone_from_action reproduces Q cones") {
    const std::array<BasePoint, 2> pts01 = {BasePoint(Rat(0)), BasePoint(Rat(1))};
    CHECK(cone_from_action(pts01, gen_b(2)) == Member::no);
    CHECK(cone_from_action(pts01, identity(2)) == Member::no);

    const std::array<BasePoint, 1> s2 = {BasePoint(make_sqrt(2))};
    CHECK(cone_from_action(s2, gen_a(2)) == Member::yes);

    for (Rat eps : {Rat(0), Rat(1, 3)}) {
        const std::array<BasePoint, 2> pts = {BasePoint(eps), BasePoint(eps + 1)};
        ConeDescriptor qpp = q_at(eps, ConeTag::q_pp);
        for (const auto& g : ball(5, 2).elements) {
            if (g.is_identity()) continue;
            CHECK(cone_from_action(pts, g) == member(qpp, g));
        }
    }

    const std::array<BasePoint, 1> origin = {BasePoint(Rat(0))};
    CHECK_THROWS_AS(cone_from_action(origin, gen_b(2)), Error);
}

TEST_CASE("identify classifies oracles at desk scale") {
    IdentifyResult pinf = identify(oracle_of(pinf_pp()), 3, 4, 2);
    CHECK(pinf.tags == std::vector<ConeTag>{ConeTag::pinf_pp});

    IdentifyResult q0 = identify(oracle_of(q_at(Rat(0), ConeTag::q_pp)), 6, 4, 2);
    REQUIRE(q0.exact_base.has_value());
    CHECK(*q0.exact_base == Rat(0));
    CHECK(q0.tags == std::vector<ConeTag>{ConeTag::q_pp});

    IdentifyResult qm = identify(oracle_of(q_at(Rat(0), ConeTag::q_mm)), 6, 4, 2);
    REQUIRE(qm.exact_base.has_value());
    CHECK(*qm.exact_base == Rat(0));
    CHECK(qm.tags == std::vector<ConeTag>{ConeTag::q_mm});

    IdentifyResult p2 = identify(oracle_of(p_sqrt2()), 8, 4, 2);
    CHECK(p2.tags == std::vector<ConeTag>{ConeTag::p_plus});
    REQUIRE(p2.interval.has_value());
    CHECK(compare_to_rat(BasePoint(make_sqrt(2)), p2.interval->first) == Sign::positive);
    CHECK(compare_to_rat(BasePoint(make_sqrt(2)), p2.interval->second) == Sign::negative);
    CHECK(p2.interval->second - p2.interval->first <= Rat(1, 16));

    CHECK_THROWS_AS(identify([](const GroupElement&) { return Member::yes; }, 2, 4, 2), Error);
}

TEST_CASE("order_compare propagates unknown answers") {
    DigitStream st = sqrt_digit_stream(2, 2, 1); // one digit is not enough
    ConeDescriptor c = make_cone(ConeTag::p_plus, BasePoint(st));
    GroupElement g{NAdic(17, 4, 2), 2}; // fixed point 17/12, close to sqrt(2)
    CHECK(member(c, g) == Member::unknown);
    CHECK(order_compare(c, identity(2), g) == Order::unordered);
}

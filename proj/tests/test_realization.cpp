#include "ordlab/realization.hpp"

#include <doctest.h>

using namespace ordlab;

namespace {

ConeDescriptor pinf_pp() { return make_cone(ConeTag::pinf_pp, std::nullopt); }

} // namespace

TEST_CASE("stage of size one tags the identity with zero") {
    RealizationStage st = build_stage(pinf_pp(), 1, 2);
    CHECK(st.elems.size() == 1);
    CHECK(st.tags[0] == Rat(0));
    CHECK(check_free_orbit(st).pass);
}

TEST_CASE("new maxima, minima and midpoints over an explicit enumeration") {
    GroupElement id = identity(2), a = gen_a(2), A = inv(gen_a(2));

    RealizationStage st = build_stage(pinf_pp(), {id, a, A});
    CHECK(st.tags == std::vector<Rat>{Rat(0), Rat(1), Rat(-1)});

    // a^2 comes strictly after a, new maximum again
    RealizationStage st2 = build_stage(pinf_pp(), {id, a, mul(a, a)});
    CHECK(st2.tags == std::vector<Rat>{Rat(0), Rat(1), Rat(2)});

    // inserting between two tagged neighbours takes the midpoint
    RealizationStage st3 = build_stage(pinf_pp(), {id, mul(a, a), a});
    CHECK(st3.tags == std::vector<Rat>{Rat(0), Rat(1), Rat(1, 2)});
}

TEST_CASE("partial action reads tags through the group product") {
    GroupElement id = identity(2), a = gen_a(2), A = inv(gen_a(2));
    RealizationStage st = build_stage(pinf_pp(), {id, a, A});

    for (std::size_t i = 0; i < st.elems.size(); ++i)
        CHECK(partial_act(st, id, i) == st.tags[i]);

    CHECK(partial_act(st, a, 0) == Rat(1));  // a * id = a
    CHECK(partial_act(st, a, 2) == Rat(0));  // a * a^-1 = id
    CHECK_FALSE(partial_act(st, a, 1).has_value()); // a^2 untagged

    // monotone where defined
    RealizationStage big = build_stage(pinf_pp(), 32, 2);
    for (const auto& g : {gen_a(2), gen_b(2), inv(gen_b(2))}) {
        for (std::size_t i = 0; i < big.elems.size(); ++i) {
            for (std::size_t j = 0; j < big.elems.size(); ++j) {
                auto ti = partial_act(big, g, i);
                auto tj = partial_act(big, g, j);
                if (!ti || !tj) continue;
                if (big.tags[i] < big.tags[j]) CHECK(*ti < *tj);
            }
        }
    }
}

TEST_CASE("the recovered cone agrees with membership") {
    for (int n : {2, 3}) {
        for (const auto& c :
             {make_cone(ConeTag::pinf_pm, std::nullopt),
              make_cone(ConeTag::p_plus, BasePoint(make_sqrt(2))),
              make_cone(ConeTag::q_mp, BasePoint(Rat(1, 3)))}) {
            RealizationStage st = build_stage(c, 32, n);
            CHECK(*recover_cone(st, identity(n)) == false);
            for (const auto& g : st.elems) {
                if (g.is_identity()) continue;
                CHECK(*recover_cone(st, g) == (member(c, g) == Member::yes));
            }
            CHECK_FALSE(recover_cone(st, GroupElement{NAdic(977, 0, n), 9}).has_value());
        }
    }
}

TEST_CASE("tags never move as the stage grows") {
    ConeDescriptor c = make_cone(ConeTag::q_pp, BasePoint(Rat(1, 3)));
    RealizationStage small = build_stage(c, 16, 2);
    RealizationStage big = build_stage(c, 48, 2);
    for (std::size_t i = 0; i < small.elems.size(); ++i) {
        CHECK(big.elems[i] == small.elems[i]);
        CHECK(big.tags[i] == small.tags[i]);
    }
}

TEST_CASE("free orbit check flags corrupted stages") {
    RealizationStage st = build_stage(pinf_pp(), 8, 2);
    CHECK(check_free_orbit(st).pass);

    RealizationStage bad = st;
    bad.tags[3] = bad.tags[1];
    FreeOrbitReport rep = check_free_orbit(bad);
    CHECK_FALSE(rep.pass);
    CHECK(!rep.violation.empty());

    RealizationStage tiny = build_stage(pinf_pp(), 1, 2);
    CHECK(check_free_orbit(tiny).pass);
}

TEST_CASE("stream-based cones surface budget exhaustion") {
    ConeDescriptor c = make_cone(ConeTag::p_plus, BasePoint(sqrt_digit_stream(2, 2, 1)));
    GroupElement close{NAdic(17, 4, 2), 2}; // fixes 17/12, one digit cannot separate
    CHECK_THROWS_AS(build_stage(c, {identity(2), close}), BudgetError);
}

TEST_CASE("enumeration misuse is rejected") {
    CHECK_THROWS_AS(build_stage(pinf_pp(), 0, 2), Error);
    CHECK_THROWS_AS(build_stage(pinf_pp(), {gen_a(2)}), Error);
    CHECK_THROWS_AS(build_stage(pinf_pp(), {identity(2), gen_a(2), gen_a(2)}), Error);
}

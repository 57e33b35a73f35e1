#include "ordlab/checks.hpp"

#include "ordlab/action.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace ordlab {

namespace {

CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), false, std::move(detail)};
}
CheckResult ok(std::string name, std::string detail) {
    return {std::move(name), true, std::move(detail)};
}

std::string cone_label(const ConeDescriptor& c) {
    std::string s = tag_name(c.tag);
    if (c.base) {
        if (const Rat* r = std::get_if<Rat>(&*c.base))
            s += "@" + rat_to_string(*r);
        else if (const Quadratic* q = std::get_if<Quadratic>(&*c.base))
            s += "@" + rat_to_string(q->u) + "+" + rat_to_string(q->v) + "*sqrt(" + q->d.str() + ")";
    }
    return s;
}

} // namespace

std::vector<ConeDescriptor> sampled_cones(int n) {
    (void)n;
    std::vector<ConeDescriptor> cones;
    for (ConeTag t : {ConeTag::pinf_pp, ConeTag::pinf_pm, ConeTag::pinf_mp, ConeTag::pinf_mm})
        cones.push_back(make_cone(t, std::nullopt));
    for (int d : {2, 3})
        for (ConeTag t : {ConeTag::p_plus, ConeTag::p_minus})
            cones.push_back(make_cone(t, BasePoint(make_sqrt(d))));
    for (Rat base : {Rat(0), Rat(1, 3), Rat(5, 6)})
        for (ConeTag t : {ConeTag::q_pp, ConeTag::q_pm, ConeTag::q_mp, ConeTag::q_mm})
            cones.push_back(make_cone(t, BasePoint(base)));
    return cones;
}

std::vector<ConeDescriptor> representative_cones(int n) {
    (void)n;
    std::vector<ConeDescriptor> cones;
    for (ConeTag t : {ConeTag::pinf_pp, ConeTag::pinf_pm, ConeTag::pinf_mp, ConeTag::pinf_mm})
        cones.push_back(make_cone(t, std::nullopt));
    for (ConeTag t : {ConeTag::p_plus, ConeTag::p_minus})
        cones.push_back(make_cone(t, BasePoint(make_sqrt(2))));
    for (ConeTag t : {ConeTag::q_pp, ConeTag::q_pm, ConeTag::q_mp, ConeTag::q_mm})
        cones.push_back(make_cone(t, BasePoint(Rat(1, 3))));
    return cones;
}

CheckResult check_cone_axioms(int n, int L) {
    const std::string name = "cone-axioms(n=" + std::to_string(n) + ",L=" + std::to_string(L) + ")";
    long long checked = 0;
    for (const auto& c : sampled_cones(n)) {
        AxiomReport rep = cone_axioms_check(c, L, n);
        checked += rep.checked;
        if (!rep.pass) return fail(name, cone_label(c) + ": " + rep.violation);
        if (rep.inconclusive) return fail(name, cone_label(c) + ": inconclusive answers");
    }
    return ok(name, std::to_string(checked) + " memberships across " +
                        std::to_string(sampled_cones(n).size()) + " cones");
}

namespace {

// Membership separation within the ball; falls back to separation through
// the induced orders on ball pairs (g^-1 h ranges over a radius-2L ball), so
// deep stabilizer elements can still tell twin Q cones apart.
bool separate_pair(const ConeDescriptor& a, const ConeDescriptor& b, const BallEnumeration& B,
                   bool& used_pairs) {
    for (const auto& g : B.elements) {
        Member ma = member(a, g), mb = member(b, g);
        if (ma != Member::unknown && mb != Member::unknown && ma != mb) return true;
    }
    // Twin Q cones at a common base differ exactly on the stabilizer of the
    // base; look for a stabilizer power expressible as u^-1 v with u, v in
    // the ball.
    if (tag_is_q(a.tag) && tag_is_q(b.tag) && a.base && b.base) {
        const Rat* ra = std::get_if<Rat>(&*a.base);
        const Rat* rb = std::get_if<Rat>(&*b.base);
        if (ra && rb && *ra == *rb) {
            int n = B.elements.front().base();
            GroupElement gen = stabilizer_generator(*ra, n);
            for (int e : {1, -1, 2, -2}) {
                GroupElement w = pow(gen, e);
                if (member(a, w) == member(b, w)) continue;
                for (const auto& u : B.elements) {
                    if (B.contains(mul(u, w))) {
                        used_pairs = true;
                        return true;
                    }
                }
            }
        }
    }
    return false;
}

} // namespace

CheckResult check_distinctness(int n, int L) {
    const std::string name =
        "distinctness(n=" + std::to_string(n) + ",L=" + std::to_string(L) + ")";
    auto cones = sampled_cones(n);
    const BallEnumeration B = ball(L, n);
    int pair_separated = 0;
    for (std::size_t i = 0; i < cones.size(); ++i) {
        for (std::size_t j = i + 1; j < cones.size(); ++j) {
            bool used_pairs = false;
            if (!separate_pair(cones[i], cones[j], B, used_pairs))
                return fail(name, "no ball(" + std::to_string(L) + ") separator for " +
                                      cone_label(cones[i]) + " vs " + cone_label(cones[j]));
            if (used_pairs) ++pair_separated;
        }
    }
    std::string detail = std::to_string(cones.size() * (cones.size() - 1) / 2) + " pairs";
    if (pair_separated > 0)
        detail += " (" + std::to_string(pair_separated) + " needed order-pair separation)";
    return ok(name, detail);
}

CheckResult check_conjugation_transport(int n, int pair_radius, int fixed_radius) {
    const std::string name = "conjugation-transport(n=" + std::to_string(n) + ")";
    const BallEnumeration B = ball(pair_radius, n);
    for (const auto& c : sampled_cones(n)) {
        for (const auto& g : B.elements) {
            ConeDescriptor cg = conjugate(c, g);
            const GroupElement gi = inv(g);
            for (const auto& h : B.elements) {
                Member lhs = member(cg, h);
                Member rhs = member(c, mul(mul(gi, h), g));
                if (lhs != rhs)
                    return fail(name, cone_label(c) + ": transport mismatch at g='" +
                                          print_word(g) + "', h='" + print_word(h) + "'");
            }
        }
    }
    // The four bi-orderings must be conjugation-fixed: membership is blind to
    // conjugation by any element of the larger ball.
    const BallEnumeration Bfix = ball(fixed_radius, n);
    const BallEnumeration Bsmall = ball(std::max(2, pair_radius - 1), n);
    for (ConeTag t : {ConeTag::pinf_pp, ConeTag::pinf_pm, ConeTag::pinf_mp, ConeTag::pinf_mm}) {
        ConeDescriptor c = make_cone(t, std::nullopt);
        for (const auto& g : Bfix.elements) {
            if (conjugate(c, g).tag != t)
                return fail(name, tag_name(t) + " moved by conjugation");
            const GroupElement gi = inv(g);
            for (const auto& h : Bsmall.elements) {
                if (member(c, h) != member(c, mul(mul(gi, h), g)))
                    return fail(name, tag_name(t) + " not conjugation-invariant at g='" +
                                          print_word(g) + "', h='" + print_word(h) + "'");
            }
        }
    }
    return ok(name, "coherence on ball(" + std::to_string(pair_radius) + ")^2, bi-orderings fixed on ball(" +
                        std::to_string(fixed_radius) + ")");
}

CheckResult check_stabilizer_lemma(int n, int radius) {
    const std::string name = "stabilizer-lemma(n=" + std::to_string(n) + ")";
    const BallEnumeration B = ball(radius, n);

    for (Rat x : {Rat(0), Rat(1, 3), Rat(1, 7), Rat(5, 6)}) {
        GroupElement gen = stabilizer_generator(x, n);
        if (act(gen, x) != x)
            return fail(name, "generator for x=" + rat_to_string(x) + " does not fix x");
        if (gen.s >= 0) return fail(name, "generator for x=" + rat_to_string(x) + " has s >= 0");

        std::set<GroupElement> powers;
        const long long span = radius + 2;
        for (long long e = -span; e <= span; ++e) {
            GroupElement p = pow(gen, e);
            if (B.contains(p)) powers.insert(p);
        }
        for (const auto& g : B.elements) {
            const bool fixes = !g.is_identity() ? act(g, x) == x : true;
            const bool is_power = powers.count(g) != 0;
            if (fixes != is_power)
                return fail(name, "x=" + rat_to_string(x) + ": ball(" + std::to_string(radius) +
                                      ") fixer mismatch at '" + print_word(g) + "'");
        }
    }

    const Quadratic irrationals[] = {make_sqrt(2), make_sqrt(3),
                                     Quadratic(Rat(1, 2), Rat(1, 2), 5)}; // golden ratio
    for (const auto& eps : irrationals) {
        for (const auto& g : B.elements) {
            if (g.is_identity()) continue;
            if (sign_affine_form(BasePoint(eps), g) == Sign::zero)
                return fail(name, "non-trivial element fixes an irrational point: '" +
                                      print_word(g) + "'");
        }
    }
    return ok(name, "rational stabilizers cyclic, irrational stabilizers trivial on ball(" +
                        std::to_string(radius) + ")");
}

namespace {

Rat random_rational(std::mt19937_64& rng, long long max_den) {
    long long q = 1 + static_cast<long long>(rng() % static_cast<std::uint64_t>(max_den));
    long long p = static_cast<long long>(rng() % static_cast<std::uint64_t>(4 * max_den + 1)) -
                  2 * max_den;
    return Rat(p, q);
}

} // namespace

CheckResult check_reduction(int n, int count, std::uint64_t seed) {
    const std::string name = "reduction(n=" + std::to_string(n) + ")";
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(n));
    const BallEnumeration B = ball(5, n);

    for (int it = 0; it < count; ++it) {
        Rat x = random_rational(rng, 64);
        const GroupElement& g = B.elements[rng() % B.elements.size()];
        RoundtripReport rep = reduction_roundtrip_check(x, g);
        if (!rep.pass)
            return fail(name, "roundtrip #" + std::to_string(it) + ": " + rep.detail);
    }

    // The algebraic decider and the digit decider must agree, in both
    // directions, on equivalent and generic pairs alike.
    for (int it = 0; it < count; ++it) {
        Rat x = random_rational(rng, 64);
        Rat y;
        if (it % 2 == 0) {
            y = act(B.elements[rng() % B.elements.size()], x);
        } else {
            y = random_rational(rng, 64);
        }
        auto alg = orbit_witness(BasePoint(x), BasePoint(y), n);
        TailDecision dig = tail_equivalent(reduce(BasePoint(x), n), reduce(BasePoint(y), n));
        const bool alg_yes = alg.has_value();
        const bool dig_yes = dig.kind == TailDecision::Kind::witness;
        if (alg_yes != dig_yes)
            return fail(name, "deciders disagree on x=" + rat_to_string(x) +
                                  ", y=" + rat_to_string(y));
        if (alg_yes && act(*alg, x) != y)
            return fail(name, "algebraic witness does not map x to y");
        if (dig_yes && act(witness_to_group(x, y, dig.w, n), x) != y)
            return fail(name, "digit witness does not map x to y");
    }
    return ok(name, std::to_string(count) + " roundtrips + " + std::to_string(count) +
                        " decider agreements");
}

CheckResult check_realization(int n, std::size_t stage) {
    const std::string name =
        "realization(n=" + std::to_string(n) + ",N=" + std::to_string(stage) + ")";
    for (const auto& c : representative_cones(n)) {
        RealizationStage st = build_stage(c, stage, n);
        if (st.tags[0] != 0) return fail(name, cone_label(c) + ": t(id) != 0");

        for (std::size_t i = 0; i < st.elems.size(); ++i) {
            for (std::size_t j = i + 1; j < st.elems.size(); ++j) {
                Order rel = order_compare(c, st.elems[i], st.elems[j]);
                bool tag_less = st.tags[i] < st.tags[j];
                if ((rel == Order::less) != tag_less)
                    return fail(name, cone_label(c) + ": order embedding broken at (" +
                                          std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }

        FreeOrbitReport fo = check_free_orbit(st);
        if (!fo.pass) return fail(name, cone_label(c) + ": " + fo.violation);

        for (const auto& g : st.elems) {
            auto rec = recover_cone(st, g);
            if (!rec) return fail(name, "tagged element reported untagged");
            Member m = member(c, g);
            if (g.is_identity()) {
                if (*rec) return fail(name, "identity recovered as positive");
                continue;
            }
            if ((m == Member::yes) != *rec)
                return fail(name, cone_label(c) + ": recover_cone disagrees with member at '" +
                                      print_word(g) + "'");
        }

        // Conjugate recovery: g lies in the h-conjugate cone iff the action
        // moves the tag of h^-1 upward.
        for (const auto& h : st.elems) {
            const GroupElement hi = inv(h);
            auto t_hi = st.tag_of(hi);
            if (!t_hi) continue;
            for (const auto& g : st.elems) {
                if (g.is_identity()) continue;
                auto t_g_hi = st.tag_of(mul(g, hi));
                if (!t_g_hi) continue;
                const bool via_tags = *t_g_hi > *t_hi;
                Member via_member = member(c, mul(mul(h, g), hi));
                if ((via_member == Member::yes) != via_tags)
                    return fail(name, cone_label(c) + ": conjugate recovery mismatch at h='" +
                                          print_word(h) + "', g='" + print_word(g) + "'");
            }
        }
    }
    return ok(name, "10 cones, stage " + std::to_string(stage));
}

CheckResult check_identification(int n, int radius, int precision) {
    const std::string name = "identification(n=" + std::to_string(n) + ")";

    ConeDescriptor p_sqrt2 = make_cone(ConeTag::p_plus, BasePoint(make_sqrt(2)));
    IdentifyResult r1 = identify(oracle_of(p_sqrt2), radius, precision, n);
    if (r1.tags != std::vector<ConeTag>{ConeTag::p_plus})
        return fail(name, "P+@sqrt2 not identified as {P+}");
    if (r1.exact_base) return fail(name, "P+@sqrt2 reported a rational base");
    if (!r1.interval) return fail(name, "P+@sqrt2 returned no interval");
    const auto& [lo, hi] = *r1.interval;
    BasePoint s2 = BasePoint(make_sqrt(2));
    if (compare_to_rat(s2, lo) == Sign::negative || compare_to_rat(s2, hi) == Sign::positive)
        return fail(name, "interval [" + rat_to_string(lo) + "," + rat_to_string(hi) +
                              "] misses sqrt(2)");
    if (n == 2) {
        Rat width = hi - lo;
        if (width > Rat(1, 16))
            return fail(name, "interval width " + rat_to_string(width) + " exceeds 2^-4");
    }

    ConeDescriptor q13 = make_cone(ConeTag::q_pp, BasePoint(Rat(1, 3)));
    IdentifyResult r2 = identify(oracle_of(q13), radius, precision, n);
    if (!r2.exact_base || *r2.exact_base != Rat(1, 3))
        return fail(name, "Q++@1/3 base not recovered exactly");
    if (r2.tags != std::vector<ConeTag>{ConeTag::q_pp})
        return fail(name, "Q++@1/3 tag set is not {Q++}");

    IdentifyResult r3 = identify(oracle_of(make_cone(ConeTag::pinf_pp, std::nullopt)), 3, precision, n);
    if (r3.tags != std::vector<ConeTag>{ConeTag::pinf_pp})
        return fail(name, "Pinf++ pattern not matched at radius 3");

    return ok(name, "P+@sqrt2 bracketed, Q++@1/3 pinned, Pinf++ matched");
}

CheckResult check_digit_coherence(int n, int max_digits) {
    const std::string name = "digit-coherence(n=" + std::to_string(n) + ")";
    const Rat samples[] = {Rat(1, 3), Rat(5, 4), Rat(1, 7),  Rat(5, 6),
                           Rat(22, 7), Rat(1, 64), Rat(-1, 3), Rat(355, 113)};
    for (const Rat& x : samples) {
        BasePoint p = BasePoint(x);
        std::vector<int> ds = digits(p, static_cast<std::size_t>(max_digits), n);
        Rat trunc(0);
        Rat scale(1);
        const Rat f = rat_frac(x);
        for (int k = 1; k <= max_digits; ++k) {
            scale /= n;
            trunc += Rat(ds[static_cast<std::size_t>(k - 1)]) * scale;
            if (trunc > f || f > trunc + scale)
                return fail(name, "truncation at k=" + std::to_string(k) + " does not bracket " +
                                      rat_to_string(x));
        }
        RationalExpansion e = rational_expansion(x, n);
        BigInt qhat = coprime_part(denominator(x), n);
        long long bound = qhat == 1 ? 1 : multiplicative_order(n, qhat);
        if (qhat != 1 && bound % static_cast<long long>(e.period.size()) != 0)
            return fail(name, "period of " + rat_to_string(x) + " does not divide ord(n mod " +
                                  qhat.str() + ")");
    }
    // Same bracketing for an irrational: exact comparisons against the grid.
    BasePoint s2 = BasePoint(make_sqrt(2));
    std::vector<int> ds = digits(s2, static_cast<std::size_t>(max_digits), n);
    Rat trunc(0), scale(1);
    for (int k = 1; k <= max_digits; ++k) {
        scale /= n;
        trunc += Rat(ds[static_cast<std::size_t>(k - 1)]) * scale;
        Rat lo = trunc + 1; // fractional part of sqrt(2) is sqrt(2) - 1
        if (compare_to_rat(s2, lo) == Sign::negative ||
            compare_to_rat(s2, lo + scale) == Sign::positive)
            return fail(name, "sqrt(2) truncation at k=" + std::to_string(k) + " out of bracket");
    }
    return ok(name, std::to_string(max_digits) + " digits bracketed, periods divide the order bound");
}

std::vector<CheckResult> run_all_checks(const CheckConfig& cfg) {
    std::vector<CheckResult> out;
    out.push_back(check_cone_axioms(cfg.n, cfg.radius));
    out.push_back(check_distinctness(cfg.n, std::max(cfg.radius, 8)));
    out.push_back(check_conjugation_transport(cfg.n, 4, 6));
    out.push_back(check_stabilizer_lemma(cfg.n, 6));
    out.push_back(check_reduction(cfg.n, cfg.samples, cfg.seed));
    out.push_back(check_realization(cfg.n, cfg.stage));
    out.push_back(check_identification(cfg.n, 8, 4));
    out.push_back(check_digit_coherence(cfg.n, 64));
    return out;
}

} // namespace ordlab

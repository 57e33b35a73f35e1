#include "ordlab/cones.hpp"

#include <algorithm>
#include <map>

namespace ordlab {

bool tag_is_pinf(ConeTag t) {
    return t == ConeTag::pinf_pp || t == ConeTag::pinf_pm || t == ConeTag::pinf_mp ||
           t == ConeTag::pinf_mm;
}
bool tag_is_p(ConeTag t) { return t == ConeTag::p_plus || t == ConeTag::p_minus; }
bool tag_is_q(ConeTag t) {
    return t == ConeTag::q_pp || t == ConeTag::q_pm || t == ConeTag::q_mp || t == ConeTag::q_mm;
}
bool tag_needs_base(ConeTag t) { return !tag_is_pinf(t); }

std::string tag_name(ConeTag t) {
    switch (t) {
    case ConeTag::pinf_pp: return "Pinf++";
    case ConeTag::pinf_pm: return "Pinf+-";
    case ConeTag::pinf_mp: return "Pinf-+";
    case ConeTag::pinf_mm: return "Pinf--";
    case ConeTag::p_plus: return "P+";
    case ConeTag::p_minus: return "P-";
    case ConeTag::q_pp: return "Q++";
    case ConeTag::q_pm: return "Q+-";
    case ConeTag::q_mp: return "Q-+";
    case ConeTag::q_mm: return "Q--";
    }
    throw Error("tag_name: bad tag");
}

std::optional<ConeTag> tag_from_name(const std::string& raw) {
    std::string s;
    // tolerate the unicode spelling of the bi-ordering tags
    for (std::size_t i = 0; i < raw.size();) {
        if (raw.compare(i, 3, "\xe2\x88\x9e") == 0) { // infinity sign
            s += "inf";
            i += 3;
        } else {
            s += raw[i++];
        }
    }
    static const std::pair<const char*, ConeTag> names[] = {
        {"Pinf++", ConeTag::pinf_pp}, {"Pinf+-", ConeTag::pinf_pm},
        {"Pinf-+", ConeTag::pinf_mp}, {"Pinf--", ConeTag::pinf_mm},
        {"P+", ConeTag::p_plus},      {"P-", ConeTag::p_minus},
        {"Q++", ConeTag::q_pp},       {"Q+-", ConeTag::q_pm},
        {"Q-+", ConeTag::q_mp},       {"Q--", ConeTag::q_mm},
    };
    for (const auto& [name, tag] : names)
        if (s == name) return tag;
    return std::nullopt;
}

ConeDescriptor make_cone(ConeTag tag, std::optional<BasePoint> base) {
    if (tag_is_pinf(tag)) {
        if (base) throw Error("tag/base mismatch: " + tag_name(tag) + " takes no base point");
        return {tag, std::nullopt};
    }
    if (!base) throw Error("tag/base mismatch: " + tag_name(tag) + " requires a base point");
    const bool rational = is_rational(*base);
    if (tag_is_p(tag) && rational)
        throw Error("tag/base mismatch: " + tag_name(tag) + " requires an irrational base");
    if (tag_is_q(tag) && !rational)
        throw Error("tag/base mismatch: " + tag_name(tag) + " requires a rational base");
    return {tag, std::move(base)};
}

namespace {

bool pinf_member(ConeTag tag, const GroupElement& g) {
    const int rs = g.r.sign();
    switch (tag) {
    case ConeTag::pinf_pp: return g.s > 0 || (g.s == 0 && rs > 0);
    case ConeTag::pinf_pm: return g.s > 0 || (g.s == 0 && rs < 0);
    case ConeTag::pinf_mp: return g.s < 0 || (g.s == 0 && rs > 0);
    case ConeTag::pinf_mm: return g.s < 0 || (g.s == 0 && rs < 0);
    default: throw Error("pinf_member: not a bi-ordering tag");
    }
}

// Second decoration of a Q tag: does the tie at the base break upward?
bool q_second_plus(ConeTag t) { return t == ConeTag::q_pp || t == ConeTag::q_mp; }
bool q_first_plus(ConeTag t) { return t == ConeTag::q_pp || t == ConeTag::q_pm; }

} // namespace

Member member(const ConeDescriptor& c, const GroupElement& g) {
    if (g.is_identity()) return Member::no;
    if (tag_is_pinf(c.tag)) return pinf_member(c.tag, g) ? Member::yes : Member::no;

    const Sign sg = sign_affine_form(*c.base, g);
    if (sg == Sign::unknown) return Member::unknown;

    if (tag_is_p(c.tag)) {
        if (sg == Sign::zero)
            throw Error("member: P-type base is fixed by a non-identity element "
                        "(base is rational?)");
        const bool up = sg == Sign::positive;
        return (c.tag == ConeTag::p_plus) == up ? Member::yes : Member::no;
    }

    // Q tags. Tie at the base: rho(g) fixes eps, so the displacement at any
    // other point has the sign of (slope - 1); slope > 1 iff s < 0.
    if (sg == Sign::zero) {
        if (g.s == 0) throw Error("member: non-identity translation fixing the base");
        const bool second_up = g.s < 0;
        return second_up == q_second_plus(c.tag) ? Member::yes : Member::no;
    }
    const bool up = sg == Sign::positive;
    return up == q_first_plus(c.tag) ? Member::yes : Member::no;
}

ConeDescriptor reverse(const ConeDescriptor& c) {
    switch (c.tag) {
    case ConeTag::pinf_pp: return {ConeTag::pinf_mm, c.base};
    case ConeTag::pinf_pm: return {ConeTag::pinf_mp, c.base};
    case ConeTag::pinf_mp: return {ConeTag::pinf_pm, c.base};
    case ConeTag::pinf_mm: return {ConeTag::pinf_pp, c.base};
    case ConeTag::p_plus: return {ConeTag::p_minus, c.base};
    case ConeTag::p_minus: return {ConeTag::p_plus, c.base};
    case ConeTag::q_pp: return {ConeTag::q_mm, c.base};
    case ConeTag::q_pm: return {ConeTag::q_mp, c.base};
    case ConeTag::q_mp: return {ConeTag::q_pm, c.base};
    case ConeTag::q_mm: return {ConeTag::q_pp, c.base};
    }
    throw Error("reverse: bad tag");
}

ConeDescriptor conjugate(const ConeDescriptor& c, const GroupElement& g) {
    if (tag_is_pinf(c.tag)) return c;
    return {c.tag, act(g, *c.base)};
}

ConeOracle oracle_of(const ConeDescriptor& c) {
    return [c](const GroupElement& g) { return member(c, g); };
}

AxiomReport cone_axioms_check(const ConeOracle& o, int L, int n) {
    AxiomReport rep;
    const BallEnumeration B = ball(L, n);
    const GroupElement id = identity(n);

    std::vector<Member> ans(B.elements.size(), Member::no);
    for (std::size_t i = 0; i < B.elements.size(); ++i) {
        if (B.elements[i] == id) continue;
        ans[i] = o(B.elements[i]);
        if (ans[i] == Member::unknown) rep.inconclusive = true;
        ++rep.checked;
    }
    auto answer = [&](const GroupElement& g) -> Member {
        if (g == id) return Member::no;
        return ans[static_cast<std::size_t>(B.index.at(g))];
    };

    // Disjointness and trichotomy, paired through inverses.
    for (const auto& g : B.elements) {
        if (g == id) continue;
        Member a = answer(g), ai = answer(inv(g));
        if (a == Member::unknown || ai == Member::unknown) continue;
        if (a == Member::yes && ai == Member::yes) {
            rep.pass = false;
            rep.violation = "disjointness: '" + print_word(g) + "' and its inverse are both members";
            return rep;
        }
        if (a == Member::no && ai == Member::no) {
            rep.pass = false;
            rep.violation = "trichotomy: neither '" + print_word(g) + "' nor its inverse is a member";
            return rep;
        }
    }

    // Closure under products that stay in the ball.
    for (std::size_t i = 0; i < B.elements.size(); ++i) {
        if (ans[i] != Member::yes) continue;
        for (std::size_t j = 0; j < B.elements.size(); ++j) {
            if (ans[j] != Member::yes) continue;
            GroupElement p = mul(B.elements[i], B.elements[j]);
            if (p == id || !B.contains(p)) continue;
            Member mp = answer(p);
            if (mp == Member::unknown) {
                rep.inconclusive = true;
            } else if (mp == Member::no) {
                rep.pass = false;
                rep.violation = "closure: '" + print_word(B.elements[i]) + "' * '" +
                                print_word(B.elements[j]) + "' is not a member";
                return rep;
            }
        }
    }
    return rep;
}

AxiomReport cone_axioms_check(const ConeDescriptor& c, int L, int n) {
    return cone_axioms_check(oracle_of(c), L, n);
}

Order order_compare(const ConeDescriptor& c, const GroupElement& g, const GroupElement& h) {
    if (g == h) return Order::equal;
    switch (member(c, mul(inv(g), h))) {
    case Member::yes: return Order::less;
    case Member::no: return Order::greater;
    default: return Order::unordered;
    }
}

Member cone_from_action(std::span<const BasePoint> points, const GroupElement& g) {
    if (g.is_identity()) return Member::no;
    for (const auto& pt : points) {
        switch (sign_affine_form(pt, g)) {
        case Sign::positive: return Member::yes;
        case Sign::negative: return Member::no;
        case Sign::unknown: return Member::unknown;
        case Sign::zero: break; // fixed, try the next point
        }
    }
    throw Error("cone_from_action: every supplied point is fixed by '" + print_word(g) + "'");
}

namespace {

Rat grid_floor(const Rat& x, int n, int precision) {
    BigInt scale = int_pow(n, precision);
    return Rat(rat_floor(x * Rat(scale)), scale);
}

Rat grid_ceil(const Rat& x, int n, int precision) {
    BigInt scale = int_pow(n, precision);
    return Rat(-rat_floor(-x * Rat(scale)), scale);
}

} // namespace

IdentifyResult identify(const ConeOracle& o, int L, int precision, int n) {
    if (L < 1) throw Error("identify: radius must be >= 1");
    const BallEnumeration B = ball(L, n);
    const GroupElement id = identity(n);

    std::vector<Member> ans(B.elements.size(), Member::no);
    bool any_unknown = false;
    for (std::size_t i = 0; i < B.elements.size(); ++i) {
        if (B.elements[i] == id) continue;
        ans[i] = o(B.elements[i]);
        if (ans[i] == Member::unknown) any_unknown = true;
    }
    auto answer = [&](const GroupElement& g) -> Member {
        if (g == id) return Member::no;
        return ans[static_cast<std::size_t>(B.index.at(g))];
    };

    for (const auto& g : B.elements) {
        if (g == id) continue;
        Member a = answer(g), ai = answer(inv(g));
        if (a == Member::unknown || ai == Member::unknown) continue;
        if ((a == Member::yes && ai == Member::yes) || (a == Member::no && ai == Member::no))
            throw Error("identify: inconsistent oracle answers on '" + print_word(g) + "'");
    }

    IdentifyResult out;

    // Bi-ordering patterns are decided by s-signs alone; an exact match on the
    // whole ball settles the tag (a base point far outside the ball would be
    // indistinguishable, which is inherent to the budget).
    if (!any_unknown) {
        for (ConeTag t : {ConeTag::pinf_pp, ConeTag::pinf_pm, ConeTag::pinf_mp, ConeTag::pinf_mm}) {
            bool match = true;
            for (std::size_t i = 0; i < B.elements.size() && match; ++i) {
                if (B.elements[i] == id) continue;
                match = (ans[i] == Member::yes) == pinf_member(t, B.elements[i]);
            }
            if (match) {
                out.tags = {t};
                out.note = "bi-ordering pattern matched on ball(" + std::to_string(L) + ")";
                return out;
            }
        }
    }

    // First decoration from the translation a, which every cone decides.
    Member ma = answer(gen_a(n));
    if (ma == Member::unknown) {
        out.tags = {ConeTag::p_plus, ConeTag::p_minus, ConeTag::q_pp, ConeTag::q_pm,
                    ConeTag::q_mp, ConeTag::q_mm};
        out.note = "membership of the unit translation is undecided at this budget";
        return out;
    }
    const int sigma1 = ma == Member::yes ? 1 : -1;

    // Cut certificates. For s != 0 the displacement factors through the fixed
    // point: rho(g)(x) - x = (slope - 1)(x - fix), slope > 1 iff s < 0, so
    // each decided answer bounds eps by fix(g) on one side.
    std::optional<Rat> lower, upper;
    for (std::size_t i = 0; i < B.elements.size(); ++i) {
        const GroupElement& g = B.elements[i];
        if (g == id || g.s == 0 || ans[i] == Member::unknown) continue;
        const int disp = (ans[i] == Member::yes) ? sigma1 : -sigma1; // sign of rho(g)(eps)-eps (or 0 at a tie)
        const int side = disp * (g.s < 0 ? 1 : -1);                  // sign of eps - fix(g)
        Rat fx = fixed_point(g);
        if (side > 0) {
            if (!lower || fx > *lower) lower = fx;
        } else {
            if (!upper || fx < *upper) upper = fx;
        }
    }

    // Exact-base scan: an element with fix(g) inside the bracket *is* a
    // stabilizer witness for that rational. Only witnesses inside the
    // half-radius ball are trusted; at the edge of the budget a pinned
    // rational cannot be told apart from a nearby irrational base.
    const BallEnumeration half = ball(L / 2, n);
    std::map<Rat, bool> candidates; // fix -> seen
    for (const auto& g : half.elements) {
        if (g == id || g.s == 0) continue;
        Rat fx = fixed_point(g);
        if (lower && fx < *lower) continue;
        if (upper && fx > *upper) continue;
        candidates.emplace(fx, true);
    }

    std::vector<std::pair<Rat, ConeTag>> pinned;
    const ConeTag qa = sigma1 > 0 ? ConeTag::q_pp : ConeTag::q_mp;
    const ConeTag qb = sigma1 > 0 ? ConeTag::q_pm : ConeTag::q_mm;
    for (const auto& [delta, seen] : candidates) {
        for (ConeTag t : {qa, qb}) {
            ConeDescriptor hyp = make_cone(t, BasePoint(delta));
            bool consistent = true;
            for (std::size_t i = 0; i < B.elements.size() && consistent; ++i) {
                if (B.elements[i] == id || ans[i] == Member::unknown) continue;
                consistent = member(hyp, B.elements[i]) == ans[i];
            }
            if (consistent) pinned.emplace_back(delta, t);
        }
    }

    if (pinned.size() == 1) {
        out.exact_base = pinned[0].first;
        out.tags = {pinned[0].second};
        out.interval = std::make_pair(pinned[0].first, pinned[0].first);
        out.note = "stabilizer witness found within ball(" + std::to_string(L / 2) + ")";
        return out;
    }

    out.tags = {sigma1 > 0 ? ConeTag::p_plus : ConeTag::p_minus};
    if (lower && upper) {
        out.interval = std::make_pair(grid_floor(*lower, n, precision),
                                      grid_ceil(*upper, n, precision));
    }
    if (pinned.size() > 1)
        out.note = "several pinned rationals remain consistent at this budget";
    else if (!lower || !upper)
        out.note = "cut certificates bound the base on one side only";
    else
        out.note = "base bracketed by cut certificates on the n-adic grid";
    return out;
}

} // namespace ordlab

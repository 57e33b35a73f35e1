#pragma once

#include "ordlab/action.hpp"
#include "ordlab/group.hpp"
#include "ordlab/reals.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ordlab {

/// The ten positive-cone types. Pinf tags are the four bi-orderings and
/// carry no base point; P tags take an irrational base, Q tags a rational
/// one.
enum class ConeTag {
    pinf_pp,
    pinf_pm,
    pinf_mp,
    pinf_mm,
    p_plus,
    p_minus,
    q_pp,
    q_pm,
    q_mp,
    q_mm,
};

bool tag_needs_base(ConeTag t);
bool tag_is_pinf(ConeTag t);
bool tag_is_p(ConeTag t);
bool tag_is_q(ConeTag t);
std::string tag_name(ConeTag t);               // "Pinf++", "P+", "Q+-", ...
std::optional<ConeTag> tag_from_name(const std::string&);

struct ConeDescriptor {
    ConeTag tag;
    std::optional<BasePoint> base;
};

/// Validates tag/base compatibility: Pinf tags take no base, P tags need a
/// non-rational point, Q tags need a rational one.
ConeDescriptor make_cone(ConeTag tag, std::optional<BasePoint> base);

enum class Member { no, yes, unknown };

/// Membership of g in the cone. Exact except for digit-stream bases past
/// their budget. The identity is never a member.
Member member(const ConeDescriptor& c, const GroupElement& g);

/// The cone of the reversed ordering: flips every sign decoration.
ConeDescriptor reverse(const ConeDescriptor& c);

/// The image g(c) of the conjugation action: Pinf cones are fixed; P/Q cones
/// keep their tag and move the base to act(g, base). Coherent with
/// member(conjugate(c, g), h) == member(c, g^-1 h g).
ConeDescriptor conjugate(const ConeDescriptor& c, const GroupElement& g);

using ConeOracle = std::function<Member(const GroupElement&)>;

ConeOracle oracle_of(const ConeDescriptor& c);

struct AxiomReport {
    bool pass = true;
    bool inconclusive = false;
    long long checked = 0;
    std::string violation; // first violation, empty when pass
};

/// Checks the positive-cone axioms restricted to ball(L): disjointness from
/// inverses, closure under products staying in the ball, and trichotomy.
AxiomReport cone_axioms_check(const ConeOracle& o, int L, int n);
AxiomReport cone_axioms_check(const ConeDescriptor& c, int L, int n);

enum class Order { less, equal, greater, unordered };

/// The induced left order: g < h iff g^-1 h is in the cone.
Order order_compare(const ConeDescriptor& c, const GroupElement& g, const GroupElement& h);

/// Membership in the ordering induced by the action on a point sequence:
/// sign at the first point the element moves. With points (eps, eps+1) this
/// reproduces the Q_eps^{++} cone.
Member cone_from_action(std::span<const BasePoint> points, const GroupElement& g);

struct IdentifyResult {
    std::vector<ConeTag> tags;           // candidates consistent at this budget
    std::optional<Rat> exact_base;       // set when a stabilizer witness pins it
    std::optional<std::pair<Rat, Rat>> interval; // certified bracket otherwise
    std::string note;
};

/// Classifies a black-box membership oracle from its answers on ball(L).
/// Pinf patterns are matched exactly; otherwise the base point is bracketed
/// by cut certificates on the n-adic grid at `precision`, and reported
/// exactly when a stabilizer witness appears within the half-radius ball
/// (deeper stabilizers are indistinguishable from nearby irrational bases at
/// this budget, so they stay as intervals).
IdentifyResult identify(const ConeOracle& o, int L, int precision, int n);

} // namespace ordlab

#pragma once

#include "ordlab/cones.hpp"
#include "ordlab/group.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ordlab {

/// Finite stage of the dynamical realization of a cone's left order: the
/// first N enumerated elements tagged with reals so that tags are ordered
/// exactly like the elements. Tags stay fixed as the stage grows and are
/// dyadic rationals by construction (new max +1, new min -1, else midpoint).
struct RealizationStage {
    ConeDescriptor cone;
    std::vector<GroupElement> elems; // enumeration order, elems[0] == id
    std::vector<Rat> tags;           // tags[i] = t(elems[i]); tags[0] == 0
    std::map<GroupElement, std::size_t> index;

    std::optional<Rat> tag_of(const GroupElement& g) const {
        auto it = index.find(g);
        if (it == index.end()) return std::nullopt;
        return tags[it->second];
    }
};

/// Builds the stage over the canonical enumeration g_0, g_1, ...
RealizationStage build_stage(const ConeDescriptor& c, std::size_t N, int n);

/// Builds the stage over an explicit enumeration (elems[0] must be the
/// identity). Useful for pinning down textbook examples.
RealizationStage build_stage(const ConeDescriptor& c, std::vector<GroupElement> elems);

/// Tag of g * elems[i], when that element is tagged.
std::optional<Rat> partial_act(const RealizationStage& st, const GroupElement& g, std::size_t i);

/// Membership read back from the realization: yes iff t(g) > t(id) = 0.
/// nullopt when g is untagged. Agrees with member(st.cone, g) on tagged
/// elements.
std::optional<bool> recover_cone(const RealizationStage& st, const GroupElement& g);

struct FreeOrbitReport {
    bool pass = true;
    std::string violation;
};

/// The orbit of 0 must be free: no tagged non-identity element may share the
/// identity's tag (all tags distinct).
FreeOrbitReport check_free_orbit(const RealizationStage& st);

} // namespace ordlab

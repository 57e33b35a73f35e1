#include "ordlab/realization.hpp"

namespace ordlab {

RealizationStage build_stage(const ConeDescriptor& c, std::size_t N, int n) {
    if (N < 1) throw Error("build_stage: stage size must be >= 1");
    return build_stage(c, enumerate_prefix(N, n));
}

RealizationStage build_stage(const ConeDescriptor& c, std::vector<GroupElement> elems) {
    if (elems.empty()) throw Error("build_stage: empty enumeration");
    if (!elems[0].is_identity()) throw Error("build_stage: enumeration must start at the identity");

    RealizationStage st;
    st.cone = c;
    st.elems = std::move(elems);
    st.tags.reserve(st.elems.size());
    st.tags.push_back(Rat(0));
    st.index[st.elems[0]] = 0;

    for (std::size_t i = 1; i < st.elems.size(); ++i) {
        const GroupElement& gi = st.elems[i];
        if (st.index.count(gi))
            throw Error("build_stage: enumeration repeats '" + print_word(gi) + "'");

        std::optional<std::size_t> below, above; // nearest tagged neighbours
        for (std::size_t j = 0; j < i; ++j) {
            Order rel = order_compare(c, st.elems[j], gi);
            if (rel == Order::unordered)
                throw BudgetError("build_stage: comparison of '" + print_word(st.elems[j]) +
                                  "' and '" + print_word(gi) + "' exhausted the digit budget");
            if (rel == Order::less) {
                if (!below || st.tags[j] > st.tags[*below]) below = j;
            } else {
                if (!above || st.tags[j] < st.tags[*above]) above = j;
            }
        }

        Rat t;
        if (!above) {
            Rat mx = st.tags[0];
            for (const Rat& v : st.tags) mx = std::max(mx, v);
            t = mx + 1;
        } else if (!below) {
            Rat mn = st.tags[0];
            for (const Rat& v : st.tags) mn = std::min(mn, v);
            t = mn - 1;
        } else {
            t = (st.tags[*below] + st.tags[*above]) / 2;
        }
        st.tags.push_back(std::move(t));
        st.index[gi] = i;
    }
    return st;
}

std::optional<Rat> partial_act(const RealizationStage& st, const GroupElement& g, std::size_t i) {
    if (i >= st.elems.size()) throw Error("partial_act: index out of range");
    return st.tag_of(mul(g, st.elems[i]));
}

std::optional<bool> recover_cone(const RealizationStage& st, const GroupElement& g) {
    auto t = st.tag_of(g);
    if (!t) return std::nullopt;
    return *t > 0;
}

FreeOrbitReport check_free_orbit(const RealizationStage& st) {
    FreeOrbitReport rep;
    for (std::size_t i = 0; i < st.elems.size(); ++i) {
        for (std::size_t j = i + 1; j < st.elems.size(); ++j) {
            if (st.tags[i] == st.tags[j]) {
                rep.pass = false;
                rep.violation = "elements '" + print_word(st.elems[i]) + "' and '" +
                                print_word(st.elems[j]) + "' share tag " +
                                rat_to_string(st.tags[i]);
                return rep;
            }
        }
    }
    return rep;
}

} // namespace ordlab

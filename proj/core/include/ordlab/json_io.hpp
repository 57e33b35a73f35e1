#pragma once

#include "ordlab/cones.hpp"
#include "ordlab/equivalence.hpp"
#include "ordlab/group.hpp"
#include "ordlab/realization.hpp"
#include "ordlab/reals.hpp"

#include <nlohmann/json.hpp>

namespace ordlab {

// Key order is part of the wire format (byte-stable output), hence
// ordered_json throughout.
using Json = nlohmann::ordered_json;

Json nadic_json(const NAdic& x);              // {"m": "...", "k": ...}
NAdic nadic_from_json(const Json& j, int n);

Json element_json(const GroupElement& g);     // {"r": "m/n^k", "s": ...}
GroupElement element_from_json(const Json& j, int n);

Json rat_json(const Rat& x);                  // {"p": "...", "q": "..."}

Json base_point_json(const BasePoint& p);     // {"kind": ...}
BasePoint base_point_from_json(const Json& j, int n, int budget);

/// CLI literal: "rat:p/q", "quad:u,v,d", "nadic:m/n^k", "stream:sqrt:d",
/// "stream:rat:p/q".
BasePoint parse_base_point(const std::string& text, int n, int budget);

Json cone_json(const ConeDescriptor& c);
ConeDescriptor cone_from_json(const Json& j, int n, int budget);

Json digit_word_json(const DigitWord& w);     // digits as strings for n <= 10

Json stage_json(const RealizationStage& st);

} // namespace ordlab

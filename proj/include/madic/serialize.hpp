#pragma once

#include <nlohmann/json.hpp>

#include "madic/analysis.hpp"
#include "madic/field_codes.hpp"
#include "madic/ring.hpp"

namespace madic {

using json = nlohmann::json;

json poly_to_json(const PolyFq& f);
json ring_elt_to_json(const RingElt& a);
json ring_poly_to_json(const PolyR& f);
PolyFq poly_from_json(const Zq& zq, const json& j);
RingElt ring_elt_from_json(const RingCtx& ring, const json& j);
PolyR ring_poly_from_json(const RingCtx& ring, const json& j);

json distance_to_json(const DistanceReport& rep, u32 q);
/// The bracket form "[n,k,d]" when the ranks agree, else one bracket per component.
std::string parameters_string(const DistanceReport& rep);

/// Short code object: family, index, generator, idempotent, dimension.
json cyclic_code_to_json(const CyclicCode& code);

}  // namespace madic

#include "madic/serialize.hpp"

#include <string>

namespace madic {

json poly_to_json(const PolyFq& f) { return json(f.coeffs()); }

json ring_elt_to_json(const RingElt& a) { return json(a.coeffs); }

json ring_poly_to_json(const PolyR& f) {
  json arr = json::array();
  for (const auto& c : f.coeffs()) arr.push_back(ring_elt_to_json(c));
  return arr;
}

namespace {

u32 coefficient(const Zq& zq, const json& v) {
  if (!v.is_number_integer()) throw Error(Errc::ParseError, "coefficients must be integers");
  return zq.from_int(v.get<std::int64_t>());
}

}  // namespace

PolyFq poly_from_json(const Zq& zq, const json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "polynomial must be an array of integers");
  std::vector<u32> coeffs;
  for (const auto& v : j) coeffs.push_back(coefficient(zq, v));
  return PolyFq(std::move(coeffs));
}

RingElt ring_elt_from_json(const RingCtx& ring, const json& j) {
  if (!j.is_array() || j.size() != ring.s())
    throw Error(Errc::ParseError, "ring element must be an array of " + std::to_string(ring.s()) + " integers");
  RingElt r = ring.zero();
  for (u32 i = 0; i < ring.s(); ++i) r.coeffs[i] = coefficient(ring.base(), j[i]);
  return r;
}

PolyR ring_poly_from_json(const RingCtx& ring, const json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "ring polynomial must be an array of ring elements");
  std::vector<RingElt> coeffs;
  for (const auto& v : j) coeffs.push_back(ring_elt_from_json(ring, v));
  return PolyR(std::move(coeffs));
}

std::string parameters_string(const DistanceReport& rep) {
  const auto bracket = [&](u32 k) {
    return "[" + std::to_string(rep.n) + "," + std::to_string(k) + "," + std::to_string(rep.d_min) + "]";
  };
  if (const auto k = rep.free_rank()) return bracket(*k);
  std::string out;
  for (u32 k : rep.ranks) out += (out.empty() ? "" : " ") + bracket(k);
  return out;
}

json distance_to_json(const DistanceReport& rep, u32 q) {
  json j;
  j["n"] = rep.n;
  j["ranks"] = rep.ranks;
  j["free_rank"] = rep.free_rank() ? json(*rep.free_rank()) : json(nullptr);
  j["d_min"] = rep.d_min;
  j["method"] = rep.method;
  j["enumerated"] = rep.enumerated;
  j["weight_distribution"] = rep.weight_distribution;
  j["exhaustive_d"] = rep.exhaustive_d ? json(*rep.exhaustive_d) : json(nullptr);
  j["exhaustive_enumerated"] = rep.exhaustive_enumerated ? json(*rep.exhaustive_enumerated) : json(nullptr);
  j["parameters"] = parameters_string(rep);
  if (const auto k = rep.free_rank(); k && *k > 0 && rep.d_min > 0) {
    const auto g = griesmer_check(rep.n, *k, rep.d_min, q);
    j["griesmer"] = {{"bound_n", g.bound_n}, {"attained", g.attained}, {"alphabet", q}};
  } else {
    j["griesmer"] = nullptr;
  }
  return j;
}

json cyclic_code_to_json(const CyclicCode& code) {
  return {{"family", std::string(family_name(code.family))},
          {"index", code.index},
          {"generator", poly_to_json(code.generator)},
          {"idempotent", poly_to_json(code.idempotent)},
          {"dimension", code.dimension()}};
}

}  // namespace madic

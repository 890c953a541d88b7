#include "madic/commands.hpp"

#include <sstream>

#include "madic/field_codes.hpp"
#include "madic/residue.hpp"
#include "madic/ring.hpp"
#include "madic/verification.hpp"

namespace madic {
namespace {

template <class T>
T require(const std::optional<T>& v, const char* flag) {
  if (!v) throw Error(Errc::InvalidArgument, std::string("missing --") + flag);
  return *v;
}

std::string set_text(const std::vector<u32>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

Family family_of(const JobParams& job) {
  const auto f = parse_family(job.family);
  if (!f) throw Error(Errc::InvalidArgument, "unknown family '" + job.family + "' (even-I, odd-I, even-II, odd-II)");
  return *f;
}

ResidueSystem residue_system(const JobParams& job) {
  return build_residue_system(require(job.p, "p"), require(job.m, "m"), job.b, job.a);
}

json residue_params(const ResidueSystem& sys) {
  return {{"p", sys.p()}, {"m", sys.m()}, {"b", sys.b()}, {"a", sys.a()}, {"a_class_index", sys.a_class_index()}};
}

struct FieldSetup {
  FieldCtx base;
  FieldFamilies fam;
  json params;
};

FieldSetup field_setup(const JobParams& job) {
  const auto sys = residue_system(job);
  auto base = make_prime_field(require(job.q, "q"));
  auto fam = build_field_families(sys, base, job.root_power);
  json params = residue_params(sys);
  const auto& sp = fam.splitting;
  params["q"] = fam.q();
  params["root_power"] = sp.root_power;
  params["extension_degree"] = sp.ext.degree();
  params["extension_modulus"] = sp.ext.modulus();
  params["primitive_element"] = sp.ext.primitive_element().coords;
  params["alpha"] = sp.alpha.coords;
  return {std::move(base), std::move(fam), std::move(params)};
}

std::string params_line(const json& params) {
  std::string out = "#";
  for (const auto& [key, value] : params.items()) out += " " + key + "=" + value.dump();
  return out;
}

const CyclicCode& field_code(const FieldFamilies& fam, const JobParams& job) {
  const auto& codes = fam.family(family_of(job));
  if (job.index >= codes.size())
    throw Error(Errc::BadSlotIndex, "index " + std::to_string(job.index) + " outside [0, " +
                                        std::to_string(codes.size()) + ")");
  return codes[job.index];
}

std::string distance_text(const DistanceReport& rep, const json& dj) {
  std::ostringstream os;
  os << "parameters: " << dj["parameters"].get<std::string>() << "\n";
  os << "d_min: " << rep.d_min << " (" << rep.method << ", " << rep.enumerated << " codewords)\n";
  if (rep.exhaustive_d) os << "exhaustive d: " << *rep.exhaustive_d << " (" << *rep.exhaustive_enumerated << " codewords)\n";
  if (!rep.weight_distribution.empty()) {
    os << "weights:";
    for (std::size_t w = 0; w < rep.weight_distribution.size(); ++w)
      if (rep.weight_distribution[w]) os << " A_" << w << "=" << rep.weight_distribution[w];
    os << "\n";
  }
  if (!dj["griesmer"].is_null())
    os << "griesmer: bound " << dj["griesmer"]["bound_n"] << ", " << (dj["griesmer"]["attained"].get<bool>() ? "attained" : "not attained") << "\n";
  return os.str();
}

/// Distance as an optional section of a code report: a cap overflow becomes a
/// note rather than an error.
template <class F>
void attach_distance(json& data, std::string& text, u32 q, F&& compute) {
  try {
    const auto rep = compute();
    data["distance_report"] = distance_to_json(rep, q);
    text += distance_text(rep, data["distance_report"]);
  } catch (const Error& e) {
    if (e.code() != Errc::TooLarge) throw;
    data["distance_report"] = nullptr;
    data["distance_skipped"] = e.what();
    text += std::string("distance: skipped (") + e.what() + ")\n";
  }
}

Report field_code_report(const JobParams& job, bool with_distance) {
  const auto setup = field_setup(job);
  const auto& code = field_code(setup.fam, job);
  Report r;
  r.data = {{"kind", "field"}, {"params", setup.params}};
  r.data["family"] = std::string(family_name(code.family));
  r.data["index"] = code.index;
  r.data["generator"] = poly_to_json(code.generator);
  r.data["idempotent"] = poly_to_json(code.idempotent);
  r.data["dimension"] = code.dimension();
  r.data["components"] = nullptr;
  r.text = params_line(setup.params) + "\n";
  r.text += "family: " + r.data["family"].get<std::string>() + " index " + std::to_string(code.index) + "\n";
  r.text += "generator: " + format_poly(code.generator) + "\n";
  r.text += "idempotent: " + format_poly(code.idempotent) + "\n";
  r.text += "dimension: " + std::to_string(code.dimension()) + "\n";
  if (with_distance) attach_distance(r.data, r.text, code.q, [&] { return min_distance_field(code, job.cap); });
  return r;
}

struct RingSetup {
  FieldSetup field;
  RingCtx ring;
  RingCode code;
};

RingSetup ring_setup(const JobParams& job) {
  auto field = field_setup(job);
  auto ring = make_ring(field.base, require(job.s, "s"));
  std::vector<u32> slots = job.slots;
  if (slots.empty())
    for (u32 k = 0; k < ring.s(); ++k) slots.push_back(k % field.fam.sys.m());
  const auto even = ring_even_like_I(ring, field.fam, slots);
  RingCode code;
  switch (family_of(job)) {
    case Family::EvenI: code = even; break;
    case Family::OddI: code = ring_odd_like_I(ring, field.fam, even); break;
    case Family::EvenII: code = ring_even_like_II(ring, field.fam, even); break;
    case Family::OddII: code = ring_odd_like_II(ring, field.fam, even); break;
  }
  field.params["s"] = ring.s();
  field.params["zeta"] = ring.zeta();
  json eta = json::array();
  for (const auto& e : ring.eta()) eta.push_back(ring_elt_to_json(e));
  field.params["eta"] = eta;
  field.params["crt_points"] = ring.crt_points();
  return {std::move(field), std::move(ring), std::move(code)};
}

Report ring_code_report(const JobParams& job, bool with_distance) {
  const auto setup = ring_setup(job);
  const auto& ring = setup.ring;
  const auto& code = setup.code;
  const u32 p = setup.field.fam.p();
  Report r;
  r.data = {{"kind", "ring"}, {"params", setup.field.params}};
  r.data["family"] = std::string(family_name(code.family));
  r.data["slots"] = code.slots;
  r.data["idempotent"] = ring_poly_to_json(code.idempotent);
  r.data["generator"] = ring_poly_to_json(code.generator);
  json comps = json::array();
  for (const auto& c : code.components) comps.push_back(cyclic_code_to_json(c));
  r.data["components"] = comps;

  r.text = params_line(setup.field.params) + "\n";
  r.text += "family: " + r.data["family"].get<std::string>() + " slots " + set_text(code.slots) + "\n";
  r.text += "idempotent: " + format_ring_poly(code.idempotent) + "\n";
  r.text += "generator: " + format_ring_poly(code.generator) + "\n";
  for (std::size_t k = 0; k < code.components.size(); ++k)
    r.text += "component " + std::to_string(k) + " (v=" + std::to_string(ring.crt_points()[k]) +
              "): " + format_poly(code.components[k].generator) + "\n";

  const auto orbit = ring_mu_chain(ring, setup.field.fam, code, setup.field.fam.sys.a());
  json chain = json::array();
  r.text += "mu_" + std::to_string(setup.field.fam.sys.a()) + " orbit:";
  for (const auto& c : orbit) {
    chain.push_back(c.slots);
    r.text += " " + set_text(c.slots);
  }
  r.text += "\n";
  r.data["mu_orbit"] = chain;
  if (with_distance) attach_distance(r.data, r.text, ring.q(), [&] { return min_distance_ring(ring, code, p, job.cap); });
  return r;
}

Report distance_report(DistanceReport rep, u32 q) {
  Report r;
  r.data = distance_to_json(rep, q);
  r.text = distance_text(rep, r.data);
  return r;
}

Report distance_of_document(const JobParams& job) {
  json doc;
  try {
    doc = json::parse(*job.document);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  try {
    const auto& params = doc.at("params");
    const u32 q = params.at("q").get<u32>();
    const u32 p = params.at("p").get<u32>();
    const auto base = make_prime_field(q);
    const auto kind = doc.at("kind").get<std::string>();
    if (kind == "field") return distance_report(min_distance_field(Zq(q), poly_from_json(Zq(q), doc.at("generator")), p, job.cap), q);
    if (kind != "ring") throw Error(Errc::ParseError, "unknown code kind '" + kind + "'");
    const auto ring = make_ring(base, params.at("s").get<u32>());
    std::vector<PolyFq> gens;
    for (const auto& c : doc.at("components")) gens.push_back(poly_from_json(Zq(q), c.at("generator")));
    if (gens.size() != ring.s()) throw Error(Errc::ParseError, "component count does not match s");
    return distance_report(min_distance_ring(ring, gens, p, job.cap), q);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

}  // namespace

Report cmd_classes(const JobParams& job) {
  const auto sys = residue_system(job);
  Report r;
  r.data = {{"params", residue_params(sys)}, {"classes", sys.classes()}};
  r.text = params_line(r.data["params"]) + "\n";
  for (const auto& c : sys.classes()) r.text += set_text(c) + "\n";
  return r;
}

Report cmd_field_code(const JobParams& job) { return field_code_report(job, true); }

Report cmd_ring_code(const JobParams& job) { return ring_code_report(job, true); }

Report cmd_distance(const JobParams& job) {
  if (job.document) return distance_of_document(job);
  if (job.generator) {
    const u32 q = require(job.q, "q");
    make_prime_field(q);
    const u32 n = static_cast<u32>(job.n ? *job.n : require(job.p, "p"));
    const Zq zq(q);
    const auto g = parse_poly(zq, *job.generator);
    if (!mod(zq, xn_minus_one(zq, n), g).is_zero())
      throw Error(Errc::NotADivisor, "generator does not divide x^" + std::to_string(n) + "-1");
    return distance_report(min_distance_field(zq, g, n, job.cap), q);
  }
  if (job.s) {
    const auto setup = ring_setup(job);
    return distance_report(min_distance_ring(setup.ring, setup.code, setup.field.fam.p(), job.cap), setup.ring.q());
  }
  const auto setup = field_setup(job);
  return distance_report(min_distance_field(field_code(setup.fam, job), job.cap), setup.fam.q());
}

Report cmd_griesmer(const JobParams& job) {
  const u64 n = require(job.n, "n"), k = require(job.k, "k"), d = require(job.d, "d");
  const u64 q = require(job.q, "q");
  const auto g = griesmer_check(n, k, d, q);
  Report r;
  r.data = {{"n", n}, {"k", k}, {"d", d}, {"q", q}, {"bound_n", g.bound_n}, {"attained", g.attained}};
  r.text = "griesmer sum for k=" + std::to_string(k) + ", d=" + std::to_string(d) + ", q=" + std::to_string(q) +
           ": " + std::to_string(g.bound_n) + "\n";
  r.text += "n=" + std::to_string(n) + (g.attained ? " attains the bound\n" : " does not attain the bound\n");
  return r;
}

Report cmd_export(const JobParams& job) {
  return job.s ? ring_code_report(job, true) : field_code_report(job, true);
}

Report cmd_verify_paper(const JobParams&) {
  const auto rep = verify_reference_examples();
  Report r;
  json checks = json::array(), errata = json::array();
  std::size_t passed = 0;
  for (const auto& c : rep.checks) {
    checks.push_back({{"id", c.id}, {"description", c.description}, {"passed", c.passed}, {"detail", c.detail}});
    r.text += std::string(c.passed ? "PASS " : "FAIL ") + c.id + ": " + c.description;
    if (!c.detail.empty()) r.text += " [" + c.detail + "]";
    r.text += "\n";
    passed += c.passed;
  }
  r.text += std::to_string(passed) + "/" + std::to_string(rep.checks.size()) + " checks passed\n\nerrata:\n";
  for (const auto& e : rep.errata) {
    errata.push_back({{"id", e.id}, {"printed", e.printed}, {"computed", e.computed}, {"verification", e.verification}});
    r.text += "- " + e.id + "\n    printed:  " + e.printed + "\n    computed: " + e.computed +
              "\n    via:      " + e.verification + "\n";
  }
  r.data = {{"ok", rep.ok()}, {"checks", checks}, {"errata", errata}};
  r.success = rep.ok();
  return r;
}

Report run_command(const std::string& verb, const JobParams& job) {
  if (verb == "classes") return cmd_classes(job);
  if (verb == "field-code") return cmd_field_code(job);
  if (verb == "ring-code") return cmd_ring_code(job);
  if (verb == "distance") return cmd_distance(job);
  if (verb == "griesmer") return cmd_griesmer(job);
  if (verb == "export") return cmd_export(job);
  if (verb == "verify-paper") return cmd_verify_paper(job);
  throw Error(Errc::InvalidArgument, "unknown command '" + verb + "'");
}

}  // namespace madic

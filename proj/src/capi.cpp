#include "madic/madic.h"

#include <algorithm>
#include <charconv>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "madic/commands.hpp"
#include "madic/residue.hpp"

struct madic_params {
  madic::JobParams job;
};

struct madic_result {
  std::string json;
  std::string text;
  bool success = true;
};

struct madic_residue_system {
  madic::ResidueSystem sys;
};

namespace {

thread_local std::string last_error;

madic_status status_of(madic::Errc c) {
  using madic::Errc;
  switch (c) {
    case Errc::NonPrimeModulus: return MADIC_NON_PRIME_MODULUS;
    case Errc::DivisionByZero: return MADIC_DIVISION_BY_ZERO;
    case Errc::FieldTooLarge: return MADIC_FIELD_TOO_LARGE;
    case Errc::NonUnitLeadingCoefficient: return MADIC_NON_UNIT_LEADING_COEFFICIENT;
    case Errc::BothZero: return MADIC_BOTH_ZERO;
    case Errc::NotADivisor: return MADIC_NOT_A_DIVISOR;
    case Errc::NotCoprime: return MADIC_NOT_COPRIME;
    case Errc::InvalidM: return MADIC_INVALID_M;
    case Errc::NotPrimitiveRoot: return MADIC_NOT_PRIMITIVE_ROOT;
    case Errc::MultiplierNotCyclic: return MADIC_MULTIPLIER_NOT_CYCLIC;
    case Errc::QNotResidue: return MADIC_Q_NOT_RESIDUE;
    case Errc::IncompatibleS: return MADIC_INCOMPATIBLE_S;
    case Errc::BadSlotIndex: return MADIC_BAD_SLOT_INDEX;
    case Errc::TooLarge: return MADIC_TOO_LARGE;
    case Errc::ParseError: return MADIC_PARSE_ERROR;
    case Errc::InvalidArgument: return MADIC_INVALID_ARGUMENT;
    case Errc::Internal: return MADIC_INTERNAL;
  }
  return MADIC_INTERNAL;
}

template <class F>
madic_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return MADIC_OK;
  } catch (const madic::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "Internal: out of memory";
    return MADIC_INTERNAL;
  } catch (const std::exception& e) {
    last_error = std::string("Internal: ") + e.what();
    return MADIC_INTERNAL;
  }
}

madic_status invalid(const std::string& msg) {
  last_error = "InvalidArgument: " + msg;
  return MADIC_INVALID_ARGUMENT;
}

std::vector<uint32_t> parse_slots(const std::string& text) {
  std::vector<uint32_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find(',', pos), text.size());
    uint32_t v = 0;
    const auto* first = text.data() + pos;
    const auto* last = text.data() + end;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last)
      throw madic::Error(madic::Errc::ParseError, "slots must be comma-separated integers, got '" + text + "'");
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

uint32_t narrow(uint64_t v, const std::string& key) {
  if (v > UINT32_MAX) throw madic::Error(madic::Errc::InvalidArgument, key + " out of range");
  return static_cast<uint32_t>(v);
}

}  // namespace

extern "C" {

const char* madic_status_name(madic_status status) {
  if (status == MADIC_OK) return "Ok";
  if (status < MADIC_OK || status > MADIC_INTERNAL) return "Unknown";
  return madic::errc_name(static_cast<madic::Errc>(status - 1)).data();
}

const char* madic_last_error(void) { return last_error.c_str(); }

madic_params* madic_params_new(void) { return new (std::nothrow) madic_params(); }

void madic_params_free(madic_params* params) { delete params; }

madic_status madic_params_set_int(madic_params* params, const char* key, uint64_t value) {
  if (!params || !key) return invalid("null argument");
  return guarded([&] {
    auto& j = params->job;
    const std::string k = key;
    if (k == "q") j.q = narrow(value, k);
    else if (k == "p") j.p = narrow(value, k);
    else if (k == "m") j.m = narrow(value, k);
    else if (k == "s") j.s = narrow(value, k);
    else if (k == "b") j.b = narrow(value, k);
    else if (k == "a") j.a = narrow(value, k);
    else if (k == "index") j.index = narrow(value, k);
    else if (k == "root_power") j.root_power = narrow(value, k);
    else if (k == "cap") j.cap = value;
    else if (k == "n") j.n = value;
    else if (k == "k") j.k = value;
    else if (k == "d") j.d = value;
    else throw madic::Error(madic::Errc::InvalidArgument, "unknown integer parameter '" + k + "'");
  });
}

madic_status madic_params_set_string(madic_params* params, const char* key, const char* value) {
  if (!params || !key || !value) return invalid("null argument");
  return guarded([&] {
    auto& j = params->job;
    const std::string k = key;
    if (k == "family") j.family = value;
    else if (k == "slots") j.slots = parse_slots(value);
    else if (k == "generator") j.generator = value;
    else if (k == "document") j.document = value;
    else throw madic::Error(madic::Errc::InvalidArgument, "unknown string parameter '" + k + "'");
  });
}

madic_status madic_run(const char* verb, const madic_params* params, madic_result** out) {
  if (!verb || !params || !out) return invalid("null argument");
  *out = nullptr;
  return guarded([&] {
    auto report = madic::run_command(verb, params->job);
    auto* r = new madic_result();
    r->json = report.data.dump(2);
    r->text = std::move(report.text);
    r->success = report.success;
    *out = r;
  });
}

const char* madic_result_json(const madic_result* result) { return result ? result->json.c_str() : ""; }

const char* madic_result_text(const madic_result* result) { return result ? result->text.c_str() : ""; }

int madic_result_success(const madic_result* result) { return result && result->success ? 1 : 0; }

void madic_result_free(madic_result* result) { delete result; }

madic_status madic_residue_system_new(uint32_t p, uint32_t m, uint32_t b, uint32_t a, madic_residue_system** out) {
  if (!out) return invalid("null argument");
  *out = nullptr;
  return guarded([&] {
    auto sys = madic::build_residue_system(p, m, b ? std::optional<uint32_t>(b) : std::nullopt,
                                           a ? std::optional<uint32_t>(a) : std::nullopt);
    *out = new madic_residue_system{std::move(sys)};
  });
}

void madic_residue_system_free(madic_residue_system* sys) { delete sys; }

uint32_t madic_residue_system_b(const madic_residue_system* sys) { return sys ? sys->sys.b() : 0; }

uint32_t madic_residue_system_a(const madic_residue_system* sys) { return sys ? sys->sys.a() : 0; }

size_t madic_residue_system_class_size(const madic_residue_system* sys) { return sys ? sys->sys.class_size() : 0; }

madic_status madic_residue_system_class(const madic_residue_system* sys, uint32_t index, uint32_t* out,
                                        size_t capacity) {
  if (!sys || !out) return invalid("null argument");
  if (index >= sys->sys.m()) return invalid("class index out of range");
  const auto& c = sys->sys.cls(index);
  if (capacity < c.size()) return invalid("output buffer too small");
  std::copy(c.begin(), c.end(), out);
  last_error.clear();
  return MADIC_OK;
}

madic_status madic_residue_system_class_of(const madic_residue_system* sys, uint64_t x, uint32_t* out) {
  if (!sys || !out) return invalid("null argument");
  const auto i = sys->sys.class_of(x);
  if (!i) {
    last_error = "NotCoprime: " + std::to_string(x) + " is divisible by p";
    return MADIC_NOT_COPRIME;
  }
  *out = *i;
  last_error.clear();
  return MADIC_OK;
}

madic_status madic_griesmer(uint64_t n, uint64_t k, uint64_t d, uint64_t q, uint64_t* bound_n, int* attained) {
  if (!bound_n || !attained) return invalid("null argument");
  return guarded([&] {
    const auto g = madic::griesmer_check(n, k, d, q);
    *bound_n = g.bound_n;
    *attained = g.attained ? 1 : 0;
  });
}

}  // extern "C"

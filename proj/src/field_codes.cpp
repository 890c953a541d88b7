#include "madic/field_codes.hpp"

#include <string>

namespace madic {

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::EvenI: return "even-I";
    case Family::OddI: return "odd-I";
    case Family::EvenII: return "even-II";
    case Family::OddII: return "odd-II";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  for (Family f : {Family::EvenI, Family::OddI, Family::EvenII, Family::OddII})
    if (family_name(f) == name) return f;
  return std::nullopt;
}

const std::vector<CyclicCode>& FieldFamilies::family(Family f) const {
  switch (f) {
    case Family::EvenI: return even_I;
    case Family::OddI: return odd_I;
    case Family::EvenII: return even_II;
    case Family::OddII: return odd_II;
  }
  throw Error(Errc::Internal, "unknown family");
}

PolyFq all_ones_h(const Zq& zq, u32 p) { return all_ones(zq, p); }

PolyFq repetition_idempotent(const Zq& zq, u32 p) {
  return scale(zq, zq.inv(zq.from_int(p)), all_ones(zq, p));
}

namespace {

CyclicCode make_code(const Zq& zq, u32 p, Family family, u32 index, PolyFq generator) {
  CyclicCode code{zq.modulus(), p, family, index, std::move(generator), {}};
  code.idempotent = idempotent_of_cyclic(zq, code.generator, p);
  return code;
}

}  // namespace

FieldFamilies build_field_families(const ResidueSystem& sys, const FieldCtx& base, u32 root_power) {
  if (base.degree() != 1) throw Error(Errc::InvalidArgument, "codes are built over a prime field");
  const u32 q = base.characteristic();
  const u32 p = sys.p();
  if (p % q == 0) throw Error(Errc::NotCoprime, "p and q must be coprime");
  if (!sys.is_madic_residue(q))
    throw Error(Errc::QNotResidue, "q = " + std::to_string(q) + " is not an m-adic residue modulo " +
                                       std::to_string(p) + " (m = " + std::to_string(sys.m()) + ")");

  FieldFamilies fam{sys, base.base(), factor_xp_minus_1(base, p, root_power), {}, {}, {}, {}};
  const Zq& zq = fam.zq;
  const auto xp = xn_minus_one(zq, p);
  const PolyFq x_minus_1({zq.neg(zq.one()), zq.one()});

  for (u32 i = 0; i < sys.m(); ++i) {
    const auto g_hat = fam.splitting.roots_product(sys.cls(i));
    auto [g, rem] = divmod(zq, xp, g_hat);
    if (!rem.is_zero()) throw Error(Errc::Internal, "class product does not divide x^p - 1");
    auto [h_hat, rem2] = divmod(zq, g, x_minus_1);
    if (!rem2.is_zero()) throw Error(Errc::Internal, "x - 1 does not divide the even-like generator");

    fam.even_I.push_back(make_code(zq, p, Family::EvenI, i, g));
    fam.odd_I.push_back(make_code(zq, p, Family::OddI, i, g_hat));
    fam.even_II.push_back(make_code(zq, p, Family::EvenII, i, mul(zq, x_minus_1, g_hat)));
    fam.odd_II.push_back(make_code(zq, p, Family::OddII, i, h_hat));
  }
  return fam;
}

std::vector<CyclicCode> even_like_I(const ResidueSystem& sys, const FieldCtx& base, u32 root_power) {
  return build_field_families(sys, base, root_power).even_I;
}

std::vector<CyclicCode> odd_like_I(const ResidueSystem& sys, const FieldCtx& base, u32 root_power) {
  return build_field_families(sys, base, root_power).odd_I;
}

std::vector<CyclicCode> even_like_II(const ResidueSystem& sys, const FieldCtx& base, u32 root_power) {
  return build_field_families(sys, base, root_power).even_II;
}

std::vector<CyclicCode> odd_like_II(const ResidueSystem& sys, const FieldCtx& base, u32 root_power) {
  return build_field_families(sys, base, root_power).odd_II;
}

}  // namespace madic

#include "doctest.h"
#include "madic/cyclic.hpp"
#include "madic/residue.hpp"

using namespace madic;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::Internal;
}

}  // namespace

TEST_CASE("cubic residues modulo 13") {
  const auto sys = build_residue_system(13, 3, 2u);
  CHECK(sys.cls(0) == std::vector<u32>{1, 5, 8, 12});
  CHECK(sys.cls(1) == std::vector<u32>{2, 3, 10, 11});
  CHECK(sys.cls(2) == std::vector<u32>{4, 6, 7, 9});
  CHECK(sys.a() == 2);
  CHECK(sys.a_class_index() == 1);
}

TEST_CASE("quartic residues modulo 13 with multiplier 7") {
  const auto sys = build_residue_system(13, 4, std::nullopt, 7u);
  CHECK(sys.b() == 2);
  CHECK(sys.cls(0) == std::vector<u32>{1, 3, 9});
  CHECK(sys.cls(1) == std::vector<u32>{2, 5, 6});
  CHECK(sys.cls(2) == std::vector<u32>{4, 10, 12});
  CHECK(sys.cls(3) == std::vector<u32>{7, 8, 11});
  CHECK(sys.a_class_index() == 3);
  CHECK(sys.is_madic_residue(3));
  CHECK_FALSE(sys.class_of(26).has_value());
}

TEST_CASE("sextic residues modulo 19") {
  const auto sys = build_residue_system(19, 6);
  const std::vector<std::vector<u32>> expected = {{1, 7, 11}, {2, 3, 14},  {4, 6, 9},
                                                  {8, 12, 18}, {5, 16, 17}, {10, 13, 15}};
  CHECK(sys.classes() == expected);
  CHECK(sys.is_madic_residue(7));
}

TEST_CASE("classes partition the units and mu_a cycles them") {
  for (auto [p, m] : {std::pair{13u, 2u}, {13u, 3u}, {13u, 4u}, {13u, 6u}, {19u, 6u}, {31u, 5u}, {11u, 5u}}) {
    const auto sys = build_residue_system(p, m);
    std::vector<int> seen(p, 0);
    for (const auto& c : sys.classes()) {
      CHECK(c.size() == sys.class_size());
      for (u32 x : c) ++seen[x];
    }
    for (u32 x = 1; x < p; ++x) CHECK(seen[x] == 1);
    for (u32 i = 0; i < m; ++i)
      CHECK(apply_mu(p, sys.a(), sys.cls(i)) == sys.cls((i + sys.a_class_index()) % m));
  }
}

TEST_CASE("residue system validation") {
  CHECK(code_of([] { build_residue_system(12, 2); }) == Errc::NonPrimeModulus);
  CHECK(code_of([] { build_residue_system(13, 5); }) == Errc::InvalidM);
  CHECK(code_of([] { build_residue_system(13, 1); }) == Errc::InvalidM);
  CHECK(code_of([] { build_residue_system(13, 3, 3u); }) == Errc::NotPrimitiveRoot);
  CHECK(code_of([] { build_residue_system(13, 4, std::nullopt, 4u); }) == Errc::MultiplierNotCyclic);
  CHECK(code_of([] { build_residue_system(13, 4, std::nullopt, 13u); }) == Errc::NotCoprime);
}

TEST_CASE("multiplier on polynomials is the coordinate pullback") {
  const Zq zq(3);
  const PolyFq f({0, 1, 2});  // x + 2x^2
  // new coefficient at i is the old one at 2i mod 5: x + 2x^2 -> 2x + x^3
  CHECK(apply_mu(zq, 5, 2, f) == PolyFq({0, 2, 0, 1}));
  // mu_a then mu_{a^{-1}} is the identity
  CHECK(apply_mu(zq, 5, 3, apply_mu(zq, 5, 2, f)) == f);
}

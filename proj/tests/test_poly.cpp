#include <random>

#include "doctest.h"
#include "madic/cyclic.hpp"
#include "madic/ring.hpp"

using namespace madic;

namespace {

PolyFq random_poly(std::mt19937& rng, u32 q, std::size_t len) {
  std::uniform_int_distribution<u32> pick(0, q - 1);
  std::vector<u32> c(len);
  for (auto& x : c) x = pick(rng);
  return PolyFq(std::move(c));
}

}  // namespace

TEST_CASE("trimming and degree") {
  const PolyFq z({0, 0});
  CHECK(z.is_zero());
  CHECK_FALSE(z.degree().has_value());
  const PolyFq f({1, 2, 0});
  CHECK(f.degree() == 1u);
}

TEST_CASE("divmod round trip") {
  std::mt19937 rng(3);
  for (u32 q : {2u, 3u, 7u}) {
    const Zq zq(q);
    for (int t = 0; t < 100; ++t) {
      const auto a = random_poly(rng, q, 1 + t % 15);
      auto b = random_poly(rng, q, 1 + t % 6);
      if (b.is_zero()) b = PolyFq({1});
      const auto [quot, rem] = divmod(zq, a, b);
      CHECK(add(zq, mul(zq, quot, b), rem) == a);
      CHECK((rem.is_zero() || *rem.degree() < *b.degree()));
    }
  }
  CHECK_THROWS_AS(divmod(Zq(3), PolyFq({1, 1}), PolyFq()), Error);
}

TEST_CASE("extended gcd satisfies Bezout") {
  std::mt19937 rng(5);
  const Zq zq(5);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_poly(rng, 5, 1 + t % 9);
    const auto b = random_poly(rng, 5, 1 + t % 7);
    if (a.is_zero() && b.is_zero()) continue;
    const auto r = gcd_ext(zq, a, b);
    CHECK(add(zq, mul(zq, r.u, a), mul(zq, r.w, b)) == r.g);
    CHECK(r.g.leading() == 1u);
    CHECK(mod(zq, a, r.g).is_zero());
    CHECK(mod(zq, b, r.g).is_zero());
  }
  try {
    gcd_ext(zq, PolyFq(), PolyFq());
    FAIL("expected BothZero");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BothZero);
  }
}

TEST_CASE("division over R needs a unit leading coefficient") {
  const auto ring = make_ring(make_prime_field(3), 3);
  const PolyR f({ring.one(), ring.one(), ring.one()});
  const PolyR g({ring.one(), ring.v_power(1)});
  try {
    divmod(ring, f, g);
    FAIL("expected NonUnitLeadingCoefficient");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonUnitLeadingCoefficient);
  }
}

TEST_CASE("x^p - 1 arithmetic") {
  const Zq zq(3);
  const auto f = PolyFq({1, 0, 0, 0, 0, 2});
  CHECK(mod_xn_minus_1(zq, f, 5) == PolyFq({0}));
  CHECK(cyclic_mul(zq, PolyFq({0, 0, 0, 1}), PolyFq({0, 0, 1}), 5) == PolyFq({1}));
  CHECK(evaluate(zq, PolyFq({1, 1, 1}), 2u) == 1u);
  CHECK(make_monic(zq, PolyFq({1, 2})) == PolyFq({2, 1}));
}

TEST_CASE("text format") {
  const Zq zq(7);
  CHECK(format_poly(PolyFq({1, 2, 0, 1})) == "1+2*x+x^3");
  CHECK(format_poly(PolyFq()) == "0");
  CHECK(parse_poly(zq, " 1 + 2*x +x^3") == PolyFq({1, 2, 0, 1}));
  CHECK(parse_poly(zq, "x+x") == PolyFq({0, 2}));
  CHECK(parse_poly(zq, "9") == PolyFq({2}));
  std::mt19937 rng(9);
  for (int t = 0; t < 50; ++t) {
    const auto f = random_poly(rng, 7, 1 + t % 20);
    CHECK(parse_poly(zq, format_poly(f)) == f);
  }
  for (const char* bad : {"", "1+", "x^", "2*", "1++x", "y", "x^-1"}) {
    try {
      parse_poly(zq, bad);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ParseError);
    }
  }
}

TEST_CASE("idempotent generators of every divisor of x^13 - 1 over F_3") {
  const Zq zq(3);
  const auto split = factor_xp_minus_1(make_prime_field(3), 13);
  const auto xp = xn_minus_one(zq, 13);
  const std::size_t nf = split.factors.size();
  CHECK(nf == 5);
  for (u32 mask = 0; mask < (1u << nf) - 1; ++mask) {
    PolyFq g({1});
    for (std::size_t i = 0; i < nf; ++i)
      if (mask & (1u << i)) g = mul(zq, g, split.factors[i].factor);
    const auto e = idempotent_of_cyclic(zq, g, 13);
    CHECK(cyclic_mul(zq, e, e, 13) == e);
    CHECK(generator_of_ideal(zq, e, 13) == g);
    if (!e.is_zero()) CHECK(mod(zq, e, g).is_zero());
  }
  try {
    idempotent_of_cyclic(zq, xp, 13);
    FAIL("expected InvalidArgument");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidArgument);
  }
  try {
    idempotent_of_cyclic(zq, PolyFq({1, 1, 1}), 13);
    FAIL("expected NotADivisor");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotADivisor);
  }
}

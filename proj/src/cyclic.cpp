#include "madic/cyclic.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

namespace madic {

PolyFq Splitting::roots_product(const std::vector<u32>& exponents) const {
  Poly<FieldCtx> acc = constant(ext, ext.one());
  for (u32 k : exponents) {
    const Poly<FieldCtx> linear({ext.neg(ext.pow(alpha, k)), ext.one()});
    acc = mul(ext, acc, linear);
  }
  std::vector<u32> coeffs;
  coeffs.reserve(acc.size());
  for (const auto& c : acc.coeffs()) {
    if (!ext.in_base(c))
      throw Error(Errc::QNotResidue, "exponent set is not a union of q-cyclotomic cosets; product leaves F_q");
    coeffs.push_back(c.coords[0]);
  }
  return PolyFq(std::move(coeffs));
}

Splitting factor_xp_minus_1(const FieldCtx& base, u32 p, u32 root_power) {
  if (base.degree() != 1) throw Error(Errc::InvalidArgument, "factor_xp_minus_1 expects a prime field");
  const u32 q = base.characteristic();
  if (!is_prime(p)) throw Error(Errc::NonPrimeModulus, "length p = " + std::to_string(p) + " is not prime");
  if (p % q == 0) throw Error(Errc::NotCoprime, "p and q must be coprime");
  if (root_power % p == 0) throw Error(Errc::NotCoprime, "root power must be coprime to p");

  const auto t = static_cast<unsigned>(order_mod(q, p));
  Splitting s{q, p, root_power, make_extension(q, t), {}, {}};
  const FieldElt gamma = s.ext.pow(s.ext.primitive_element(), (s.ext.size() - 1) / p);
  s.alpha = s.ext.pow(gamma, root_power);
  if (s.ext.multiplicative_order(s.alpha) != p) throw Error(Errc::Internal, "alpha is not a primitive p-th root");

  std::vector<bool> seen(p, false);
  for (u32 k = 0; k < p; ++k) {
    if (seen[k]) continue;
    std::vector<u32> coset;
    for (u64 x = k; !seen[x]; x = x * q % p) {
      seen[x] = true;
      coset.push_back(static_cast<u32>(x));
    }
    std::sort(coset.begin(), coset.end());
    auto factor = s.roots_product(coset);
    s.factors.push_back({std::move(coset), std::move(factor)});
  }

  const Zq zq(q);
  PolyFq product = constant(zq, zq.one());
  for (const auto& f : s.factors) product = mul(zq, product, f.factor);
  if (product != xn_minus_one(zq, p)) throw Error(Errc::Internal, "cyclotomic factors do not multiply to x^p - 1");
  return s;
}

PolyFq idempotent_of_cyclic(const Zq& zq, const PolyFq& g, u32 p) {
  if (p % zq.modulus() == 0) throw Error(Errc::NotCoprime, "p and q must be coprime");
  const auto xp = xn_minus_one(zq, p);
  if (g.is_zero()) throw Error(Errc::NotADivisor, "zero polynomial");
  auto [cofactor, rem] = divmod(zq, xp, g);
  if (!rem.is_zero()) throw Error(Errc::NotADivisor, "generator does not divide x^" + std::to_string(p) + " - 1");
  if (g.degree() == p) throw Error(Errc::InvalidArgument, "generator x^p - 1 gives the zero code");
  const auto bez = gcd_ext(zq, g, cofactor);
  if (bez.g.degree() != 0) throw Error(Errc::Internal, "x^p - 1 is not squarefree");
  return mod_xn_minus_1(zq, mul(zq, bez.u, g), p);
}

PolyFq generator_of_ideal(const Zq& zq, const PolyFq& e, u32 p) {
  const auto xp = xn_minus_one(zq, p);
  if (mod_xn_minus_1(zq, e, p).is_zero()) return xp;
  return gcd(zq, mod_xn_minus_1(zq, e, p), xp);
}

std::string format_poly(const PolyFq& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const u32 c = f.coeffs()[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
  }

  std::vector<std::pair<u64, std::size_t>> terms() {
    if (s_.empty()) fail("empty polynomial");
    std::vector<std::pair<u64, std::size_t>> out;
    while (true) {
      out.push_back(term());
      if (pos_ == s_.size()) break;
      expect('+');
    }
    return out;
  }

 private:
  std::pair<u64, std::size_t> term() {
    u64 coeff = 1;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      coeff = number();
      if (pos_ == s_.size() || s_[pos_] == '+') return {coeff, 0};
      expect('*');
    }
    expect('x');
    std::size_t exp = 1;
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      exp = static_cast<std::size_t>(number());
    }
    return {coeff, exp};
  }

  u64 number() {
    u64 v = 0;
    const char* begin = s_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(begin, s_.data() + s_.size(), v);
    if (ec != std::errc() || ptr == begin) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }

  void expect(char ch) {
    if (pos_ >= s_.size() || s_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::ParseError, what + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyFq parse_poly(const Zq& zq, std::string_view text) {
  constexpr std::size_t kMaxDegree = 1u << 20;
  PolyParser parser(text);
  std::vector<u32> coeffs;
  for (auto [c, k] : parser.terms()) {
    if (k > kMaxDegree) throw Error(Errc::ParseError, "exponent too large");
    if (coeffs.size() <= k) coeffs.resize(k + 1, 0);
    coeffs[k] = zq.add(coeffs[k], static_cast<u32>(c % zq.modulus()));
  }
  return PolyFq(std::move(coeffs));
}

}  // namespace madic

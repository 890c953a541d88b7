#include "madic/field.hpp"

#include <string>

#include "madic/error.hpp"
#include "madic/poly.hpp"

namespace madic {

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<u64> distinct_prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

__extension__ using u128 = unsigned __int128;

u64 pow_mod(u64 base, u64 exp, u64 mod) {
  if (mod == 1) return 0;
  u128 result = 1;
  u128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<u64>(result);
}

u64 gcd_u64(u64 a, u64 b) {
  while (b != 0) a = std::exchange(b, a % b);
  return a;
}

u64 order_mod(u64 a, u64 n) {
  if (n < 2 || gcd_u64(a % n, n) != 1)
    throw Error(Errc::NotCoprime, std::to_string(a) + " is not a unit modulo " + std::to_string(n));
  u64 k = 1;
  u64 x = a % n;
  while (x != 1) {
    x = static_cast<u64>(static_cast<u128>(x) * a % n);
    ++k;
  }
  return k;
}

bool is_primitive_root(u64 g, u64 p) {
  if (p == 2) return g % 2 == 1;
  if (g % p == 0) return false;
  for (u64 r : distinct_prime_factors(p - 1))
    if (pow_mod(g, (p - 1) / r, p) == 1) return false;
  return true;
}

u32 smallest_primitive_root(u32 p) {
  if (!is_prime(p)) throw Error(Errc::NonPrimeModulus, std::to_string(p) + " is not prime");
  for (u32 g = 1; g < p; ++g)
    if (is_primitive_root(g, p)) return g;
  throw Error(Errc::Internal, "no primitive root found");
}

Zq::Zq(u32 q) : q_(q) {
  if (!is_prime(q)) throw Error(Errc::NonPrimeModulus, std::to_string(q) + " is not prime");
}

Zq::Elem Zq::from_int(std::int64_t v) const noexcept {
  const std::int64_t r = v % static_cast<std::int64_t>(q_);
  return static_cast<Elem>(r < 0 ? r + q_ : r);
}

Zq::Elem Zq::inv(Elem a) const {
  if (a % q_ == 0) throw Error(Errc::DivisionByZero, "inverse of zero in F_" + std::to_string(q_));
  return pow(a, q_ - 2);
}

// ---------------------------------------------------------------------------

FieldCtx::FieldCtx(u32 q, unsigned t, std::vector<u32> modulus)
    : q_(q), t_(t), size_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < t; ++i) size_ *= q;
}

FieldElt FieldCtx::one() const {
  auto e = zero();
  e.coords[0] = 1 % q_;
  return e;
}

FieldElt FieldCtx::from_base(u32 c) const {
  auto e = zero();
  e.coords[0] = c % q_;
  return e;
}

FieldElt FieldCtx::from_index(u64 index) const {
  auto e = zero();
  for (unsigned i = 0; i < t_; ++i) {
    e.coords[i] = static_cast<u32>(index % q_);
    index /= q_;
  }
  return e;
}

u64 FieldCtx::to_index(const Elem& a) const {
  u64 idx = 0;
  for (unsigned i = t_; i-- > 0;) idx = idx * q_ + a.coords[i];
  return idx;
}

FieldElt FieldCtx::add(const Elem& a, const Elem& b) const {
  FieldElt r{std::vector<u32>(t_)};
  for (unsigned i = 0; i < t_; ++i) {
    const u32 s = a.coords[i] + b.coords[i];
    r.coords[i] = s >= q_ ? s - q_ : s;
  }
  return r;
}

FieldElt FieldCtx::neg(const Elem& a) const {
  FieldElt r{std::vector<u32>(t_)};
  for (unsigned i = 0; i < t_; ++i) r.coords[i] = a.coords[i] == 0 ? 0 : q_ - a.coords[i];
  return r;
}

FieldElt FieldCtx::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

void FieldCtx::reduce(std::vector<u32>& v) const {
  // modulus is monic of degree t
  for (std::size_t d = v.size(); d-- > t_;) {
    const u64 c = v[d];
    if (c == 0) continue;
    v[d] = 0;
    for (unsigned j = 0; j < t_; ++j) {
      const u64 sub = c * modulus_[j] % q_;
      v[d - t_ + j] = static_cast<u32>((v[d - t_ + j] + q_ - sub) % q_);
    }
  }
  v.resize(t_);
}

FieldElt FieldCtx::mul(const Elem& a, const Elem& b) const {
  if (t_ == 1) return FieldElt{{static_cast<u32>(static_cast<u64>(a.coords[0]) * b.coords[0] % q_)}};
  std::vector<u32> v(2 * t_ - 1, 0);
  for (unsigned i = 0; i < t_; ++i) {
    if (a.coords[i] == 0) continue;
    for (unsigned j = 0; j < t_; ++j)
      v[i + j] = static_cast<u32>((v[i + j] + static_cast<u64>(a.coords[i]) * b.coords[j]) % q_);
  }
  reduce(v);
  return FieldElt{std::move(v)};
}

FieldElt FieldCtx::pow(Elem a, u64 e) const {
  auto result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

FieldElt FieldCtx::inv(const Elem& a) const {
  if (is_zero(a)) throw Error(Errc::DivisionByZero, "inverse of zero field element");
  return pow(a, size_ - 2);
}

bool FieldCtx::is_zero(const Elem& a) noexcept {
  for (u32 c : a.coords)
    if (c != 0) return false;
  return true;
}

bool FieldCtx::in_base(const Elem& a) const noexcept {
  for (unsigned i = 1; i < t_; ++i)
    if (a.coords[i] != 0) return false;
  return true;
}

u64 FieldCtx::multiplicative_order(const Elem& a) const {
  if (is_zero(a)) throw Error(Errc::DivisionByZero, "multiplicative order of zero");
  // Smallest divisor k of q^t - 1 with a^k = 1.
  const u64 group = size_ - 1;
  u64 order = group;
  for (u64 r : distinct_prime_factors(group)) {
    while (order % r == 0 && pow(a, order / r) == one()) order /= r;
  }
  return order;
}

namespace {

void check_size(u32 q, unsigned t) {
  if (t == 0) throw Error(Errc::InvalidArgument, "extension degree must be at least 1");
  u64 size = 1;
  for (unsigned i = 0; i < t; ++i) {
    size *= q;
    if (size > kMaxFieldSize)
      throw Error(Errc::FieldTooLarge, "field of size " + std::to_string(q) + "^" + std::to_string(t) +
                                           " exceeds 2^31");
  }
}

// Ben-Or: f of degree t is irreducible iff gcd(f, y^{q^i} - y) = 1 for i <= t/2.
bool is_irreducible(const Zq& zq, const Poly<Zq>& f) {
  const std::size_t t = *f.degree();
  const Poly<Zq> y = monomial(zq, zq.one(), 1);
  Poly<Zq> frob = y;
  for (std::size_t i = 1; i <= t / 2; ++i) {
    frob = powmod(zq, frob, zq.modulus(), f);
    const auto g = gcd(zq, f, sub(zq, frob, y));
    if (g.degree() != 0) return false;
  }
  return true;
}

}  // namespace

FieldCtx make_prime_field(u32 q) {
  if (!is_prime(q)) throw Error(Errc::NonPrimeModulus, std::to_string(q) + " is not prime");
  check_size(q, 1);
  FieldCtx ctx(q, 1, {0, 1});
  ctx.primitive_ = FieldElt{{q == 2 ? 1u : smallest_primitive_root(q)}};
  return ctx;
}

FieldCtx make_extension(u32 base_q, unsigned t) {
  if (!is_prime(base_q)) throw Error(Errc::NonPrimeModulus, std::to_string(base_q) + " is not prime");
  check_size(base_q, t);
  if (t == 1) return make_prime_field(base_q);

  const Zq zq(base_q);
  u64 count = 1;
  for (unsigned i = 0; i < t; ++i) count *= base_q;

  // Tuples (c_0, ..., c_{t-1}) in lexicographic order, c_0 most significant.
  auto tuple_at = [&](u64 rank) {
    std::vector<u32> c(t);
    for (unsigned i = t; i-- > 0;) {
      c[i] = static_cast<u32>(rank % base_q);
      rank /= base_q;
    }
    return c;
  };

  std::vector<u32> modulus;
  for (u64 rank = 0; rank < count && modulus.empty(); ++rank) {
    auto c = tuple_at(rank);
    c.push_back(1);
    if (c[0] == 0) continue;  // divisible by y
    if (is_irreducible(zq, Poly<Zq>(c))) modulus = std::move(c);
  }
  if (modulus.empty()) throw Error(Errc::Internal, "no irreducible polynomial found");

  FieldCtx ctx(base_q, t, std::move(modulus));
  const u64 group = ctx.size() - 1;
  const auto factors = distinct_prime_factors(group);
  for (u64 rank = 1; rank < count; ++rank) {
    FieldElt cand{tuple_at(rank)};
    bool generator = true;
    for (u64 r : factors) {
      if (ctx.pow(cand, group / r) == ctx.one()) {
        generator = false;
        break;
      }
    }
    if (generator) {
      ctx.primitive_ = std::move(cand);
      return ctx;
    }
  }
  throw Error(Errc::Internal, "no primitive element found");
}

}  // namespace madic

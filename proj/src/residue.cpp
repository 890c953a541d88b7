#include "madic/residue.hpp"

#include <algorithm>
#include <string>

namespace madic {

std::optional<u32> ResidueSystem::class_of(u64 x) const {
  const auto r = static_cast<u32>(x % p_);
  if (r == 0) return std::nullopt;
  return class_of_[r];
}

ResidueSystem build_residue_system(u32 p, u32 m, std::optional<u32> b, std::optional<u32> a) {
  if (!is_prime(p)) throw Error(Errc::NonPrimeModulus, "length p = " + std::to_string(p) + " is not prime");
  if (m < 2 || (p - 1) % m != 0)
    throw Error(Errc::InvalidM, "m = " + std::to_string(m) + " must be at least 2 and divide p-1 = " +
                                    std::to_string(p - 1));

  ResidueSystem sys;
  sys.p_ = p;
  sys.m_ = m;
  if (b) {
    if (!is_primitive_root(*b % p, p))
      throw Error(Errc::NotPrimitiveRoot, std::to_string(*b) + " is not a primitive root modulo " + std::to_string(p));
    sys.b_ = *b % p;
  } else {
    sys.b_ = smallest_primitive_root(p);
  }

  std::vector<u32> q0;
  for (u32 x = 1; x < p; ++x) q0.push_back(static_cast<u32>(pow_mod(x, m, p)));
  std::sort(q0.begin(), q0.end());
  q0.erase(std::unique(q0.begin(), q0.end()), q0.end());

  sys.class_of_.assign(p, 0);
  u64 shift = 1;
  for (u32 i = 0; i < m; ++i) {
    std::vector<u32> cls;
    for (u32 x : q0) cls.push_back(static_cast<u32>(shift * x % p));
    std::sort(cls.begin(), cls.end());
    for (u32 x : cls) sys.class_of_[x] = i;
    sys.classes_.push_back(std::move(cls));
    shift = shift * sys.b_ % p;
  }

  if (a) {
    const u32 ar = *a % p;
    if (ar == 0) throw Error(Errc::NotCoprime, "multiplier must be nonzero modulo p");
    const u32 j = sys.class_of_[ar];
    if (gcd_u64(j, m) != 1)
      throw Error(Errc::MultiplierNotCyclic, "multiplier " + std::to_string(*a) + " lies in Q_" + std::to_string(j) +
                                                 " and gcd(" + std::to_string(j) + ", m) != 1");
    sys.a_ = ar;
    sys.a_class_ = j;
  } else {
    sys.a_ = sys.classes_[1].front();
    sys.a_class_ = 1;
  }
  return sys;
}

std::vector<u32> apply_mu(u32 p, u32 a, const std::vector<u32>& exponents) {
  if (gcd_u64(a % p, p) != 1) throw Error(Errc::NotCoprime, "multiplier must be coprime to p");
  std::vector<u32> out;
  out.reserve(exponents.size());
  for (u32 x : exponents) out.push_back(static_cast<u32>(static_cast<u64>(a) * x % p));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace madic

#include "madic/analysis.hpp"

#include <algorithm>
#include <string>
#include <thread>

namespace madic {

std::optional<u32> DistanceReport::free_rank() const {
  if (ranks.empty()) return std::nullopt;
  for (u32 k : ranks)
    if (k != ranks.front()) return std::nullopt;
  return ranks.front();
}

std::optional<u64> message_count(u64 q, u64 k, u64 cap) {
  u64 total = 1;
  for (u64 i = 0; i < k; ++i) {
    if (total > cap / q) return std::nullopt;
    total *= q;
  }
  return total <= cap ? std::optional<u64>(total) : std::nullopt;
}

namespace {

// Enumerates sum_i m_i * rows[i] over all messages m in F_q^k. Each row is a
// flat vector of n blocks of `width` coordinates; the weight of a vector is
// the number of blocks with a nonzero coordinate.
class Enumerator {
 public:
  Enumerator(u32 q, u32 n, u32 width, std::vector<std::vector<u32>> rows)
      : q_(q), n_(n), width_(width), rows_(std::move(rows)) {}

  std::vector<u64> run() const {
    const std::size_t k = rows_.size();
    u64 total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= q_;

    // Split on a prefix of the most significant digits when the space is big.
    std::size_t prefix_digits = 0;
    u64 chunks = 1;
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (total >= (u64{1} << 16) && hw > 1) {
      while (prefix_digits < k && chunks < u64{hw} * 4) {
        chunks *= q_;
        ++prefix_digits;
      }
    }

    std::vector<std::vector<u64>> partial(chunks, std::vector<u64>(n_ + 1, 0));
    auto work = [&](u64 first, u64 stride) {
      for (u64 c = first; c < chunks; c += stride) enumerate_chunk(c, prefix_digits, partial[c]);
    };
    if (chunks == 1) {
      work(0, 1);
    } else {
      const unsigned threads = static_cast<unsigned>(std::min<u64>(hw, chunks));
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    }

    std::vector<u64> dist(n_ + 1, 0);
    for (const auto& part : partial)
      for (u32 w = 0; w <= n_; ++w) dist[w] += part[w];
    return dist;
  }

 private:
  void add_row(std::vector<u32>& word, std::size_t row) const {
    const auto& r = rows_[row];
    for (std::size_t i = 0; i < word.size(); ++i) {
      const u32 s = word[i] + r[i];
      word[i] = s >= q_ ? s - q_ : s;
    }
  }

  u32 weight(const std::vector<u32>& word) const {
    u32 w = 0;
    for (u32 j = 0; j < n_; ++j) {
      for (u32 c = 0; c < width_; ++c) {
        if (word[j * width_ + c] != 0) {
          ++w;
          break;
        }
      }
    }
    return w;
  }

  // Messages are ordered lexicographically with digit 0 most significant; the
  // chunk fixes digits [0, prefix_digits).
  void enumerate_chunk(u64 chunk, std::size_t prefix_digits, std::vector<u64>& dist) const {
    const std::size_t k = rows_.size();
    std::vector<u32> word(static_cast<std::size_t>(n_) * width_, 0);
    for (std::size_t i = prefix_digits; i-- > 0;) {
      const u32 digit = static_cast<u32>(chunk % q_);
      chunk /= q_;
      for (u32 r = 0; r < digit; ++r) add_row(word, i);
    }
    std::vector<u32> digits(k, 0);
    while (true) {
      ++dist[weight(word)];
      // Odometer step over the free digits; wrapping a digit from q-1 to 0
      // also amounts to adding its row once more.
      std::size_t i = k;
      bool done = true;
      while (i-- > prefix_digits) {
        add_row(word, i);
        if (++digits[i] < q_) {
          done = false;
          break;
        }
        digits[i] = 0;
      }
      if (done) break;
    }
  }

  u32 q_, n_, width_;
  std::vector<std::vector<u32>> rows_;
};

std::vector<std::vector<u32>> shift_rows(const PolyFq& g, u32 n) {
  std::vector<std::vector<u32>> rows;
  const u32 deg = static_cast<u32>(*g.degree());
  for (u32 i = 0; i + deg < n; ++i) {
    std::vector<u32> row(n, 0);
    for (u32 j = 0; j <= deg; ++j) row[i + j] = g.coeffs()[j];
    rows.push_back(std::move(row));
  }
  return rows;
}

u32 dimension_of(const PolyFq& g, u32 n) {
  if (g.is_zero()) throw Error(Errc::InvalidArgument, "zero generator polynomial");
  if (*g.degree() > n) throw Error(Errc::InvalidArgument, "generator degree exceeds the code length");
  return n - static_cast<u32>(*g.degree());
}

void require_cap(u64 q, u64 k, u64 cap) {
  if (!message_count(q, k, cap))
    throw Error(Errc::TooLarge, std::to_string(q) + "^" + std::to_string(k) + " codewords exceed the enumeration cap " +
                                    std::to_string(cap) + "; raise --cap");
}

}  // namespace

std::vector<u64> weight_enumerator(const Zq& zq, const PolyFq& generator, u32 n, u64 cap) {
  const u32 k = dimension_of(generator, n);
  require_cap(zq.modulus(), k, cap);
  return Enumerator(zq.modulus(), n, 1, shift_rows(generator, n)).run();
}

DistanceReport min_distance_field(const Zq& zq, const PolyFq& generator, u32 n, u64 cap) {
  DistanceReport rep;
  rep.n = n;
  rep.ranks = {dimension_of(generator, n)};
  rep.method = "exhaustive";
  rep.weight_distribution = weight_enumerator(zq, generator, n, cap);
  rep.enumerated = *message_count(zq.modulus(), rep.ranks[0], cap);
  for (u32 w = 1; w <= n; ++w) {
    if (rep.weight_distribution[w] != 0) {
      rep.d_min = w;
      break;
    }
  }
  return rep;
}

DistanceReport min_distance_field(const CyclicCode& code, u64 cap) {
  return min_distance_field(Zq(code.q), code.generator, code.p, cap);
}

std::vector<u64> ring_weight_enumerator(const RingCtx& ring, std::span<const PolyFq> gens, u32 n, u64 cap) {
  if (gens.size() != ring.s()) throw Error(Errc::InvalidArgument, "need exactly s component generators");
  const u32 s = ring.s();
  u64 total_k = 0;
  std::vector<std::vector<u32>> rows;
  for (u32 k = 0; k < s; ++k) {
    total_k += dimension_of(gens[k], n);
    for (const auto& field_row : shift_rows(gens[k], n)) {
      // eta_k * row, written in the v-basis of R.
      std::vector<u32> row(static_cast<std::size_t>(n) * s, 0);
      for (u32 j = 0; j < n; ++j) {
        if (field_row[j] == 0) continue;
        const auto c = ring.mul(ring.from_base(field_row[j]), ring.eta()[k]);
        for (u32 i = 0; i < s; ++i) row[static_cast<std::size_t>(j) * s + i] = c.coeffs[i];
      }
      rows.push_back(std::move(row));
    }
  }
  require_cap(ring.q(), total_k, cap);
  return Enumerator(ring.q(), n, s, std::move(rows)).run();
}

DistanceReport min_distance_ring(const RingCtx& ring, std::span<const PolyFq> gens, u32 n, u64 cap) {
  if (gens.size() != ring.s()) throw Error(Errc::InvalidArgument, "need exactly s component generators");
  DistanceReport rep;
  rep.n = n;
  rep.method = "component-min";
  const Zq& zq = ring.base();
  u64 total_k = 0;
  for (const auto& g : gens) {
    const auto comp = min_distance_field(zq, g, n, cap);
    rep.ranks.push_back(comp.ranks[0]);
    rep.enumerated += comp.enumerated;
    total_k += comp.ranks[0];
    if (comp.d_min != 0 && (rep.d_min == 0 || comp.d_min < rep.d_min)) rep.d_min = comp.d_min;
  }
  if (const auto count = message_count(ring.q(), total_k, cap)) {
    const auto dist = ring_weight_enumerator(ring, gens, n, cap);
    u32 d = 0;
    for (u32 w = 1; w <= n; ++w) {
      if (dist[w] != 0) {
        d = w;
        break;
      }
    }
    rep.exhaustive_d = d;
    rep.exhaustive_enumerated = *count;
  }
  return rep;
}

DistanceReport min_distance_ring(const RingCtx& ring, const RingCode& code, u32 n, u64 cap) {
  std::vector<PolyFq> gens;
  for (const auto& c : code.components) gens.push_back(c.generator);
  return min_distance_ring(ring, gens, n, cap);
}

GriesmerResult griesmer_check(u64 n, u64 k, u64 d, u64 q) {
  if (k == 0 || d == 0) throw Error(Errc::InvalidArgument, "Griesmer bound needs k >= 1 and d >= 1");
  if (q < 2) throw Error(Errc::InvalidArgument, "alphabet size must be at least 2");
  u64 bound = 0;
  u64 qi = 1;
  for (u64 i = 0; i < k; ++i) {
    bound += (d + qi - 1) / qi;
    if (qi <= d) qi *= q;  // beyond d every term is 1
  }
  return {bound, n == bound};
}

}  // namespace madic

/*******************************************************************************
 * Seeded randomness: counter-based hashing for order-independent decisions and
 * a small stateful generator for visit orders, pivots and traversals.
 *
 * All helpers avoid std:: distributions so that results only depend on the
 * seed, not on the standard library implementation.
 *
 * @file:   random.h
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace lmpart {
[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

[[nodiscard]] constexpr std::uint64_t mix_seed(const std::uint64_t seed, const std::uint64_t salt) {
  return splitmix64(splitmix64(seed) ^ (salt + 0x632BE59BD9B4E019ULL));
}

template <typename... Salts>
[[nodiscard]] constexpr std::uint64_t mix_seed(const std::uint64_t seed, const std::uint64_t salt,
                                               const Salts... rest) {
  return mix_seed(mix_seed(seed, salt), static_cast<std::uint64_t>(rest)...);
}

// Maps 64 random bits to a double in [0, 1).
[[nodiscard]] constexpr double unit_from_bits(const std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Seed-determined uniform value in [0, 1) attached to an undirected edge.
[[nodiscard]] constexpr double edge_coin(const std::uint64_t seed, const std::uint64_t u,
                                         const std::uint64_t v) {
  const auto lo = u < v ? u : v;
  const auto hi = u < v ? v : u;
  return unit_from_bits(mix_seed(seed, lo, hi));
}

class Random {
public:
  explicit Random(const std::uint64_t seed) : _engine(splitmix64(seed)) {}

  std::uint64_t next() {
    return _engine();
  }

  double next_unit() {
    return unit_from_bits(_engine());
  }

  bool next_bool(const double probability) {
    return next_unit() < probability;
  }

  // Uniform integer in [0, bound), bound > 0.
  std::uint64_t next_below(const std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = _engine();
    while (x >= limit) {
      x = _engine();
    }
    return x % bound;
  }

  template <typename T> void shuffle(std::vector<T> &values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[next_below(i)]);
    }
  }

  template <typename T> std::vector<T> permutation(const T n) {
    std::vector<T> order(n);
    std::iota(order.begin(), order.end(), T{0});
    shuffle(order);
    return order;
  }

private:
  std::mt19937_64 _engine;
};
} // namespace lmpart

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dfa/types.hpp"

namespace dfa {

/// splitmix64 finalizer; the basis for deriving independent RNG streams.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// FNV-1a hash of a string tag, for naming RNG streams.
constexpr std::uint64_t tag_hash(const char* s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (; *s != '\0'; ++s) {
    h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(*s));
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace detail {
inline std::uint64_t seed_component(std::uint64_t v) noexcept { return v; }
inline std::uint64_t seed_component(const char* s) noexcept { return tag_hash(s); }
template <typename T>
  requires std::is_integral_v<T>
std::uint64_t seed_component(T v) noexcept {
  return static_cast<std::uint64_t>(v);
}
}  // namespace detail

/// Derives a seed from a base seed and a stable identifier (string tags and
/// integers). Streams derived with distinct identifiers are independent, so
/// results do not depend on scheduling or evaluation order.
template <typename... Parts>
std::uint64_t derive_seed(std::uint64_t seed, Parts... parts) {
  std::uint64_t h = mix64(seed);
  ((h = mix64(h ^ mix64(detail::seed_component(parts)))), ...);
  return h;
}

/// Deterministic random generator. Distribution sampling is implemented here
/// rather than with std:: distributions, whose output is implementation
/// defined; sequences are reproducible from the seed alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

  std::uint64_t bits() { return engine_(); }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal (Box-Muller, second value cached).
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    cached_ = r * std::sin(theta);
    have_cached_ = true;
    return r * std::cos(theta);
  }

  /// Uniform integer in [0, n), unbiased.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = bits();
    } while (v >= limit);
    return v % n;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

  std::vector<index_t> permutation(index_t n) {
    std::vector<index_t> idx(static_cast<std::size_t>(n));
    for (index_t i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    shuffle(idx);
    return idx;
  }

  /// k of n indices without replacement, returned in increasing order so that
  /// subsampled rows keep their original relative order.
  std::vector<index_t> sample_without_replacement(index_t n, index_t k) {
    std::vector<index_t> idx = permutation(n);
    idx.resize(static_cast<std::size_t>(std::min(n, k)));
    std::sort(idx.begin(), idx.end());
    return idx;
  }

 private:
  std::mt19937_64 engine_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace dfa

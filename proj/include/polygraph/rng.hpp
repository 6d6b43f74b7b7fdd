#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace polygraph {

inline std::uint64_t fnv1a64(std::string_view s,
                             std::uint64_t h = 14695981039346656037ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Hash of a token sequence. A separator byte keeps ["ab","c"] and ["a","bc"]
// distinct.
inline std::uint64_t hash_tokens(const std::vector<std::string>& tokens) {
  std::uint64_t h = 14695981039346656037ull;
  for (const auto& t : tokens) {
    h = fnv1a64(t, h);
    h ^= 0x1e;
    h *= 1099511628211ull;
  }
  return h;
}

// SplitMix64 generator. Chosen over std::mt19937 because every draw and the
// double mapping below are fixed by this header, not by the standard library
// implementation, so seeded runs reproduce bit-exactly across platforms.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~0ull; }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t operator()() { return next(); }

  // Uniform in the open interval (0,1).
  double uniform01() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Uniform in (lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform in (-1, 1).
  double symmetric() { return 2.0 * uniform01() - 1.0; }

  bool bernoulli(double p) { return uniform01() < p; }

  // Unbiased integer in [0, n). Rejection keeps it exact; the loop is
  // deterministic for a fixed state.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = max() - max() % n;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % n;
  }

  // Child stream keyed by a label. Does not advance this generator.
  SplitMix64 split(std::string_view label) const {
    return SplitMix64(fnv1a64(label, state_ ^ 0x9e3779b97f4a7c15ull));
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace polygraph

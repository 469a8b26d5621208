#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

namespace homcorr {

// Counter-based deterministic RNG. Every random quantity in the project is
// derived from a single 64-bit seed by hashing (seed, stream tag, index),
// so parallel replicas draw from independent, reproducible streams and the
// results are identical across platforms and thread counts.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) { have_spare_ = false; }

  static uint64_t hash_combine(uint64_t seed, uint64_t v) {
    // splitmix64 finalizer over the xor-combined words
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL + v;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static uint64_t hash_tag(std::string_view tag) {
    uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    for (char c : tag) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  // Child stream for (tag, index); independent of draws made on the parent.
  static Rng stream(uint64_t seed, std::string_view tag, uint64_t index = 0) {
    return Rng(hash_combine(hash_combine(seed, hash_tag(tag)), index));
  }

  uint64_t next_u64() {
    // splitmix64 step
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, n).
  uint64_t next_below(uint64_t n) { return next_u64() % n; }

  // Standard normal via Box-Muller (explicit, platform-independent).
  double next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 == 0.0) u1 = next_double();
    double u2 = next_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // Fisher-Yates shuffle of indices [0, n).
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_;
};

}  // namespace homcorr

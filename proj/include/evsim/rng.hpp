#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace evsim {

// Counter-based deterministic random stream. A stream is identified purely by
// its 64-bit key; draws are the splitmix64 output sequence for that key, so
// the same (seed, stage, index) always reproduces the same values no matter
// which thread asks or in what order streams are created.
class RngStream {
 public:
  explicit RngStream(std::uint64_t key) : state_(key) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller; the paired value is cached.
  double next_gaussian() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double u1 = next_unit();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
  }

 private:
  std::uint64_t state_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

namespace detail {

inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t hash_tag(std::string_view tag) {
  // FNV-1a
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : tag) {
    h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace detail

// Derives the key of the stream identified by (seed, stage tag, indices).
// Omitted indices address the stage-global stream.
inline std::uint64_t stream_key(std::uint64_t seed, std::string_view stage,
                                std::uint64_t index = 0,
                                std::uint64_t subindex = 0) {
  std::uint64_t k = detail::mix64(seed ^ detail::hash_tag(stage));
  k = detail::mix64(k ^ index);
  k = detail::mix64(k ^ subindex);
  return k;
}

inline RngStream rng_for(std::uint64_t seed, std::string_view stage,
                         std::uint64_t index = 0, std::uint64_t subindex = 0) {
  return RngStream(stream_key(seed, stage, index, subindex));
}

}  // namespace evsim

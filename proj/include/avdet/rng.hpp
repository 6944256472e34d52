// Deterministic random number generation. Standard-library distributions are
// implementation-defined, so all draws here are hand-rolled on top of a
// splitmix64 core: the same seed produces the same stream on every platform.
// Independent streams are derived from (seed, stream_id) so per-scene work can
// run on any number of workers without changing the output.

#pragma once

#include <cstdint>
#include <cmath>
#include <cstddef>
#include <vector>

namespace avdet {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // Stream derivation: mixes the stream id into the seed so streams with
  // nearby ids are statistically independent.
  static Rng for_stream(std::uint64_t seed, std::uint64_t stream_id) {
    Rng r(seed ^ mix(stream_id + 0x9e3779b97f4a7c15ull));
    r.next_u64();  // decorrelate near-zero seeds
    return r;
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Box-Muller; consumes exactly two uniforms per call.
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  // Index in [0, n). Modulo bias is ~2^-50 for desk-scale n.
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(next_u64() % n); }

  // Fisher-Yates, platform independent (std::shuffle is not).
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = index(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

// Stream-id namespaces. Keeps per-purpose streams disjoint even when they are
// derived from the same user seed.
namespace stream {
constexpr std::uint64_t kScene = 0x100000000ull;
constexpr std::uint64_t kPrototype = 0x200000000ull;
constexpr std::uint64_t kSslEpoch = 0x300000000ull;
constexpr std::uint64_t kExtract = 0x400000000ull;
constexpr std::uint64_t kDetEpoch = 0x500000000ull;
constexpr std::uint64_t kInit = 0x600000000ull;
}  // namespace stream

}  // namespace avdet

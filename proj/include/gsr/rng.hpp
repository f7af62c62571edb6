#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace gsr {

// SplitMix64 finalizer. Used to derive decorrelated substream seeds from a
// single user-facing seed plus stream tags (graph index, signal index, ...).
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t s = mix64(seed);
  s = mix64(s ^ a);
  s = mix64(s ^ b);
  s = mix64(s ^ c);
  return s;
}

// Stream tags for derive_seed. Keeps independent uses of one config seed
// (graph generation, scheme randomness, signal draws, ...) decorrelated.
namespace stream {
inline constexpr std::uint64_t kGraphAttempt = 0x6772617068ull;   // graph retry
inline constexpr std::uint64_t kWeightedRandom = 0x77726e64ull;   // scheme draws
inline constexpr std::uint64_t kMonteCarlo = 0x6d63ull;           // per-draw MC
inline constexpr std::uint64_t kSignal = 0x736967ull;             // sweep signals
inline constexpr std::uint64_t kScheme = 0x736368ull;             // scheme seeds
}  // namespace stream

// mt19937_64 plus explicit floating-point transforms. The engine itself is
// fully specified by the standard; std::uniform_real_distribution and
// std::normal_distribution are implementation-defined, which would break
// cross-platform reproducibility of CSV output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }

  // [0, 1)
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // (0, 1]
  double uniform_pos() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller. The paired variate is discarded so the
  // generator stays stateless between calls (two engine draws per variate).
  double normal() {
    constexpr double kTwoPi = 6.283185307179586476925287;
    const double u1 = uniform_pos();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gsr

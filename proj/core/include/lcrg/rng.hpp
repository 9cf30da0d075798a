#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace lcrg {

/// Philox4x32-10 block function (Salmon et al., SC'11). Maps a 128-bit
/// counter and 64-bit key to 128 pseudo-random bits.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) noexcept;

/// Counter-based generator keyed by (seed, stream).
///
/// Draw k of stream s is a pure function of (seed, s, k), so trials can be
/// distributed over workers without handing generator state around. Meets
/// the UniformRandomBitGenerator requirements.
class SeededRng {
 public:
  using result_type = std::uint64_t;

  SeededRng(std::uint64_t seed, std::uint64_t stream) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept;

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }
  /// Unit-rate exponential by inversion, -log(1 - U).
  double exponential() noexcept;
  /// Standard normal (Box-Muller; both variates of a pair are used).
  double normal() noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

 private:
  void refill() noexcept;

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  unsigned next_ = 2;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

/// Mixes a base seed with up to two indices into an independent 64-bit seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) noexcept;

}  // namespace lcrg

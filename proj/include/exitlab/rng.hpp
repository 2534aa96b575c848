#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace exitlab {

// Identifies one independent random substream. Distinct (seed, path_id)
// pairs give statistically independent streams, so batches of paths can be
// generated in any order and on any number of workers with identical output.
struct StreamId {
  std::uint64_t seed = 0;
  std::uint64_t path_id = 0;
};

namespace detail {

// Philox 4x32-10 block function (Salmon et al., SC 2011).
inline std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                               std::array<std::uint32_t, 2> key) {
  constexpr std::uint32_t kMul0 = 0xD2511F53u;
  constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = std::uint64_t(kMul0) * ctr[0];
    const std::uint64_t p1 = std::uint64_t(kMul1) * ctr[2];
    ctr = {std::uint32_t(p1 >> 32) ^ ctr[1] ^ key[0], std::uint32_t(p1),
           std::uint32_t(p0 >> 32) ^ ctr[3] ^ key[1], std::uint32_t(p0)};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

}  // namespace detail

// Counter-based generator: key = seed, counter = (block index, path id).
// Stateless across paths; every draw is a pure function of
// (seed, path_id, draw index), which is what makes batch output independent
// of the worker count.
class PathRng {
 public:
  explicit PathRng(StreamId id)
      : key_{std::uint32_t(id.seed), std::uint32_t(id.seed >> 32)},
        path_{std::uint32_t(id.path_id), std::uint32_t(id.path_id >> 32)} {}

  std::uint64_t next_u64() {
    if (pos_ >= 4) refill();
    const std::uint32_t hi = buf_[pos_++];
    const std::uint32_t lo = buf_[pos_++];
    return (std::uint64_t(hi) << 32) | lo;
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1); safe as a log() argument.
  double uniform_open() { return (double(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

  // Standard normal via Box-Muller; second variate is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    auto [z0, z1] = normal_pair();
    spare_ = z1;
    has_spare_ = true;
    return z0;
  }

  std::pair<double, double> normal_pair() {
    const double u = uniform_open();
    const double v = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double a = 2.0 * std::numbers::pi * v;
    return {r * std::cos(a), r * std::sin(a)};
  }

 private:
  void refill() {
    buf_ = detail::philox4x32(
        {std::uint32_t(block_), std::uint32_t(block_ >> 32), path_[0], path_[1]}, key_);
    ++block_;
    pos_ = 0;
  }

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 2> path_;
  std::array<std::uint32_t, 4> buf_{};
  std::uint64_t block_ = 0;
  int pos_ = 4;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace exitlab

#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace bcdrl {

// Seeded random source with named substreams. Every simulator component owns
// its own Rng derived from (master seed, stream id) so that runs are
// reproducible and parallel sweep points never share generator state.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream) : engine_(mix(seed, stream)) {}

  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  // [0, n)
  std::uint64_t index(std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_);
  }

  int poisson(double mean) { return std::poisson_distribution<int>(mean)(engine_); }

  double gaussian() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

  std::mt19937_64& engine() { return engine_; }

  std::string serialize() const;
  void restore(const std::string& state);

  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream);

 private:
  std::mt19937_64 engine_;
};

// Fixed stream ids, one per component, so adding a consumer never shifts the
// draws of another.
namespace stream {
inline constexpr std::uint64_t kWorkload = 1;
inline constexpr std::uint64_t kFeedback = 2;
inline constexpr std::uint64_t kMiner = 3;
inline constexpr std::uint64_t kEnv = 4;
inline constexpr std::uint64_t kAgentInit = 5;
inline constexpr std::uint64_t kNoise = 6;
inline constexpr std::uint64_t kReplay = 7;
inline constexpr std::uint64_t kEval = 8;
inline constexpr std::uint64_t kScenario = 9;
}  // namespace stream

}  // namespace bcdrl

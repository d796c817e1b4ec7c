#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

#include "qmem/error.hpp"

namespace qmem {

/// Counter-based generator ("SplitMix64 counter mode").
///
/// Output i of the stream keyed by k is mix64(k + i * 0x9e3779b97f4a7c15),
/// where mix64 is the SplitMix64 finalizer. The key of stream j under seed s
/// is mix64(s ^ mix64(j + 0x632be59bd9b4e019)). Only integer arithmetic is
/// involved, so the raw stream is identical on every platform. Normal
/// variates use Box-Muller on top of it and inherit libm's last-ulp
/// behaviour.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix64(seed ^ mix64(stream + kStreamSalt))) {}

  static constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next_u64() { return mix64(key_ + (++counter_) * kGamma); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Unbiased integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    detail::require(n > 0, "Rng::below: empty range");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t r = next_u64();
    while (r >= limit) r = next_u64();
    return r % n;
  }

  bool coin() { return (next_u64() >> 63) != 0; }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  /// Independent child stream; used for per-task seeding.
  Rng split(std::uint64_t index) const { return Rng(key_, index); }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
  static constexpr std::uint64_t kStreamSalt = 0x632be59bd9b4e019ULL;

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Seed of task `index` in a sweep rooted at `seed`.
inline std::uint64_t task_seed(std::uint64_t seed, std::uint64_t index) {
  return Rng(seed, index + 1).next_u64();
}

/// How an expectation over a random function is evaluated.
struct EvalMode {
  bool exact = true;
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  static EvalMode exact_mode() { return {}; }
  static EvalMode monte_carlo(std::size_t samples, std::uint64_t seed) {
    detail::require(samples >= 2, "Monte Carlo needs at least two samples");
    return {false, samples, seed};
  }
};

/// A value that is either exact (std_error == 0) or a sample mean.
struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  bool exact = true;
  std::size_t samples = 0;
};

/// Welford accumulator for sample mean and standard error.
class RunningMean {
 public:
  void add(double x) {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }

  Estimate estimate() const {
    Estimate e;
    e.value = mean_;
    e.exact = false;
    e.samples = count_;
    if (count_ > 1) {
      const double var = m2_ / static_cast<double>(count_ - 1);
      e.std_error = std::sqrt(var / static_cast<double>(count_));
    }
    return e;
  }

 private:
  std::size_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

}  // namespace qmem

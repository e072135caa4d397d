#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "infoq/measure.hpp"

namespace infoq {

/// Real-valued function sampled on a strictly increasing grid over [a, b].
/// Every sample carries the same weight (b - a) / count.
class SampledFunction {
 public:
  SampledFunction(std::vector<double> xs, std::vector<double> ys);
  SampledFunction(std::vector<double> xs, std::vector<double> ys, double a, double b);

  /// count uniform samples x_i = a + i (b - a) / count, i = 0..count-1.
  template <class F>
  static SampledFunction on_grid(double a, double b, std::size_t count, F&& f) {
    std::vector<double> xs(count), ys(count);
    for (std::size_t i = 0; i < count; ++i) {
      xs[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(count);
      ys[i] = f(xs[i]);
    }
    return SampledFunction(std::move(xs), std::move(ys), a, b);
  }

  std::size_t size() const { return xs_.size(); }
  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& ys() const { return ys_; }
  double lower() const { return a_; }
  double upper() const { return b_; }
  double sample_weight() const { return (b_ - a_) / static_cast<double>(xs_.size()); }

  /// Piecewise-linear interpolation between samples, clamped at the ends.
  double interpolate(double x) const;

 private:
  std::vector<double> xs_;
  std::vector<double> ys_;
  double a_ = 0.0;
  double b_ = 0.0;
};

/// Two-column CSV (x, f(x)); a non-numeric first line is treated as a header.
SampledFunction read_sampled_csv(std::istream& in);

/// Dyadic level of the simple-function construction: bins
/// [(k-1)/2^n, k/2^n) for k = 1..2^(2n) tile [0, 2^n), plus one overflow
/// bucket for values >= 2^n.
struct LevelScheme {
  int level = 1;
  double shift = 0.0;  // added to every sample so the minimum is >= 0

  double bin_width() const;
  double cutoff() const;
};

inline constexpr int kMaxQuantizationLevel = 30;
inline const std::string kOverflowLabel = "overflow";

/// Quantized function: each sample mapped to its bin's lower endpoint
/// (labelled "j/2^n", reduced) or to the overflow bucket.
struct Quantized {
  FiniteFunction function;
  LevelScheme scheme;
  std::size_t occupied_bins = 0;  // distinct bins hit, overflow included
  bool overflow_used = false;
};

Quantized quantize(const SampledFunction& f, int level);

struct LevelEntropy {
  int level = 0;
  double entropy = 0.0;
};

struct EntropySequence {
  std::vector<LevelEntropy> levels;
  bool converged = false;
  int converged_at = 0;  // first level n from which every step changes H by < tolerance
  double shift = 0.0;
};

inline constexpr double kConvergenceTolerance = 1e-6;

/// H(f_n) for n = 1..max_level. Throws DomainError when a level's bins
/// spanning the sample range outnumber the samples.
EntropySequence entropy_sequence(const SampledFunction& f, int max_level);

/// Number of level-n bins spanning [min f, max f] after shifting (overflow
/// bucket counted once). This is the resolution measure used by
/// entropy_sequence.
std::size_t spanned_bins(const SampledFunction& f, int level);

}  // namespace infoq

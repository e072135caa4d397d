#include "infoq/simple_approx.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <map>
#include <sstream>

#include "infoq/csv.hpp"
#include "infoq/error.hpp"

namespace infoq {

SampledFunction::SampledFunction(std::vector<double> xs, std::vector<double> ys)
    : SampledFunction(xs, ys, xs.empty() ? 0.0 : xs.front(), xs.empty() ? 0.0 : xs.back()) {}

SampledFunction::SampledFunction(std::vector<double> xs, std::vector<double> ys, double a, double b)
    : xs_(std::move(xs)), ys_(std::move(ys)), a_(a), b_(b) {
  if (xs_.size() != ys_.size()) {
    throw DomainError("sampled function: x and f(x) columns differ in length");
  }
  if (xs_.size() < 2) {
    throw DomainError("sampled function needs at least 2 samples");
  }
  for (std::size_t i = 1; i < xs_.size(); ++i) {
    if (!(xs_[i] > xs_[i - 1])) {
      throw DomainError("sampled function grid points must be strictly increasing");
    }
  }
  if (!(b_ > a_) || xs_.front() < a_ || xs_.back() > b_) {
    throw DomainError("sampled function interval must satisfy a <= x_0 < ... <= b with a < b");
  }
}

double SampledFunction::interpolate(double x) const {
  if (x <= xs_.front()) {
    return ys_.front();
  }
  if (x >= xs_.back()) {
    return ys_.back();
  }
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  const std::size_t hi = static_cast<std::size_t>(it - xs_.begin());
  const std::size_t lo = hi - 1;
  const double t = (x - xs_[lo]) / (xs_[hi] - xs_[lo]);
  return ys_[lo] + t * (ys_[hi] - ys_[lo]);
}

SampledFunction read_sampled_csv(std::istream& in) {
  std::vector<double> xs, ys;
  for (const auto& row : read_numeric_csv(in)) {
    if (row.size() != 2) {
      throw DomainError("sample CSV rows must have exactly two columns (x, f(x))");
    }
    xs.push_back(row[0]);
    ys.push_back(row[1]);
  }
  return SampledFunction(std::move(xs), std::move(ys));
}

double LevelScheme::bin_width() const { return std::ldexp(1.0, -level); }

double LevelScheme::cutoff() const { return std::ldexp(1.0, level); }

namespace {

void check_level(int level) {
  if (level < 1 || level > kMaxQuantizationLevel) {
    throw DomainError("quantization level must be in [1, " + std::to_string(kMaxQuantizationLevel) + "]");
  }
}

double shift_for(const SampledFunction& f) {
  double lo = f.ys().front();
  for (double y : f.ys()) {
    if (!std::isfinite(y)) {
      throw DomainError("sampled function contains a non-finite value");
    }
    lo = std::min(lo, y);
  }
  return lo < 0.0 ? -lo : 0.0;
}

constexpr std::int64_t kOverflowBin = -1;

// Bin index j = floor(v 2^n) of the interval [j/2^n, (j+1)/2^n), or
// kOverflowBin for v >= 2^n.
std::int64_t bin_of(double v, int level) {
  if (v >= std::ldexp(1.0, level)) {
    return kOverflowBin;
  }
  return static_cast<std::int64_t>(std::floor(std::ldexp(v, level)));
}

std::string dyadic_label(std::int64_t j, int level) {
  int e = level;
  while (e > 0 && j % 2 == 0) {
    j /= 2;
    --e;
  }
  if (e == 0 || j == 0) {
    return std::to_string(j);
  }
  return std::to_string(j) + "/" + std::to_string(std::int64_t{1} << e);
}

}  // namespace

Quantized quantize(const SampledFunction& f, int level) {
  check_level(level);
  const double shift = shift_for(f);

  std::vector<std::int64_t> bins(f.size());
  std::map<std::int64_t, std::size_t> index;
  for (std::size_t i = 0; i < f.size(); ++i) {
    bins[i] = bin_of(f.ys()[i] + shift, level);
    index.emplace(bins[i], 0);
  }

  std::vector<Label> labels;
  labels.reserve(index.size());
  // Regular bins in increasing order, overflow bucket last.
  for (auto& [bin, idx] : index) {
    if (bin == kOverflowBin) {
      continue;
    }
    idx = labels.size();
    labels.emplace_back(dyadic_label(bin, level));
  }
  const bool overflow_used = index.contains(kOverflowBin);
  if (overflow_used) {
    index[kOverflowBin] = labels.size();
    labels.emplace_back(kOverflowLabel);
  }

  std::vector<std::size_t> assignment(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    assignment[i] = index.at(bins[i]);
  }
  const std::size_t occupied = labels.size();
  // Samples share one weight, so the counting measure yields the same
  // distribution and keeps it exact.
  return Quantized{FiniteFunction(std::move(labels), std::move(assignment)), LevelScheme{level, shift},
                   occupied, overflow_used};
}

std::size_t spanned_bins(const SampledFunction& f, int level) {
  check_level(level);
  const double shift = shift_for(f);
  const auto [lo_it, hi_it] = std::minmax_element(f.ys().begin(), f.ys().end());
  const std::int64_t lo = bin_of(*lo_it + shift, level);
  const std::int64_t hi = bin_of(*hi_it + shift, level);
  if (lo == kOverflowBin) {
    return 1;
  }
  if (hi == kOverflowBin) {
    const std::int64_t regular = (std::int64_t{1} << (2 * level)) - lo;
    return static_cast<std::size_t>(regular) + 1;
  }
  return static_cast<std::size_t>(hi - lo + 1);
}

EntropySequence entropy_sequence(const SampledFunction& f, int max_level) {
  check_level(max_level);
  EntropySequence seq;
  seq.shift = shift_for(f);
  for (int n = 1; n <= max_level; ++n) {
    const std::size_t spanned = spanned_bins(f, n);
    if (spanned > f.size()) {
      std::ostringstream msg;
      msg << "level " << n << " too fine for grid resolution: " << spanned << " bins span the range but only "
          << f.size() << " samples";
      throw DomainError(msg.str());
    }
    const double h = entropy(distribution_of(quantize(f, n).function)).value();
    seq.levels.push_back({n, h});
  }
  // Converged: the tail of the sequence is flat from converged_at onward.
  for (std::size_t i = seq.levels.size(); i-- > 1;) {
    if (std::fabs(seq.levels[i].entropy - seq.levels[i - 1].entropy) >= kConvergenceTolerance) {
      break;
    }
    seq.converged = true;
    seq.converged_at = seq.levels[i].level;
  }
  return seq;
}

}  // namespace infoq

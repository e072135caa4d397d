#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "infoq/extended_real.hpp"

namespace infoq {

/// Value label of a finite function: an exact integer or an opaque string.
using Label = std::variant<std::int64_t, std::string>;

std::string label_to_string(const Label& label);

inline constexpr double kProbabilityTolerance = 1e-9;

/// Integer numerators over a common denominator. Present on distributions
/// built from counting measures so that callers can recover exact ratios.
struct ExactCounts {
  std::vector<std::uint64_t> numerators;
  std::uint64_t denominator = 0;
};

/// Finite probability vector p_1..p_n. Validated on construction: entries
/// in [0, 1], |sum - 1| <= 1e-9, at least one entry. Never renormalized
/// implicitly; see normalize().
class Distribution {
 public:
  explicit Distribution(std::vector<double> probs, std::vector<Label> labels = {});

  /// p_k = counts[k] / sum(counts), each formed as one exact integer ratio.
  static Distribution from_counts(std::span<const std::uint64_t> counts,
                                  std::vector<Label> labels = {});

  /// Explicit renormalization of nonnegative weights with a positive sum.
  static Distribution normalize(std::span<const double> weights, std::vector<Label> labels = {});

  static Distribution uniform(std::size_t n);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t k) const { return probs_[k]; }
  std::span<const double> probs() const { return probs_; }
  const std::vector<Label>& labels() const { return labels_; }
  const std::optional<ExactCounts>& exact() const { return exact_; }

 private:
  Distribution() = default;

  std::vector<double> probs_;
  std::vector<Label> labels_;
  std::optional<ExactCounts> exact_;
};

/// A finite weighted domain {0..N-1}, a list of distinct value labels and an
/// assignment of every domain point to one value index.
///
/// The measure is the counting measure when no weights are given, integer
/// multiplicities when integer weights are given (both exact), or arbitrary
/// nonnegative reals.
class FiniteFunction {
 public:
  /// Counting measure.
  FiniteFunction(std::vector<Label> values, std::vector<std::size_t> assignment);
  /// Integer weights (exact).
  FiniteFunction(std::vector<Label> values, std::vector<std::size_t> assignment,
                 std::vector<std::uint64_t> weights);
  /// Real weights.
  FiniteFunction(std::vector<Label> values, std::vector<std::size_t> assignment,
                 std::vector<double> weights);

  /// Builds the value list from the distinct labels in order of first
  /// appearance.
  static FiniteFunction from_outputs(std::span<const Label> outputs);
  static FiniteFunction from_outputs(std::span<const std::int64_t> outputs);

  std::size_t domain_size() const { return assignment_.size(); }
  std::size_t value_count() const { return values_.size(); }
  const std::vector<Label>& values() const { return values_; }
  const std::vector<std::size_t>& assignment() const { return assignment_; }

  bool has_exact_measure() const { return !real_weights_.has_value(); }
  const std::optional<std::vector<std::uint64_t>>& integer_weights() const { return int_weights_; }
  const std::optional<std::vector<double>>& real_weights() const { return real_weights_; }

  /// Weight of one domain point under whichever measure is active.
  double weight(std::size_t x) const;

  /// True when both functions live on the same domain with the same measure.
  bool same_domain(const FiniteFunction& other) const;

 private:
  void validate() const;

  std::vector<Label> values_;
  std::vector<std::size_t> assignment_;
  std::optional<std::vector<std::uint64_t>> int_weights_;
  std::optional<std::vector<double>> real_weights_;
};

/// H(d) = -sum p_k log2 p_k with 0 log 0 = 0.
InfoValue entropy(const Distribution& d);

/// I(f = y_k) = -log2 p_k; +infinity when p_k = 0.
InfoValue self_information(const Distribution& d, std::size_t k);

/// I(f) = sum_k I(f = y_k); +infinity if any p_k = 0.
InfoValue total_information(const Distribution& d);

/// p_k = mu(f^-1(y_k)) / mu(X), ordered by f's value list.
Distribution distribution_of(const FiniteFunction& f);

/// h(p) = -p log2 p - (1-p) log2(1-p), p in [0, 1].
double binary_entropy(double p);

}  // namespace infoq

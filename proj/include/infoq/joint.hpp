#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "infoq/measure.hpp"

namespace infoq {

/// Joint law Pr(f = y_k, g = z_i) of two finite functions, stored row-major
/// (rows: f values, columns: g values).
class JointModel {
 public:
  /// Direct entry of a matrix (e.g. a channel with no common domain).
  /// Entries must be >= 0 and sum to 1 within 1e-9.
  JointModel(std::size_t rows, std::size_t cols, std::vector<double> probs, std::vector<Label> row_labels = {},
             std::vector<Label> col_labels = {});

  /// Exact joint from integer cell masses.
  static JointModel from_counts(std::size_t rows, std::size_t cols, std::span<const std::uint64_t> counts,
                                std::vector<Label> row_labels = {}, std::vector<Label> col_labels = {});

  /// Joint from a row marginal and a row-stochastic conditional matrix
  /// Pr(g = z_i | f = y_k).
  static JointModel from_conditional(std::span<const double> row_marginal, std::span<const double> conditional,
                                     std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double at(std::size_t k, std::size_t i) const { return probs_[k * cols_ + i]; }
  std::span<const double> probs() const { return probs_; }
  const std::vector<Label>& row_labels() const { return row_labels_; }
  const std::vector<Label>& col_labels() const { return col_labels_; }
  const std::optional<ExactCounts>& exact() const { return exact_; }

  /// Pr(f = y_k)
  double row_marginal(std::size_t k) const { return row_marginal_[k]; }
  /// Pr(g = z_i)
  double col_marginal(std::size_t i) const { return col_marginal_[i]; }

  Distribution f_distribution() const;
  Distribution g_distribution() const;

  /// Swaps the roles of f and g.
  JointModel transpose() const;

  /// Reorders rows and columns (with their labels): new row r is old row
  /// row_order[r].
  JointModel permuted(std::span<const std::size_t> row_order, std::span<const std::size_t> col_order) const;

 private:
  JointModel() = default;
  void finish();

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> probs_;
  std::vector<double> row_marginal_;
  std::vector<double> col_marginal_;
  std::vector<Label> row_labels_;
  std::vector<Label> col_labels_;
  std::optional<ExactCounts> exact_;
};

/// Entry (k, i) = mu({x : f(x) = y_k and g(x) = z_i}) / mu(X).
JointModel joint_of(const FiniteFunction& f, const FiniteFunction& g);

/// Joint matrix from CSV: one row per f value, one column per g value.
JointModel read_joint_csv(std::istream& in);

/// H(f | g) = -sum Pr(y_k, z_i) log2 Pr(y_k | z_i).
InfoValue conditional_entropy(const JointModel& j);

/// log2[Pr(y_k, z_i) / (Pr(y_k) Pr(z_i))]; -inf when the joint entry is 0.
/// Throws DomainError when either marginal is 0.
ExtendedReal pmi(const JointModel& j, std::size_t k, std::size_t i);

/// Whether Pr(f = y_k | g = z_i) >= Pr(f = y_k), i.e. the pair satisfies
/// the nonnegative-pmi assumption made for reductions.
bool reduction_compatible(const JointModel& j, std::size_t k, std::size_t i);

/// I(f = y_k; g) = sum_i Pr(z_i | y_k) pmi(k, i); zero-probability terms
/// contribute 0. Throws DomainError when Pr(f = y_k) = 0.
InfoValue event_mi(const JointModel& j, std::size_t k);

/// I(f; g) = sum_{k,i} Pr(y_k, z_i) pmi(k, i).
InfoValue mutual_information(const JointModel& j);

/// h = phi o g, given phi as a map from g's value indices to h's.
FiniteFunction compose(const FiniteFunction& g, std::span<const std::size_t> phi, std::vector<Label> h_values);

struct DpiResult {
  double entropy_f = 0.0;
  double mi_fg = 0.0;
  double mi_fh = 0.0;
  bool ordering_holds = false;  // H(f) >= I(f;g) >= I(f;h) within 1e-9
};

/// Data processing check for f, g and a post-processing h of g. Throws
/// DomainError when h(x) is not a function of g(x) alone.
DpiResult dpi_check(const FiniteFunction& f, const FiniteFunction& g, const FiniteFunction& h);

}  // namespace infoq

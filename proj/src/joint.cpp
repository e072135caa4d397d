#include "infoq/joint.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "infoq/csv.hpp"
#include "infoq/error.hpp"

namespace infoq {

namespace {

constexpr double kOrderingTolerance = 1e-9;

void check_label_count(const std::vector<Label>& labels, std::size_t n, const char* what) {
  if (!labels.empty() && labels.size() != n) {
    throw DomainError(std::string(what) + " label count does not match the matrix shape");
  }
}

}  // namespace

JointModel::JointModel(std::size_t rows, std::size_t cols, std::vector<double> probs, std::vector<Label> row_labels,
                       std::vector<Label> col_labels)
    : rows_(rows),
      cols_(cols),
      probs_(std::move(probs)),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)) {
  finish();
}

JointModel JointModel::from_counts(std::size_t rows, std::size_t cols, std::span<const std::uint64_t> counts,
                                   std::vector<Label> row_labels, std::vector<Label> col_labels) {
  if (counts.size() != rows * cols) {
    throw DomainError("joint counts do not match the matrix shape");
  }
  const Distribution flat = Distribution::from_counts(counts);
  JointModel j;
  j.rows_ = rows;
  j.cols_ = cols;
  j.probs_.assign(flat.probs().begin(), flat.probs().end());
  j.row_labels_ = std::move(row_labels);
  j.col_labels_ = std::move(col_labels);
  j.exact_ = flat.exact();
  j.finish();
  return j;
}

JointModel JointModel::from_conditional(std::span<const double> row_marginal, std::span<const double> conditional,
                                        std::size_t cols) {
  const std::size_t rows = row_marginal.size();
  if (cols == 0 || conditional.size() != rows * cols) {
    throw DomainError("conditional matrix does not match the marginal");
  }
  // Validates the marginal as a distribution.
  (void)Distribution(std::vector<double>(row_marginal.begin(), row_marginal.end()));
  std::vector<double> probs(rows * cols);
  for (std::size_t k = 0; k < rows; ++k) {
    double row_sum = 0.0;
    for (std::size_t i = 0; i < cols; ++i) {
      const double c = conditional[k * cols + i];
      if (!(c >= 0.0) || c > 1.0) {
        throw DomainError("conditional probability outside [0, 1]");
      }
      row_sum += c;
      probs[k * cols + i] = row_marginal[k] * c;
    }
    if (std::fabs(row_sum - 1.0) > kProbabilityTolerance) {
      throw DomainError("conditional row " + std::to_string(k) + " does not sum to 1");
    }
  }
  return JointModel(rows, cols, std::move(probs));
}

void JointModel::finish() {
  if (rows_ == 0 || cols_ == 0) {
    throw DomainError("joint model needs at least one row and one column");
  }
  if (probs_.size() != rows_ * cols_) {
    throw DomainError("joint matrix entry count does not match its shape");
  }
  check_label_count(row_labels_, rows_, "row");
  check_label_count(col_labels_, cols_, "column");
  double total = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0) || p > 1.0) {
      throw DomainError("joint entry outside [0, 1]");
    }
    total += p;
  }
  if (std::fabs(total - 1.0) > kProbabilityTolerance) {
    throw DomainError("joint matrix does not sum to 1 (sum = " + std::to_string(total) + ")");
  }
  row_marginal_.assign(rows_, 0.0);
  col_marginal_.assign(cols_, 0.0);
  if (exact_) {
    std::vector<std::uint64_t> rc(rows_, 0), cc(cols_, 0);
    for (std::size_t k = 0; k < rows_; ++k) {
      for (std::size_t i = 0; i < cols_; ++i) {
        rc[k] += exact_->numerators[k * cols_ + i];
        cc[i] += exact_->numerators[k * cols_ + i];
      }
    }
    const auto denom = static_cast<long double>(exact_->denominator);
    for (std::size_t k = 0; k < rows_; ++k) {
      row_marginal_[k] = static_cast<double>(static_cast<long double>(rc[k]) / denom);
    }
    for (std::size_t i = 0; i < cols_; ++i) {
      col_marginal_[i] = static_cast<double>(static_cast<long double>(cc[i]) / denom);
    }
    return;
  }
  for (std::size_t k = 0; k < rows_; ++k) {
    for (std::size_t i = 0; i < cols_; ++i) {
      row_marginal_[k] += at(k, i);
      col_marginal_[i] += at(k, i);
    }
  }
}

Distribution JointModel::f_distribution() const {
  if (exact_) {
    std::vector<std::uint64_t> rc(rows_, 0);
    for (std::size_t k = 0; k < rows_; ++k) {
      for (std::size_t i = 0; i < cols_; ++i) {
        rc[k] += exact_->numerators[k * cols_ + i];
      }
    }
    return Distribution::from_counts(rc, row_labels_);
  }
  return Distribution::normalize(row_marginal_, row_labels_);
}

Distribution JointModel::g_distribution() const { return transpose().f_distribution(); }

JointModel JointModel::transpose() const {
  std::vector<std::size_t> rows(rows_), cols(cols_);
  for (std::size_t k = 0; k < rows_; ++k) {
    rows[k] = k;
  }
  for (std::size_t i = 0; i < cols_; ++i) {
    cols[i] = i;
  }
  JointModel t;
  t.rows_ = cols_;
  t.cols_ = rows_;
  t.probs_.resize(probs_.size());
  for (std::size_t k = 0; k < rows_; ++k) {
    for (std::size_t i = 0; i < cols_; ++i) {
      t.probs_[i * rows_ + k] = at(k, i);
    }
  }
  if (exact_) {
    ExactCounts e{std::vector<std::uint64_t>(probs_.size()), exact_->denominator};
    for (std::size_t k = 0; k < rows_; ++k) {
      for (std::size_t i = 0; i < cols_; ++i) {
        e.numerators[i * rows_ + k] = exact_->numerators[k * cols_ + i];
      }
    }
    t.exact_ = std::move(e);
  }
  t.row_labels_ = col_labels_;
  t.col_labels_ = row_labels_;
  t.finish();
  return t;
}

JointModel JointModel::permuted(std::span<const std::size_t> row_order, std::span<const std::size_t> col_order) const {
  if (row_order.size() != rows_ || col_order.size() != cols_) {
    throw DomainError("permutation size does not match the matrix shape");
  }
  JointModel p;
  p.rows_ = rows_;
  p.cols_ = cols_;
  p.probs_.resize(probs_.size());
  std::optional<ExactCounts> e;
  if (exact_) {
    e = ExactCounts{std::vector<std::uint64_t>(probs_.size()), exact_->denominator};
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const std::size_t src = row_order[r] * cols_ + col_order[c];
      p.probs_[r * cols_ + c] = probs_.at(src);
      if (e) {
        e->numerators[r * cols_ + c] = exact_->numerators[src];
      }
    }
  }
  p.exact_ = std::move(e);
  if (!row_labels_.empty()) {
    for (std::size_t r : row_order) {
      p.row_labels_.push_back(row_labels_.at(r));
    }
  }
  if (!col_labels_.empty()) {
    for (std::size_t c : col_order) {
      p.col_labels_.push_back(col_labels_.at(c));
    }
  }
  p.finish();
  return p;
}

JointModel joint_of(const FiniteFunction& f, const FiniteFunction& g) {
  if (!f.same_domain(g)) {
    throw DomainError("joint_of: functions live on different domains or measures");
  }
  const std::size_t rows = f.value_count();
  const std::size_t cols = g.value_count();
  if (f.has_exact_measure()) {
    std::vector<std::uint64_t> counts(rows * cols, 0);
    const auto& w = f.integer_weights();
    for (std::size_t x = 0; x < f.domain_size(); ++x) {
      counts[f.assignment()[x] * cols + g.assignment()[x]] += w ? (*w)[x] : 1;
    }
    return JointModel::from_counts(rows, cols, counts, f.values(), g.values());
  }
  std::vector<double> mass(rows * cols, 0.0);
  double total = 0.0;
  for (std::size_t x = 0; x < f.domain_size(); ++x) {
    mass[f.assignment()[x] * cols + g.assignment()[x]] += f.weight(x);
    total += f.weight(x);
  }
  for (double& m : mass) {
    m /= total;
  }
  return JointModel(rows, cols, std::move(mass), f.values(), g.values());
}

JointModel read_joint_csv(std::istream& in) {
  const auto rows = read_numeric_csv(in);
  if (rows.empty()) {
    throw DomainError("joint CSV is empty");
  }
  const std::size_t cols = rows.front().size();
  std::vector<double> probs;
  for (const auto& row : rows) {
    if (row.size() != cols) {
      throw DomainError("joint CSV rows have different lengths");
    }
    probs.insert(probs.end(), row.begin(), row.end());
  }
  return JointModel(rows.size(), cols, std::move(probs));
}

InfoValue conditional_entropy(const JointModel& j) {
  double h = 0.0;
  for (std::size_t k = 0; k < j.rows(); ++k) {
    for (std::size_t i = 0; i < j.cols(); ++i) {
      const double p = j.at(k, i);
      if (p > 0.0) {
        h -= p * std::log2(p / j.col_marginal(i));
      }
    }
  }
  return InfoValue::bits(h);
}

ExtendedReal pmi(const JointModel& j, std::size_t k, std::size_t i) {
  if (k >= j.rows() || i >= j.cols()) {
    throw DomainError("pmi index out of range");
  }
  if (j.row_marginal(k) == 0.0 || j.col_marginal(i) == 0.0) {
    throw DomainError("pmi undefined: zero marginal probability");
  }
  const double p = j.at(k, i);
  if (p == 0.0) {
    return ExtendedReal::neg_infinity();
  }
  return ExtendedReal::finite(std::log2(p / (j.row_marginal(k) * j.col_marginal(i))));
}

bool reduction_compatible(const JointModel& j, std::size_t k, std::size_t i) {
  if (j.col_marginal(i) == 0.0) {
    throw DomainError("conditioning on a zero-probability value");
  }
  return j.at(k, i) / j.col_marginal(i) >= j.row_marginal(k);
}

InfoValue event_mi(const JointModel& j, std::size_t k) {
  if (k >= j.rows()) {
    throw DomainError("event index out of range");
  }
  const double pk = j.row_marginal(k);
  if (pk == 0.0) {
    throw DomainError("event_mi undefined for a zero-probability event");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < j.cols(); ++i) {
    const double p = j.at(k, i);
    if (p > 0.0) {
      const double cond = p / pk;
      sum += cond * std::log2(cond / j.col_marginal(i));
    }
  }
  return InfoValue::bits(sum);
}

InfoValue mutual_information(const JointModel& j) {
  double sum = 0.0;
  for (std::size_t k = 0; k < j.rows(); ++k) {
    for (std::size_t i = 0; i < j.cols(); ++i) {
      const double p = j.at(k, i);
      if (p > 0.0) {
        sum += p * std::log2(p / (j.row_marginal(k) * j.col_marginal(i)));
      }
    }
  }
  // Rounding can push the sum just past min(H(f), H(g)); with a constant f
  // it would otherwise come out as a stray 1e-16 instead of 0.
  const double cap = std::min(entropy(j.f_distribution()).value(), entropy(j.g_distribution()).value());
  return InfoValue::bits(std::min(sum, cap));
}

FiniteFunction compose(const FiniteFunction& g, std::span<const std::size_t> phi, std::vector<Label> h_values) {
  if (phi.size() != g.value_count()) {
    throw DomainError("post-processing map must cover every value of g");
  }
  std::vector<std::size_t> assignment(g.domain_size());
  for (std::size_t x = 0; x < g.domain_size(); ++x) {
    assignment[x] = phi[g.assignment()[x]];
  }
  if (g.integer_weights()) {
    return FiniteFunction(std::move(h_values), std::move(assignment), *g.integer_weights());
  }
  if (g.real_weights()) {
    return FiniteFunction(std::move(h_values), std::move(assignment), *g.real_weights());
  }
  return FiniteFunction(std::move(h_values), std::move(assignment));
}

DpiResult dpi_check(const FiniteFunction& f, const FiniteFunction& g, const FiniteFunction& h) {
  if (!f.same_domain(g) || !g.same_domain(h)) {
    throw DomainError("dpi_check: functions must share one domain and measure");
  }
  // h must factor through g: each g value determines a single h value.
  std::map<std::size_t, std::size_t> induced;
  for (std::size_t x = 0; x < g.domain_size(); ++x) {
    const auto [it, inserted] = induced.emplace(g.assignment()[x], h.assignment()[x]);
    if (!inserted && it->second != h.assignment()[x]) {
      throw DomainError("dpi_check: h does not factor through g (the data processing hypothesis fails)");
    }
  }
  DpiResult r;
  r.entropy_f = entropy(distribution_of(f)).value();
  r.mi_fg = mutual_information(joint_of(f, g)).value();
  r.mi_fh = mutual_information(joint_of(f, h)).value();
  r.ordering_holds = r.entropy_f + kOrderingTolerance >= r.mi_fg && r.mi_fg + kOrderingTolerance >= r.mi_fh;
  return r;
}

}  // namespace infoq

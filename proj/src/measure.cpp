#include "infoq/measure.hpp"

#include <cmath>
#include <numeric>
#include <set>

#include "infoq/error.hpp"

namespace infoq {

std::string label_to_string(const Label& label) {
  if (const auto* i = std::get_if<std::int64_t>(&label)) {
    return std::to_string(*i);
  }
  return std::get<std::string>(label);
}

namespace {

void check_labels(std::size_t n, const std::vector<Label>& labels) {
  if (!labels.empty() && labels.size() != n) {
    throw DomainError("label count does not match the number of values");
  }
}

void validate_probs(std::span<const double> probs) {
  if (probs.empty()) {
    throw DomainError("distribution must have at least one value");
  }
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0) || p > 1.0) {
      throw DomainError("distribution entry outside [0, 1]");
    }
    sum += p;
  }
  if (std::fabs(sum - 1.0) > kProbabilityTolerance) {
    throw DomainError("distribution does not sum to 1 (sum = " + std::to_string(sum) + ")");
  }
}

}  // namespace

Distribution::Distribution(std::vector<double> probs, std::vector<Label> labels)
    : probs_(std::move(probs)), labels_(std::move(labels)) {
  validate_probs(probs_);
  check_labels(probs_.size(), labels_);
}

Distribution Distribution::from_counts(std::span<const std::uint64_t> counts,
                                       std::vector<Label> labels) {
  if (counts.empty()) {
    throw DomainError("distribution must have at least one value");
  }
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) {
    if (total > UINT64_MAX - c) {
      throw DomainError("count total overflows 64 bits");
    }
    total += c;
  }
  if (total == 0) {
    throw DomainError("zero total measure");
  }
  Distribution d;
  d.probs_.reserve(counts.size());
  const auto denom = static_cast<long double>(total);
  for (std::uint64_t c : counts) {
    d.probs_.push_back(static_cast<double>(static_cast<long double>(c) / denom));
  }
  d.labels_ = std::move(labels);
  check_labels(d.probs_.size(), d.labels_);
  d.exact_ = ExactCounts{{counts.begin(), counts.end()}, total};
  validate_probs(d.probs_);
  return d;
}

Distribution Distribution::normalize(std::span<const double> weights, std::vector<Label> labels) {
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw DomainError("normalize: weights must be finite and nonnegative");
    }
    sum += w;
  }
  if (!(sum > 0.0)) {
    throw DomainError("normalize: zero total weight");
  }
  std::vector<double> probs;
  probs.reserve(weights.size());
  for (double w : weights) {
    probs.push_back(w / sum);
  }
  return Distribution(std::move(probs), std::move(labels));
}

Distribution Distribution::uniform(std::size_t n) {
  std::vector<std::uint64_t> ones(n, 1);
  return from_counts(ones);
}

FiniteFunction::FiniteFunction(std::vector<Label> values, std::vector<std::size_t> assignment)
    : values_(std::move(values)), assignment_(std::move(assignment)) {
  validate();
}

FiniteFunction::FiniteFunction(std::vector<Label> values, std::vector<std::size_t> assignment,
                               std::vector<std::uint64_t> weights)
    : values_(std::move(values)), assignment_(std::move(assignment)), int_weights_(std::move(weights)) {
  validate();
}

FiniteFunction::FiniteFunction(std::vector<Label> values, std::vector<std::size_t> assignment,
                               std::vector<double> weights)
    : values_(std::move(values)), assignment_(std::move(assignment)), real_weights_(std::move(weights)) {
  validate();
}

FiniteFunction FiniteFunction::from_outputs(std::span<const Label> outputs) {
  std::vector<Label> values;
  std::vector<std::size_t> assignment;
  assignment.reserve(outputs.size());
  // Linear probe is fine for the small value sets this is used with; large
  // enumerations go through Distribution::from_counts directly.
  for (const Label& y : outputs) {
    std::size_t k = 0;
    while (k < values.size() && values[k] != y) {
      ++k;
    }
    if (k == values.size()) {
      values.push_back(y);
    }
    assignment.push_back(k);
  }
  return FiniteFunction(std::move(values), std::move(assignment));
}

FiniteFunction FiniteFunction::from_outputs(std::span<const std::int64_t> outputs) {
  std::vector<Label> labels(outputs.begin(), outputs.end());
  return from_outputs(std::span<const Label>(labels));
}

void FiniteFunction::validate() const {
  if (assignment_.empty()) {
    throw DomainError("finite function needs a nonempty domain");
  }
  if (values_.empty()) {
    throw DomainError("finite function needs at least one value");
  }
  std::set<Label> distinct(values_.begin(), values_.end());
  if (distinct.size() != values_.size()) {
    throw DomainError("value labels must be distinct");
  }
  for (std::size_t k : assignment_) {
    if (k >= values_.size()) {
      throw DomainError("assignment references a value index out of range");
    }
  }
  if (int_weights_) {
    if (int_weights_->size() != assignment_.size()) {
      throw DomainError("weight count does not match domain size");
    }
    std::uint64_t total = 0;
    for (std::uint64_t w : *int_weights_) {
      if (total > UINT64_MAX - w) {
        throw DomainError("weight total overflows 64 bits");
      }
      total += w;
    }
    if (total == 0) {
      throw DomainError("zero total measure");
    }
  }
  if (real_weights_) {
    if (real_weights_->size() != assignment_.size()) {
      throw DomainError("weight count does not match domain size");
    }
    double total = 0.0;
    for (double w : *real_weights_) {
      if (!(w >= 0.0) || !std::isfinite(w)) {
        throw DomainError("weights must be finite and nonnegative");
      }
      total += w;
    }
    if (!(total > 0.0)) {
      throw DomainError("zero total measure");
    }
  }
}

double FiniteFunction::weight(std::size_t x) const {
  if (int_weights_) {
    return static_cast<double>((*int_weights_)[x]);
  }
  if (real_weights_) {
    return (*real_weights_)[x];
  }
  return 1.0;
}

bool FiniteFunction::same_domain(const FiniteFunction& other) const {
  return domain_size() == other.domain_size() && int_weights_ == other.int_weights_ &&
         real_weights_ == other.real_weights_;
}

InfoValue entropy(const Distribution& d) {
  double h = 0.0;
  for (double p : d.probs()) {
    if (p > 0.0) {
      h -= p * std::log2(p);
    }
  }
  return InfoValue::bits(h);
}

InfoValue self_information(const Distribution& d, std::size_t k) {
  if (k >= d.size()) {
    throw DomainError("value index out of range");
  }
  const double p = d[k];
  if (p == 0.0) {
    return InfoValue::infinite();
  }
  return InfoValue::bits(-std::log2(p));
}

InfoValue total_information(const Distribution& d) {
  double sum = 0.0;
  for (std::size_t k = 0; k < d.size(); ++k) {
    const InfoValue i = self_information(d, k);
    if (i.is_infinite()) {
      return InfoValue::infinite();
    }
    sum += i.value();
  }
  return InfoValue::bits(sum);
}

Distribution distribution_of(const FiniteFunction& f) {
  const std::size_t n = f.value_count();
  if (f.has_exact_measure()) {
    std::vector<std::uint64_t> mass(n, 0);
    const auto& w = f.integer_weights();
    for (std::size_t x = 0; x < f.domain_size(); ++x) {
      mass[f.assignment()[x]] += w ? (*w)[x] : 1;
    }
    return Distribution::from_counts(mass, f.values());
  }
  std::vector<double> mass(n, 0.0);
  for (std::size_t x = 0; x < f.domain_size(); ++x) {
    mass[f.assignment()[x]] += f.weight(x);
  }
  return Distribution::normalize(mass, f.values());
}

double binary_entropy(double p) {
  if (!(p >= 0.0) || p > 1.0) {
    throw DomainError("binary_entropy argument outside [0, 1]");
  }
  double h = 0.0;
  if (p > 0.0) {
    h -= p * std::log2(p);
  }
  if (p < 1.0) {
    h -= (1.0 - p) * std::log2(1.0 - p);
  }
  return h;
}

}  // namespace infoq

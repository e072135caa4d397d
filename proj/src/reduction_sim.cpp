#include "infoq/reduction_sim.hpp"

#include "infoq/rng.hpp"

namespace infoq {

std::size_t ceil_log3(std::uint64_t n) {
  std::size_t k = 0;
  std::uint64_t power = 1;
  while (power < n) {
    power *= 3;
    ++k;
  }
  return k;
}

QueryTrace coin_weighing_sim(std::uint64_t num_coins, std::uint64_t light_index) {
  if (num_coins == 0) {
    throw DomainError("need at least one coin");
  }
  if (light_index >= num_coins) {
    throw DomainError("light coin index out of range");
  }
  QueryTrace t;
  t.instance = "coins=" + std::to_string(num_coins) + ",light=" + std::to_string(light_index);
  t.predicted = std::log2(static_cast<double>(num_coins)) / std::log2(3.0);
  std::uint64_t lo = 0;
  std::uint64_t size = num_coins;
  while (size > 1) {
    const std::uint64_t pan = (size + 2) / 3;
    ++t.queries;
    if (light_index < lo + pan) {
      t.outcomes.emplace_back("left");
      size = pan;
    } else if (light_index < lo + 2 * pan) {
      t.outcomes.emplace_back("right");
      lo += pan;
      size = pan;
    } else {
      t.outcomes.emplace_back("equal");
      lo += 2 * pan;
      size -= 2 * pan;
    }
  }
  return t;
}

QueryTrace bisection_sim(const SampledFunction& f, double tol) {
  return bisection_sim([&f](double x) { return f.interpolate(x); }, f.xs().front(), f.xs().back(), tol);
}

JointModel bisection_query_joint(int cells_log2) {
  if (cells_log2 < 1 || cells_log2 > 20) {
    throw DomainError("cells_log2 must be in [1, 20]");
  }
  const std::size_t cells = std::size_t{1} << cells_log2;
  std::vector<std::size_t> half(cells), answer(cells);
  for (std::size_t x = 0; x < cells; ++x) {
    half[x] = x < cells / 2 ? 0 : 1;
    // An increasing function with its root in cell x is negative at the
    // midpoint exactly when the root lies in the right half.
    answer[x] = x < cells / 2 ? 0 : 1;
  }
  const FiniteFunction root_half({std::string("left"), std::string("right")}, half);
  const FiniteFunction sign({std::string("pos"), std::string("neg")}, answer);
  return joint_of(root_half, sign);
}

GeometricResult geometric_search_sim(double p, std::size_t trials, std::uint64_t seed) {
  if (!(p > 0.0) || p > 1.0) {
    throw DomainError("success probability must lie in (0, 1]");
  }
  if (trials == 0) {
    throw DomainError("need at least one trial");
  }
  GeometricResult g;
  g.p = p;
  g.trials = trials;
  g.expected = 1.0 / p;
  g.sigma = std::sqrt(1.0 - p) / p;
  g.tolerance = 4.0 * g.sigma / std::sqrt(static_cast<double>(trials));
  std::uint64_t total = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(seed, t);
    std::uint64_t draws = 1;
    while (!rng.bernoulli(p)) {
      ++draws;
    }
    total += draws;
  }
  g.mean = static_cast<double>(total) / static_cast<double>(trials);
  g.within = std::fabs(g.mean - g.expected) <= g.tolerance;
  return g;
}

double majority_error_exact(double eps, std::size_t repetitions) {
  if (repetitions % 2 == 0) {
    throw DomainError("repetitions must be odd");
  }
  const double q = 0.5 + eps;  // a single use is right
  const auto r = static_cast<double>(repetitions);
  double sum = 0.0;
  for (std::size_t j = 0; j <= repetitions / 2; ++j) {
    const auto jd = static_cast<double>(j);
    const double log_term = std::lgamma(r + 1.0) - std::lgamma(jd + 1.0) - std::lgamma(r - jd + 1.0) +
                            (q > 0.0 ? jd * std::log(q) : (j == 0 ? 0.0 : -INFINITY)) +
                            (q < 1.0 ? (r - jd) * std::log1p(-q) : (j == repetitions ? 0.0 : -INFINITY));
    sum += std::exp(log_term);
  }
  return sum;
}

AmplificationResult amplification_sim(const BinaryChannel& c, std::size_t repetitions, std::size_t trials,
                                      std::uint64_t seed) {
  c.validate();
  if (c.kind != ChannelKind::pp) {
    throw DomainError("amplification needs a pp channel");
  }
  if (!(c.eps > 0.0)) {
    throw DomainError("amplification needs eps > 0");
  }
  if (repetitions % 2 == 0) {
    throw DomainError("repetitions must be odd so the majority is defined");
  }
  if (trials == 0) {
    throw DomainError("need at least one trial");
  }
  AmplificationResult a;
  a.eps = c.eps;
  a.repetitions = repetitions;
  a.trials = trials;
  const double right = 0.5 + c.eps;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(seed, t);
    std::size_t correct = 0;
    for (std::size_t u = 0; u < repetitions; ++u) {
      correct += rng.bernoulli(right) ? 1 : 0;
    }
    if (2 * correct < repetitions) {
      ++a.errors;
    }
  }
  a.error_rate = static_cast<double>(a.errors) / static_cast<double>(trials);
  a.exact_error = majority_error_exact(c.eps, repetitions);
  return a;
}

}  // namespace infoq

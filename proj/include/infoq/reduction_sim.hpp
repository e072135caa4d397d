#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "infoq/channels.hpp"
#include "infoq/error.hpp"
#include "infoq/simple_approx.hpp"

namespace infoq {

/// One run of a query process: how many oracle calls it made, what they
/// answered and the information-theoretic count it is compared against.
struct QueryTrace {
  std::string instance;
  std::size_t queries = 0;
  std::vector<std::string> outcomes;
  double predicted = 0.0;
  // Final search interval (bisection only).
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

/// Finds the light coin among num_coins with a two-pan balance, putting
/// ceil(m / 3) coins on each pan while m candidates remain. Outcomes are
/// "left", "right" (the lighter pan) or "equal".
QueryTrace coin_weighing_sim(std::uint64_t num_coins, std::uint64_t light_index);

/// ceil(log3 n) with integer arithmetic.
std::size_t ceil_log3(std::uint64_t n);

/// Bisection on [a, b] until the bracket is no wider than tol. A query
/// evaluates f at the midpoint; zero counts as the positive side. Throws
/// DomainError without a strict sign change at the endpoints.
template <class F>
QueryTrace bisection_sim(F&& f, double a, double b, double tol) {
  if (!(a < b) || !(tol > 0.0)) {
    throw DomainError("bisection needs a < b and tol > 0");
  }
  const double fa = f(a);
  const double fb = f(b);
  if (!(fa * fb < 0.0)) {
    throw DomainError("no sign change on [a, b]: f(a) = " + std::to_string(fa) + ", f(b) = " + std::to_string(fb));
  }
  QueryTrace t;
  t.instance = "bisection";
  t.predicted = std::max(0.0, std::log2((b - a) / tol));
  const bool lo_positive = fa >= 0.0;
  double lo = a;
  double hi = b;
  while (hi - lo > tol) {
    const double mid = lo + 0.5 * (hi - lo);
    const bool positive = f(mid) >= 0.0;
    ++t.queries;
    t.outcomes.emplace_back(positive ? "pos" : "neg");
    (positive == lo_positive ? lo : hi) = mid;
  }
  t.bracket_lo = lo;
  t.bracket_hi = hi;
  return t;
}

/// Bisection over the sampled function's range, reading values through
/// linear interpolation.
QueryTrace bisection_sim(const SampledFunction& f, double tol);

/// Joint law of (half of the bracket holding the root, sign answer at the
/// midpoint) for a root placed uniformly over 2^cells_log2 cells. Its pmi
/// on the diagonal is the information one bisection query carries.
JointModel bisection_query_joint(int cells_log2 = 6);

struct GeometricResult {
  double p = 0.0;
  std::size_t trials = 0;
  double mean = 0.0;        // draws until the first success
  double expected = 0.0;    // 1 / p
  double sigma = 0.0;       // sqrt(1 - p) / p
  double tolerance = 0.0;   // 4 sigma / sqrt(trials)
  bool within = false;
};

/// Trial t draws from Rng(seed, t).
GeometricResult geometric_search_sim(double p, std::size_t trials, std::uint64_t seed);

struct AmplificationResult {
  double eps = 0.0;
  std::size_t repetitions = 0;
  std::size_t trials = 0;
  std::size_t errors = 0;
  double error_rate = 0.0;
  double exact_error = 0.0;  // binomial tail of the majority vote
};

/// Majority vote over r independent uses of a pp channel (each use right
/// with probability 1/2 + eps). Throws DomainError for even r or eps = 0.
AmplificationResult amplification_sim(const BinaryChannel& c, std::size_t repetitions, std::size_t trials,
                                      std::uint64_t seed);

/// Pr(at most (r - 1) / 2 of r uses are right), r odd.
double majority_error_exact(double eps, std::size_t repetitions);

}  // namespace infoq

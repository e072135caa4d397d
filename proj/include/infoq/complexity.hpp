#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "infoq/joint.hpp"

namespace infoq {

/// Query-count estimates for one event f = y_k against an oracle g.
struct ComplexityReport {
  std::size_t event = 0;
  double event_prob = 0.0;          // Pr(f = y_k)
  InfoValue event_info;             // I(f = y_k)
  InfoValue event_mi;               // I(f = y_k; g)
  InfoValue avg_mi;                 // I(f; g)
  InfoValue entropy_f;              // H(f)
  ExtendedReal least_queries;       // I(f = y_k) / I(f = y_k; g)
  ExtendedReal avg_queries;         // I(f = y_k) / I(f; g)
  ExtendedReal expected_queries;    // H(f) / I(f; g)
  ExtendedReal lower_bound;         // I(f = y_k) / H(f)
  double brute_force_bound = 0.0;   // 1 / Pr(f = y_k)
  bool benchmark_ok = false;        // I(f; g) >= Pr(f = y_k) I(f = y_k)
};

/// Throws DomainError when Pr(f = y_k) = 0.
ComplexityReport report(const JointModel& j, std::size_t k);

/// event_info / pmi_value. Throws DomainError for pmi_value <= 0: a pair
/// with no positive information has no meaningful query count.
ExtendedReal pointwise_time(const InfoValue& event_info, double pmi_value);

struct ReversibleCheck {
  double pmi = 0.0;
  double f_side = 0.0;  // I(f = y_k) / time(f = y_k)
  double g_side = 0.0;  // I(g = z_i) / time(g = z_i)
  bool holds = false;   // both equal pmi within 1e-12
};

/// Throws DomainError when pmi(k, i) <= 0.
ReversibleCheck reversible_identity_check(const JointModel& j, std::size_t k, std::size_t i);

struct IdealEngineCheck {
  bool ideal = false;                      // I(f; g) = H(f) within 1e-9
  double gap = 0.0;                        // H(f) - I(f; g)
  std::vector<ExtendedReal> avg_queries;   // per event k with Pr > 0; undefined otherwise
  bool identity_holds = true;              // avg_queries(k) = I(f = y_k) / H(f) in the ideal case
};

IdealEngineCheck ideal_engine_check(const JointModel& j);

struct MarkovBound {
  double epsilon = 0.0;    // ratio / budget
  double raw_bound = 0.0;  // 1 / epsilon
  double bound = 0.0;      // min(1, raw_bound)
  bool vacuous = false;    // raw_bound >= 1
};

/// Throws DomainError unless both arguments are positive and finite.
MarkovBound markov_bound(double poly_budget, double ratio);

struct SatTrialsBound {
  int variables = 0;
  std::uint64_t satisfying = 0;
  ExtendedReal exact;            // I(BOOL = 1) / H(BOOL), p1 = k / 2^n
  ExtendedReal approx;           // 2^n / k
  ExtendedReal relative_gap;     // |exact - approx| / approx
};

inline constexpr int kMaxSatBoundVariables = 1000;

/// Evaluated in long double. k = 0 gives infinite exact and approximate
/// counts. Throws DomainError when k > 2^n or n is out of [1, 1000].
SatTrialsBound sat_trials_bound(int n, std::uint64_t k);

struct BenchmarkVerdict {
  bool holds = false;              // I(f; g) >= p_k I(f = y_k)
  double brute_force_expectation = 0.0;  // 1 / p_k
  ExtendedReal avg_queries;
  bool brute_force_wins = false;   // avg_queries > 1 / p_k
};

/// Throws DomainError when p_k is not in (0, 1].
BenchmarkVerdict brute_force_benchmark(double p_k, const InfoValue& event_info, const InfoValue& avg_mi);

}  // namespace infoq

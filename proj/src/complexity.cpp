#include "infoq/complexity.hpp"

#include <cmath>

#include "infoq/error.hpp"

namespace infoq {

namespace {

constexpr double kIdealTolerance = 1e-9;
constexpr double kIdentityTolerance = 1e-12;

}  // namespace

ComplexityReport report(const JointModel& j, std::size_t k) {
  if (k >= j.rows()) {
    throw DomainError("event index out of range");
  }
  const double pk = j.row_marginal(k);
  if (pk == 0.0) {
    throw DomainError("zero-probability event f = y_" + std::to_string(k));
  }
  const Distribution fd = j.f_distribution();
  ComplexityReport r;
  r.event = k;
  r.event_prob = pk;
  r.event_info = self_information(fd, k);
  r.event_mi = event_mi(j, k);
  r.avg_mi = mutual_information(j);
  r.entropy_f = entropy(fd);
  r.least_queries = divide(r.event_info, r.event_mi);
  r.avg_queries = divide(r.event_info, r.avg_mi);
  r.expected_queries = divide(r.entropy_f, r.avg_mi);
  r.lower_bound = divide(r.event_info, r.entropy_f);
  r.brute_force_bound = 1.0 / pk;
  r.benchmark_ok = r.avg_mi.value() >= pk * r.event_info.value();
  return r;
}

ExtendedReal pointwise_time(const InfoValue& event_info, double pmi_value) {
  if (!(pmi_value > 0.0) || !std::isfinite(pmi_value)) {
    throw DomainError("pointwise time needs a positive finite pmi (got " + std::to_string(pmi_value) + ")");
  }
  return divide(event_info.as_extended(), ExtendedReal::finite(pmi_value));
}

ReversibleCheck reversible_identity_check(const JointModel& j, std::size_t k, std::size_t i) {
  const ExtendedReal p = pmi(j, k, i);
  if (!p.is_finite() || p.value() <= 0.0) {
    throw DomainError("reversible identity needs a positive pmi (got " + p.to_string() + ")");
  }
  ReversibleCheck c;
  c.pmi = p.value();
  const InfoValue info_f = self_information(j.f_distribution(), k);
  const InfoValue info_g = self_information(j.g_distribution(), i);
  const ExtendedReal time_f = pointwise_time(info_f, c.pmi);
  const ExtendedReal time_g = pointwise_time(info_g, c.pmi);
  if (info_f.value() == 0.0 || info_g.value() == 0.0) {
    // pmi > 0 only through rounding: one of the events is certain.
    throw DomainError("reversible identity needs events of positive self-information");
  }
  c.f_side = divide(info_f.as_extended(), time_f).value();
  c.g_side = divide(info_g.as_extended(), time_g).value();
  c.holds = std::fabs(c.f_side - c.pmi) <= kIdentityTolerance && std::fabs(c.g_side - c.pmi) <= kIdentityTolerance;
  return c;
}

IdealEngineCheck ideal_engine_check(const JointModel& j) {
  const Distribution fd = j.f_distribution();
  const InfoValue h = entropy(fd);
  const InfoValue mi = mutual_information(j);
  IdealEngineCheck c;
  c.gap = h.value() - mi.value();
  c.ideal = std::fabs(c.gap) <= kIdealTolerance;
  for (std::size_t k = 0; k < j.rows(); ++k) {
    if (fd[k] == 0.0) {
      c.avg_queries.push_back(ExtendedReal::undefined());
      continue;
    }
    const InfoValue info = self_information(fd, k);
    const ExtendedReal avg = divide(info, mi);
    c.avg_queries.push_back(avg);
    if (c.ideal) {
      const ExtendedReal expected = divide(info, h);
      if (avg.is_finite() && expected.is_finite()) {
        c.identity_holds = c.identity_holds && std::fabs(avg.value() - expected.value()) <= kIdealTolerance;
      } else {
        c.identity_holds = c.identity_holds && avg == expected;
      }
    }
  }
  return c;
}

MarkovBound markov_bound(double poly_budget, double ratio) {
  if (!(poly_budget > 0.0) || !(ratio > 0.0) || !std::isfinite(poly_budget) || !std::isfinite(ratio)) {
    throw DomainError("markov_bound needs a positive budget and a positive ratio");
  }
  MarkovBound m;
  m.epsilon = ratio / poly_budget;
  m.raw_bound = 1.0 / m.epsilon;
  m.vacuous = m.raw_bound >= 1.0;
  m.bound = m.vacuous ? 1.0 : m.raw_bound;
  return m;
}

SatTrialsBound sat_trials_bound(int n, std::uint64_t k) {
  if (n < 1 || n > kMaxSatBoundVariables) {
    throw DomainError("variable count must be in [1, " + std::to_string(kMaxSatBoundVariables) + "]");
  }
  if (n < 64 && k > (std::uint64_t{1} << n)) {
    throw DomainError("more satisfying assignments than assignments");
  }
  SatTrialsBound b;
  b.variables = n;
  b.satisfying = k;
  if (k == 0) {
    b.exact = ExtendedReal::pos_infinity();
    b.approx = ExtendedReal::pos_infinity();
    b.relative_gap = ExtendedReal::undefined();
    return b;
  }
  const long double p1 = std::ldexp(static_cast<long double>(k), -n);
  const long double info = -std::log2(p1);
  // (1 - p1) log2(1 - p1) through log1p keeps tiny p1 accurate.
  const long double h = -p1 * std::log2(p1) - (1.0L - p1) * std::log1p(-p1) / std::log(2.0L);
  const long double approx = std::ldexp(1.0L, n) / static_cast<long double>(k);
  b.approx = std::isfinite(static_cast<double>(approx)) ? ExtendedReal::finite(static_cast<double>(approx))
                                                         : ExtendedReal::pos_infinity();
  if (p1 == 1.0L) {
    b.exact = ExtendedReal::undefined();
    b.relative_gap = ExtendedReal::undefined();
    return b;
  }
  const long double exact = info / h;
  b.exact = ExtendedReal::finite(static_cast<double>(exact));
  b.relative_gap = b.approx.is_finite() ? ExtendedReal::finite(static_cast<double>(std::fabs(exact - approx) / approx))
                                        : ExtendedReal::finite(1.0);
  return b;
}

BenchmarkVerdict brute_force_benchmark(double p_k, const InfoValue& event_info, const InfoValue& avg_mi) {
  if (!(p_k > 0.0) || p_k > 1.0) {
    throw DomainError("brute-force benchmark needs p_k in (0, 1]");
  }
  BenchmarkVerdict v;
  v.brute_force_expectation = 1.0 / p_k;
  v.avg_queries = divide(event_info, avg_mi);
  if (event_info.is_infinite()) {
    v.holds = avg_mi.is_infinite();
  } else {
    v.holds = avg_mi.is_infinite() || avg_mi.value() >= p_k * event_info.value();
  }
  const double avg = v.avg_queries.to_double();
  v.brute_force_wins = !std::isnan(avg) && avg > v.brute_force_expectation;
  return v;
}

}  // namespace infoq

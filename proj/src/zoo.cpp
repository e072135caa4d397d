#include "infoq/zoo.hpp"

#include <cmath>
#include <numeric>

#include "infoq/error.hpp"
#include "infoq/number_theory.hpp"
#include "infoq/rng.hpp"

namespace infoq {

namespace {

// Values with nonzero count, ascending, as a labelled distribution.
Distribution compress_counts(const std::vector<std::uint64_t>& by_value) {
  std::vector<std::uint64_t> counts;
  std::vector<Label> labels;
  for (std::size_t v = 0; v < by_value.size(); ++v) {
    if (by_value[v] != 0) {
      counts.push_back(by_value[v]);
      labels.emplace_back(static_cast<std::int64_t>(v));
    }
  }
  return Distribution::from_counts(counts, std::move(labels));
}

void require_semiprime_factors(std::uint64_t q1, std::uint64_t q2) {
  if (q1 == q2 || q1 % 2 == 0 || q2 % 2 == 0 || !is_prime(q1) || !is_prime(q2)) {
    throw DomainError("need two distinct odd primes (got " + std::to_string(q1) + ", " + std::to_string(q2) + ")");
  }
  if (q1 > kRabinModulusLimit / q2) {
    throw DomainError("modulus q1 q2 exceeds the enumeration limit " + std::to_string(kRabinModulusLimit));
  }
}

}  // namespace

InfoValue dirichlet_entropy(bool complement) {
  // Lebesgue measure of the rationals in [0, 1] is 0, of the irrationals 1.
  const double rational_measure = 0.0;
  const double irrational_measure = 1.0;
  std::vector<double> probs = {irrational_measure, rational_measure};
  std::vector<Label> labels = {std::int64_t{0}, std::int64_t{1}};
  if (complement) {
    std::swap(labels[0], labels[1]);
  }
  return entropy(Distribution(std::move(probs), std::move(labels)));
}

ModProfile mod_profile(std::uint64_t n, std::uint64_t domain_size) {
  if (n == 0) {
    throw DomainError("modulus must be at least 1");
  }
  if (domain_size == 0 || domain_size % n != 0) {
    throw DomainError("domain size " + std::to_string(domain_size) + " is not a positive multiple of " +
                      std::to_string(n));
  }
  std::vector<std::uint64_t> counts(n, 0);
  for (std::uint64_t x = 0; x < domain_size; ++x) {
    ++counts[x % n];
  }
  ModProfile m;
  m.modulus = n;
  m.domain_size = domain_size;
  m.distribution = compress_counts(counts);
  m.entropy = entropy(m.distribution);
  m.closed_form = std::log2(static_cast<double>(n));
  return m;
}

BoolProfile bool_profile(const SatInstance& s) {
  BoolProfile b;
  b.variables = s.variables;
  b.sat_count = count_satisfying(s);
  const std::uint64_t total = std::uint64_t{1} << s.variables;
  const std::vector<std::uint64_t> counts = {total - b.sat_count, b.sat_count};
  const Distribution d = Distribution::from_counts(counts, {std::int64_t{0}, std::int64_t{1}});
  b.p1 = d[1];
  b.entropy = entropy(d);
  b.info_true = self_information(d, 1);
  return b;
}

TotientProfile totient_profile(std::uint64_t n) {
  if (n < 1 || n > kTotientLimit) {
    throw DomainError("totient bound must be in [1, " + std::to_string(kTotientLimit) + "]");
  }
  // Any x with phi(x) <= n satisfies x <= n * max_{y <= x} y / phi(y);
  // grow the bound until it covers itself.
  std::uint64_t bound = n;
  while (true) {
    const auto next = static_cast<std::uint64_t>(std::ceil(static_cast<double>(n) * max_totient_ratio(bound)));
    if (next <= bound) {
      break;
    }
    bound = next;
  }
  const std::vector<std::uint32_t> phi = totient_table(bound);
  std::vector<std::uint64_t> truncated(n + 1, 0);
  std::vector<std::uint64_t> full(n + 1, 0);
  for (std::uint64_t x = 1; x <= bound; ++x) {
    if (phi[x] <= n) {
      ++full[phi[x]];
      if (x <= n) {
        ++truncated[phi[x]];
      }
    }
  }
  TotientProfile t;
  t.bound = n;
  t.preimage_bound = bound;
  t.distribution = compress_counts(truncated);
  t.entropy = entropy(t.distribution);
  t.carmichael_ok = true;
  for (std::uint64_t v = 1; v <= n; ++v) {
    if (truncated[v] != 0 && full[v] < 2) {
      t.carmichael_ok = false;
      t.singleton_value = v;
      break;
    }
  }
  return t;
}

DiscreteLogProfile discrete_log_profile(std::uint64_t p, std::uint64_t b) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw DomainError("modulus " + std::to_string(p) + " is not an odd prime");
  }
  if (p > kTotientLimit) {
    throw DomainError("modulus exceeds the enumeration limit " + std::to_string(kTotientLimit));
  }
  if (b % p == 0) {
    throw DomainError("base is divisible by the modulus");
  }
  const std::uint64_t order = multiplicative_order(b, p);
  if (order != p - 1) {
    throw DomainError("base " + std::to_string(b) + " has order " + std::to_string(order) + " mod " +
                      std::to_string(p) + ", not a primitive root");
  }
  std::vector<std::uint64_t> counts(p, 0);
  std::uint64_t y = 1;
  for (std::uint64_t x = 1; x < p; ++x) {
    y = y * (b % p) % p;
    ++counts[y];
  }
  DiscreteLogProfile d;
  d.prime = p;
  d.base = b;
  d.distribution = compress_counts(counts);
  d.entropy = entropy(d.distribution);
  d.closed_form = std::log2(static_cast<double>(p - 1));
  d.equiprobable_info = true;
  for (std::size_t k = 0; k < d.distribution.size(); ++k) {
    if (std::fabs(self_information(d.distribution, k).value() - d.entropy.value()) > 1e-9) {
      d.equiprobable_info = false;
    }
  }
  return d;
}

RabinProfile rabin_profile(std::uint64_t q1, std::uint64_t q2) {
  require_semiprime_factors(q1, q2);
  const std::uint64_t n = q1 * q2;
  std::vector<std::uint64_t> counts(n, 0);
  for (std::uint64_t x = 1; x < n; ++x) {
    if (std::gcd(x, n) == 1) {
      ++counts[x * x % n];
    }
  }
  RabinProfile r;
  r.q1 = q1;
  r.q2 = q2;
  r.modulus = n;
  r.phi = (q1 - 1) * (q2 - 1);
  for (std::uint64_t c : counts) {
    if (c != 0) {
      ++r.preimage_histogram[c];
    }
  }
  r.four_to_one = r.preimage_histogram.size() == 1 && r.preimage_histogram.begin()->first == 4;
  r.distribution = compress_counts(counts);
  r.entropy = entropy(r.distribution);
  r.closed_form = std::log2(static_cast<double>(r.phi) / 4.0);
  return r;
}

RsaProfile rsa_profile(std::uint64_t q1, std::uint64_t q2, std::uint64_t e) {
  require_semiprime_factors(q1, q2);
  const std::uint64_t n = q1 * q2;
  const std::uint64_t phi = (q1 - 1) * (q2 - 1);
  if (e < 3 || std::gcd(e, phi) != 1) {
    throw DomainError("exponent " + std::to_string(e) + " needs e >= 3 and gcd(e, " + std::to_string(phi) + ") = 1");
  }
  RsaProfile r;
  r.q1 = q1;
  r.q2 = q2;
  r.exponent = e;
  r.modulus = n;
  r.phi = phi;
  r.trapdoor = inverse_mod(e, phi);
  std::vector<std::uint64_t> counts(n, 0);
  r.trapdoor_ok = true;
  for (std::uint64_t x = 1; x < n; ++x) {
    if (std::gcd(x, n) != 1) {
      continue;
    }
    const std::uint64_t y = pow_mod(x, e, n);
    ++counts[y];
    if (pow_mod(y, r.trapdoor, n) != x) {
      r.trapdoor_ok = false;
    }
  }
  r.bijection_ok = true;
  for (std::uint64_t y = 0; y < n; ++y) {
    const bool unit = std::gcd(y, n) == 1;
    if (counts[y] != (unit ? 1U : 0U)) {
      r.bijection_ok = false;
    }
  }
  r.entropy = entropy(compress_counts(counts));
  r.closed_form = std::log2(static_cast<double>(phi));
  return r;
}

MultiplicationProfile multiplication_profile(std::uint64_t n) {
  if (n < 1 || n > kDivisorLimit) {
    throw DomainError("bound must be in [1, " + std::to_string(kDivisorLimit) + "]");
  }
  const std::vector<std::uint32_t> d = divisor_count_table(n);
  MultiplicationProfile m;
  m.n = n;
  m.divisors = d[n];
  for (std::uint64_t k = 1; k <= n; ++k) {
    m.summatory += d[k];
  }
  m.summatory_hyperbola = divisor_summatory_hyperbola(n);
  m.probability = static_cast<double>(static_cast<long double>(m.divisors) / static_cast<long double>(m.summatory));
  m.info = InfoValue::bits(std::log2(static_cast<double>(m.summatory) / static_cast<double>(m.divisors)));
  const auto nd = static_cast<double>(n);
  m.asymptotic = nd * std::log(nd) + (2.0 * kEulerGamma - 1.0) * nd;
  m.dirichlet_gap = std::fabs(static_cast<double>(m.summatory) - m.asymptotic);
  m.envelope = 10.0 * std::sqrt(nd);
  m.within_envelope = m.dirichlet_gap <= m.envelope;
  return m;
}

InfoValue histogram_entropy(const SumHistogram& h) {
  const auto total = static_cast<long double>(h.total());
  long double acc = 0.0L;
  for (std::uint64_t c : h.counts) {
    const auto lc = static_cast<long double>(c);
    acc += lc * std::log2(lc);
  }
  return InfoValue::bits(static_cast<double>(std::log2(total) - acc / total));
}

SubsetSumProfile subset_sum_profile(const SubsetSumInstance& s, bool meet_in_middle) {
  SubsetSumProfile p;
  p.weights = s.weights.size();
  p.meet_in_middle = meet_in_middle;
  p.histogram = meet_in_middle ? meet_in_middle_histogram(s) : exhaustive_histogram(s);
  p.total = p.histogram.total();
  p.entropy = histogram_entropy(p.histogram);
  const std::uint64_t zeros = p.histogram.count_of(0);
  p.zero_info = zeros == 0 ? InfoValue::infinite()
                           : InfoValue::bits(static_cast<double>(std::log2(static_cast<long double>(p.total)) -
                                                                 std::log2(static_cast<long double>(zeros))));
  p.ratio = divide(p.zero_info, p.entropy);
  p.nonzero_zero_prob = static_cast<double>(static_cast<long double>(zeros - 1) / static_cast<long double>(p.total));
  return p;
}

SatInstance random_ksat(int n, int k, std::size_t clauses, std::uint64_t seed, std::uint64_t stream,
                        std::uint64_t substream) {
  if (n < 1 || k < 1 || k > n) {
    throw DomainError("random clauses need 1 <= K <= n distinct variables");
  }
  Rng rng(seed, stream, substream);
  SatInstance s;
  s.variables = n;
  s.clauses.reserve(clauses);
  for (std::size_t c = 0; c < clauses; ++c) {
    std::vector<int> clause;
    while (clause.size() < static_cast<std::size_t>(k)) {
      const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
      bool fresh = true;
      for (int lit : clause) {
        fresh = fresh && std::abs(lit) != v;
      }
      if (fresh) {
        clause.push_back(v);
      }
    }
    for (int& lit : clause) {
      if (rng.next() & 1U) {
        lit = -lit;
      }
    }
    s.clauses.push_back(std::move(clause));
  }
  return s;
}

std::vector<KsatPoint> ksat_experiment(int n, int k, const std::vector<double>& densities, std::size_t instances,
                                       std::uint64_t seed) {
  if (n < 1 || n > kKsatMaxVariables) {
    throw DomainError("variable count must be in [1, " + std::to_string(kKsatMaxVariables) + "]");
  }
  if (k < 2 || k > 4 || k > n) {
    throw DomainError("clause width K must be 2, 3 or 4 and at most n");
  }
  if (instances == 0) {
    throw DomainError("need at least one instance per density");
  }
  if (densities.empty()) {
    throw DomainError("density grid is empty");
  }
  for (double d : densities) {
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw DomainError("densities must be positive and finite");
    }
  }
  std::vector<KsatPoint> out;
  for (std::size_t i = 0; i < densities.size(); ++i) {
    KsatPoint pt;
    pt.density = densities[i];
    pt.clauses = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(densities[i] * n)));
    pt.instances = instances;
    double entropy_sum = 0.0;
    double bound_sum = 0.0;
    std::size_t bound_terms = 0;
    for (std::size_t j = 0; j < instances; ++j) {
      const SatInstance s = random_ksat(n, k, pt.clauses, seed, i, j);
      const BoolProfile b = bool_profile(s);
      entropy_sum += b.entropy.value();
      if (b.sat_count > 0) {
        ++pt.satisfiable;
        const SatTrialsBound t = sat_trials_bound(n, b.sat_count);
        if (t.exact.is_finite()) {
          bound_sum += t.exact.value();
          ++bound_terms;
        }
      }
    }
    const auto count = static_cast<double>(instances);
    pt.fraction_sat = static_cast<double>(pt.satisfiable) / count;
    pt.std_error = std::sqrt(pt.fraction_sat * (1.0 - pt.fraction_sat) / count);
    pt.mean_entropy = entropy_sum / count;
    pt.mean_bound = bound_terms == 0 ? ExtendedReal::pos_infinity()
                                     : ExtendedReal::finite(bound_sum / static_cast<double>(bound_terms));
    out.push_back(pt);
  }
  return out;
}

}  // namespace infoq

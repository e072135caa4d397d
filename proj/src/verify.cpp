#include "infoq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "infoq/channels.hpp"
#include "infoq/complexity.hpp"
#include "infoq/csv.hpp"
#include "infoq/error.hpp"
#include "infoq/joint.hpp"
#include "infoq/number_theory.hpp"
#include "infoq/reduction_sim.hpp"
#include "infoq/rng.hpp"
#include "infoq/zoo.hpp"

namespace infoq {

namespace {

constexpr double kGoldenTolerance = 1e-9;
constexpr double kAlgebraTolerance = 1e-12;
constexpr double kIdentityTolerance = 1e-9;
constexpr std::uint64_t kSeed = 0;
constexpr std::size_t kRandomJoints = 1000;

class Checker {
 public:
  explicit Checker(std::string fault) : fault_(std::move(fault)) {}

  void value(const std::string& id, const std::string& desc, double computed, double expected, double tol) {
    if (faulty(id)) {
      expected += std::max(1.0, std::fabs(expected));
    }
    add(id, desc, format_number(computed), format_number(expected) + " +/- " + format_number(tol),
        std::fabs(computed - expected) <= tol);
  }

  void at_most(const std::string& id, const std::string& desc, double computed, double limit) {
    if (faulty(id)) {
      limit = -1.0;
    }
    add(id, desc, format_number(computed), "<= " + format_number(limit), computed <= limit);
  }

  void exact(const std::string& id, const std::string& desc, std::uint64_t computed, std::uint64_t expected) {
    if (faulty(id)) {
      ++expected;
    }
    add(id, desc, std::to_string(computed), std::to_string(expected), computed == expected);
  }

  void flag(const std::string& id, const std::string& desc, bool computed) {
    const bool expected = !faulty(id);
    add(id, desc, computed ? "true" : "false", expected ? "true" : "false", computed == expected);
  }

  std::vector<VerifyCheck> take() {
    if (!fault_.empty() && !matched_) {
      throw DomainError("no check matches the injected fault id '" + fault_ + "'");
    }
    return std::move(checks_);
  }

 private:
  bool faulty(const std::string& id) {
    const bool hit = !fault_.empty() && (id == fault_ || id.rfind(fault_ + "/", 0) == 0);
    matched_ = matched_ || hit;
    return hit;
  }

  void add(const std::string& id, const std::string& desc, std::string computed, std::string expected, bool pass) {
    checks_.push_back({id, desc, std::move(computed), std::move(expected), pass});
  }

  std::string fault_;
  bool matched_ = false;
  std::vector<VerifyCheck> checks_;
};

double h2(double p) { return neg_xlog2x(p) + neg_xlog2x(1.0 - p); }

JointModel random_joint(std::uint64_t index) {
  Rng rng(kSeed, 1, index);
  const std::size_t rows = 1 + rng.below(16);
  const std::size_t cols = 1 + rng.below(16);
  std::vector<double> w(rows * cols);
  for (double& x : w) {
    x = rng.bernoulli(0.2) ? 0.0 : rng.uniform();
  }
  w[rng.below(w.size())] += 1.0;  // never all zero
  const Distribution d = Distribution::normalize(w);
  return JointModel(rows, cols, std::vector<double>(d.probs().begin(), d.probs().end()));
}

FiniteFunction random_function(Rng& rng, std::size_t domain, std::size_t max_values) {
  const std::size_t values = 1 + rng.below(max_values);
  std::vector<std::int64_t> outputs(domain);
  for (auto& o : outputs) {
    o = static_cast<std::int64_t>(rng.below(values));
  }
  return FiniteFunction::from_outputs(std::span<const std::int64_t>(outputs));
}

bool close(double a, double b) {
  return std::fabs(a - b) <= kIdentityTolerance * std::max({1.0, std::fabs(a), std::fabs(b)});
}

void golden_entropies(Checker& ch) {
  ch.value("dirichlet-entropy", "indicator of the rationals on [0, 1]", dirichlet_entropy().value(), 0.0,
           kGoldenTolerance);
  ch.value("dirichlet-entropy/complement", "indicator of the irrationals", dirichlet_entropy(true).value(), 0.0,
           kGoldenTolerance);
  for (std::uint64_t n : {2, 3, 27, 100}) {
    ch.value("mod-entropy/" + std::to_string(n), "x mod n over three residue systems",
             mod_profile(n, 3 * n).entropy.value(), std::log2(static_cast<double>(n)), kGoldenTolerance);
  }
  for (auto [p, b] : {std::pair<std::uint64_t, std::uint64_t>{7, 3}, {11, 2}, {13, 2}}) {
    ch.value("discrete-log-entropy/" + std::to_string(p) + "-" + std::to_string(b), "b^x mod p, x = 1..p-1",
             discrete_log_profile(p, b).entropy.value(), std::log2(static_cast<double>(p - 1)), kGoldenTolerance);
  }
  for (auto [q1, q2] : {std::pair<std::uint64_t, std::uint64_t>{3, 5}, {3, 7}, {5, 7}, {7, 11}}) {
    const double phi = static_cast<double>((q1 - 1) * (q2 - 1));
    ch.value("rabin-entropy/" + std::to_string(q1 * q2), "x^2 mod q1 q2 on the units",
             rabin_profile(q1, q2).entropy.value(), std::log2(phi / 4.0), kGoldenTolerance);
  }
  struct RsaCase {
    std::uint64_t q1, q2, e;
  };
  for (const RsaCase c : {RsaCase{3, 5, 3}, RsaCase{5, 11, 3}, RsaCase{7, 11, 7}}) {
    const std::string tag = std::to_string(c.q1) + "-" + std::to_string(c.q2) + "-" + std::to_string(c.e);
    const RsaProfile r = rsa_profile(c.q1, c.q2, c.e);
    ch.value("rsa-entropy/" + tag, "x^e mod q1 q2 on the units", r.entropy.value(),
             std::log2(static_cast<double>((c.q1 - 1) * (c.q2 - 1))), kGoldenTolerance);
    ch.flag("rsa-bijection/" + tag, "x^e permutes the units and the trapdoor inverts it",
            r.bijection_ok && r.trapdoor_ok);
  }
  ch.exact("rsa-trapdoor/3-5-3", "inverse of 3 modulo 8", rsa_profile(3, 5, 3).trapdoor, 3);
}

void rabin_preimages(Checker& ch) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 3; p <= 10000 / 3; p += 2) {
    if (is_prime(p)) {
      primes.push_back(p);
    }
  }
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  for (std::size_t a = 0; a < primes.size(); ++a) {
    for (std::size_t b = a + 1; b < primes.size() && primes[a] * primes[b] <= 10000; ++b) {
      ++checked;
      if (!rabin_profile(primes[a], primes[b]).four_to_one) {
        ++failures;
      }
    }
  }
  ch.exact("rabin-preimages", "semiprimes <= 10^4 (" + std::to_string(checked) + " moduli) with an image lacking exactly 4 preimages",
           failures, 0);
}

void small_channel_checks(Checker& ch) {
  double worst = 0.0;
  for (double p1 : {0.1, 0.5, 0.9}) {
    const std::array<double, 2> marginal = {1.0 - p1, p1};
    const std::array<double, 4> identity = {1.0, 0.0, 0.0, 1.0};
    const JointModel j = JointModel::from_conditional(marginal, identity, 2);
    worst = std::max(worst, conditional_entropy(j.transpose()).value());
  }
  ch.value("many-one-conditional-entropy", "noiseless reduction channel leaves no uncertainty", worst, 0.0,
           kAlgebraTolerance);

  const BinaryChannel rp = make_channel(ChannelKind::rp, 0.5, 0.25);
  const double rp_oracle = 0.5 * (0.25 * 2.0 + 0.75 * std::log2(4.0 / 3.0));
  ch.value("rp-conditional-entropy", "one-sided channel p1 = 1/2, eps = 1/4", rp_conditional_entropy(rp).value(),
           rp_oracle, kAlgebraTolerance);
  ch.value("rp-conditional-entropy/matrix", "closed form against the joint matrix",
           rp_conditional_entropy(rp).value(), conditional_entropy(channel_joint(rp).transpose()).value(),
           kAlgebraTolerance);
  ch.value("rp-conditional-entropy/full", "p1 = 1, eps = 1/2",
           rp_conditional_entropy(make_channel(ChannelKind::rp, 1.0, 0.5)).value(), 1.0, kAlgebraTolerance);

  const JointModel bis = bisection_query_joint();
  ch.value("bisection-query-information", "pmi of the midpoint sign answer", pmi(bis, 0, 0).value(), 1.0,
           kAlgebraTolerance);
  ch.value("bisection-query-information/average", "mutual information of the sign answer",
           mutual_information(bis).value(), 1.0, kAlgebraTolerance);

  std::vector<std::int64_t> coin(27), third(27);
  for (std::int64_t x = 0; x < 27; ++x) {
    coin[x] = x;
    third[x] = x / 9;
  }
  const JointModel weigh = joint_of(FiniteFunction::from_outputs(std::span<const std::int64_t>(coin)),
                                    FiniteFunction::from_outputs(std::span<const std::int64_t>(third)));
  const ComplexityReport r = report(weigh, 0);
  ch.value("deterministic-query-count", "27 coins against one ternary weighing", r.least_queries.value(), 3.0,
           kAlgebraTolerance);
  ch.value("deterministic-query-count/ratio", "I(f = y) / I(g = z) for a deterministic answer",
           divide(self_information(weigh.f_distribution(), 0), self_information(weigh.g_distribution(), 0)).value(),
           3.0, kAlgebraTolerance);

  double cond_worst = 0.0;
  for (int i = 0; i <= 18; ++i) {
    const double p1 = 0.05 + 0.05 * i;
    const BinaryChannel c = make_channel(ChannelKind::bpp, p1, 0.1);
    cond_worst = std::max(cond_worst, std::fabs(conditional_entropy(channel_joint(c).transpose()).value() - h2(0.1)));
  }
  ch.value("bpp-conditional-entropy", "H(answer | membership) - h(eps) over p1 in [0.05, 0.95]", cond_worst, 0.0,
           kAlgebraTolerance);
  const BinaryChannel bpp = make_channel(ChannelKind::bpp, 0.5, 0.25);
  ch.value("bpp-mutual-information", "p1 = 1/2, eps = 1/4 against 1 - h(1/4)", bpp_analysis(bpp).mutual_information,
           1.0 - h2(0.25), kAlgebraTolerance);
  ch.value("bpp-mutual-information/matrix", "closed form against the joint matrix",
           bpp_analysis(bpp).mutual_information, mutual_information(channel_joint(bpp)).value(), kAlgebraTolerance);

  const PpAnalysis pp = pp_analysis(make_channel(ChannelKind::pp, 0.5, 0.01));
  ch.at_most("pp-approximation", "relative error of 16 eps^2 p0 p1 at p1 = 1/2, eps = 0.01",
             pp.approx_rel_error.value(), 0.05);
  ch.flag("pp-approximation/forms", "16 eps^2 p0 p1 equals 4 eps^2 [1 - (p0 - p1)^2]", pp.approx_forms_agree);

  const ErrorThreshold t = pp_error_threshold(0.5);
  ch.value("pp-error-threshold/approx", "first-order error threshold at p1 = 1/2", t.eps_approx, 0.25, 0.0);
  ch.value("pp-error-threshold/cross-check", "bisection threshold against the grid scan", t.eps_exact, t.eps_grid,
           1e-8);
}

void channel_algebra(Checker& ch) {
  for (ChannelKind kind : {ChannelKind::rp, ChannelKind::bpp, ChannelKind::pp}) {
    double worst = 0.0;
    for (int a = 0; a <= 20; ++a) {
      for (int b = 0; b <= 20; ++b) {
        const BinaryChannel c = make_channel(kind, 0.05 + 0.045 * a, 0.01 + 0.024 * b);
        const JointModel j = channel_joint(c);
        const double out = output_entropy_closed_form(c);
        const double cond = conditional_entropy_closed_form(c);
        worst = std::max(worst, std::fabs(out - entropy(j.g_distribution()).value()));
        worst = std::max(worst, std::fabs(cond - conditional_entropy(j.transpose()).value()));
        worst = std::max(worst, std::fabs((out - cond) - mutual_information(j).value()));
      }
    }
    ch.value("channel-algebra/" + to_string(kind), "closed forms vs joint matrix, 21 x 21 (p1, eps) grid", worst,
             0.0, kAlgebraTolerance);
  }
}

void pp_approximation_grid(Checker& ch) {
  double worst = 0.0;
  for (int a = 0; a <= 12; ++a) {
    for (int b = 1; b <= 10; ++b) {
      const PpAnalysis pp = pp_analysis(make_channel(ChannelKind::pp, 0.2 + 0.05 * a, 0.005 * b));
      worst = std::max(worst, pp.approx_rel_error.value());
    }
  }
  ch.at_most("pp-approximation/grid", "worst relative error, eps <= 0.05, p1 in [0.2, 0.8]", worst, 0.05);
}

void information_identities(Checker& ch, const std::vector<JointModel>& joints) {
  std::uint64_t chain = 0, bounds = 0, average = 0, negative = 0;
  for (const JointModel& j : joints) {
    const double hf = entropy(j.f_distribution()).value();
    const double hg = entropy(j.g_distribution()).value();
    const double mi = mutual_information(j).value();
    const double hfg = conditional_entropy(j).value();
    const double hgf = conditional_entropy(j.transpose()).value();
    if (std::fabs(mi - (hf - hfg)) > kIdentityTolerance || std::fabs(mi - (hg - hgf)) > kIdentityTolerance) {
      ++chain;
    }
    if (mi < 0.0 || mi > std::min(hf, hg) + kIdentityTolerance) {
      ++bounds;
    }
    double avg = 0.0;
    for (std::size_t k = 0; k < j.rows(); ++k) {
      if (j.row_marginal(k) == 0.0) {
        continue;
      }
      try {
        avg += j.row_marginal(k) * event_mi(j, k).value();
      } catch (const DomainError&) {
        ++negative;
      }
    }
    if (std::fabs(mi - avg) > kIdentityTolerance) {
      ++average;
    }
  }
  const std::string n = std::to_string(joints.size());
  ch.exact("information-identities/chain-rule", "I = H(f) - H(f|g) = H(g) - H(g|f) failures over " + n + " joints",
           chain, 0);
  ch.exact("information-identities/bounds", "0 <= I <= min(H(f), H(g)) failures", bounds, 0);
  ch.exact("information-identities/event-average", "I = sum p_k I(f = y_k; g) failures", average, 0);
  ch.exact("information-identities/event-nonnegative", "negative per-event information", negative, 0);

  std::uint64_t dpi = 0;
  for (std::uint64_t t = 0; t < kRandomJoints; ++t) {
    Rng rng(kSeed, 2, t);
    const std::size_t domain = 8 + rng.below(57);
    const FiniteFunction f = random_function(rng, domain, 16);
    const FiniteFunction g = random_function(rng, domain, 16);
    const std::size_t h_values = 1 + rng.below(16);
    std::vector<std::size_t> phi(g.value_count());
    for (auto& v : phi) {
      v = rng.below(h_values);
    }
    std::vector<Label> labels;
    for (std::size_t v = 0; v < h_values; ++v) {
      labels.emplace_back(static_cast<std::int64_t>(v));
    }
    // Drop unused h labels so every value has a preimage.
    std::vector<std::size_t> remap(h_values, SIZE_MAX);
    std::vector<Label> used;
    for (auto& v : phi) {
      if (remap[v] == SIZE_MAX) {
        remap[v] = used.size();
        used.push_back(labels[v]);
      }
      v = remap[v];
    }
    const FiniteFunction h = compose(g, phi, used);
    if (!dpi_check(f, g, h).ordering_holds) {
      ++dpi;
    }
  }
  ch.exact("information-identities/data-processing", "H(f) >= I(f;g) >= I(f;phi(g)) failures over 1000 maps", dpi, 0);
}

void complexity_identities(Checker& ch, const std::vector<JointModel>& joints) {
  std::uint64_t decomposition = 0, product = 0, at_least_one = 0, reversible = 0, below = 0;
  for (const JointModel& j : joints) {
    for (std::size_t k = 0; k < j.rows(); ++k) {
      if (j.row_marginal(k) == 0.0) {
        continue;
      }
      const ComplexityReport r = report(j, k);
      if (r.least_queries.is_finite() && r.avg_queries.is_finite() && !r.event_mi.is_infinite() &&
          r.event_mi.value() > 0.0) {
        const double rhs = r.avg_queries.value() * (r.avg_mi.value() / r.event_mi.value());
        decomposition += close(r.least_queries.value(), rhs) ? 0 : 1;
      }
      if (r.avg_queries.is_finite() && r.lower_bound.is_finite() && r.expected_queries.is_finite()) {
        product += close(r.avg_queries.value(), r.lower_bound.value() * r.expected_queries.value()) ? 0 : 1;
        below += r.lower_bound.value() <= r.avg_queries.value() * (1.0 + kIdentityTolerance) ? 0 : 1;
      }
      if (r.expected_queries.is_finite() && r.expected_queries.value() < 1.0 - kIdentityTolerance) {
        ++at_least_one;
      }
      for (std::size_t i = 0; i < j.cols(); ++i) {
        if (j.col_marginal(i) == 0.0) {
          continue;
        }
        const ExtendedReal p = pmi(j, k, i);
        if (p.is_finite() && p.value() > kIdentityTolerance && !reversible_identity_check(j, k, i).holds) {
          ++reversible;
        }
      }
    }
  }
  ch.exact("complexity-identities/decomposition", "least = avg x (I(f;g) / I(f=y;g)) failures", decomposition, 0);
  ch.exact("complexity-identities/lower-bound-product", "avg = lower_bound x expected failures", product, 0);
  ch.exact("complexity-identities/lower-bound", "lower_bound <= avg failures", below, 0);
  ch.exact("complexity-identities/expected-at-least-one", "H(f) / I(f;g) < 1 occurrences", at_least_one, 0);
  ch.exact("complexity-identities/reversible", "I(f=y)/time(f=y) = I(g=z)/time(g=z) failures", reversible, 0);
}

void worked_query_counts(Checker& ch) {
  std::uint64_t coin_failures = 0;
  for (std::uint64_t light = 0; light < 27; ++light) {
    const QueryTrace t = coin_weighing_sim(27, light);
    if (t.queries != 3 || std::fabs(t.predicted - 3.0) > kAlgebraTolerance) {
      ++coin_failures;
    }
  }
  ch.exact("worked-query-counts/coins-27", "positions of 27 whose search needs other than 3 weighings", coin_failures,
           0);
  std::uint64_t bisect_failures = 0;
  for (int t = 4; t <= 12; ++t) {
    const QueryTrace q = bisection_sim([](double x) { return x - 1.0 / 3.0; }, 0.0, 1.0, std::ldexp(1.0, -t));
    if (q.queries != static_cast<std::size_t>(t) || std::fabs(q.predicted - t) > kAlgebraTolerance) {
      ++bisect_failures;
    }
  }
  ch.exact("worked-query-counts/bisection", "tolerances 2^-t, t = 4..12, needing other than t queries",
           bisect_failures, 0);
  for (auto [p, trials, tag] : {std::tuple<double, std::size_t, const char*>{1.0, 1000, "1"},
                                {0.25, 100000, "0.25"},
                                {std::ldexp(1.0, -10), 10000, "2^-10"}}) {
    const GeometricResult g = geometric_search_sim(p, trials, kSeed);
    ch.at_most(std::string("worked-query-counts/geometric-") + tag, "|mean draws - 1/p| against 4 sigma / sqrt(trials)",
               std::fabs(g.mean - g.expected), g.tolerance);
  }
}

void sat_trials(Checker& ch) {
  const SatTrialsBound a = sat_trials_bound(20, 1);
  ch.at_most("sat-trials-bound/n20-k1", "relative gap of I/H to 2^n / k", a.relative_gap.value(), 1e-4);
  const SatTrialsBound b = sat_trials_bound(10, 4);
  ch.at_most("sat-trials-bound/n10-k4", "relative gap of I/H to 2^n / k", b.relative_gap.value(), 0.02);

  const BoolProfile unit = bool_profile(SatInstance{1, {{1}}});
  ch.flag("sat-trials-bound/bool-unit", "(x1): one model, H = 1, I(BOOL=1) = 1",
          unit.sat_count == 1 && std::fabs(unit.entropy.value() - 1.0) <= kGoldenTolerance &&
              std::fabs(unit.info_true.value() - 1.0) <= kGoldenTolerance);
  const BoolProfile unsat = bool_profile(SatInstance{1, {{1}, {-1}}});
  ch.flag("sat-trials-bound/bool-unsat", "(x1)(not x1): no model, I(BOOL=1) infinite",
          unsat.sat_count == 0 && unsat.p1 == 0.0 && unsat.info_true.is_infinite());
  const BoolProfile three = bool_profile(SatInstance{3, {{1, 2, 3}}});
  ch.flag("sat-trials-bound/bool-three", "(x1 or x2 or x3): 7 models, H = h(7/8)",
          three.sat_count == 7 && std::fabs(three.entropy.value() - h2(0.875)) <= kGoldenTolerance);
}

void number_theory_checks(Checker& ch) {
  ch.exact("number-theory/divisor-summatory-10", "D(10)", multiplication_profile(10).summatory, 27);
  const std::uint64_t limit = 100000;
  const std::vector<std::uint32_t> d = divisor_count_table(limit);
  std::uint64_t running = 0;
  std::uint64_t mismatches = 0;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    running += d[n];
    if (running != divisor_summatory_hyperbola(n)) {
      ++mismatches;
    }
  }
  for (std::uint64_t n : {1ULL, 2ULL, 10ULL, 997ULL, 1000ULL, 65536ULL, 100000ULL}) {
    std::uint64_t direct = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
      direct += d[k];
    }
    if (direct != floor_quotient_sum(n)) {
      ++mismatches;
    }
  }
  ch.exact("number-theory/hyperbola-identity", "n <= 10^5 where sieve and lattice counts of D(n) differ",
           mismatches, 0);
  const MultiplicationProfile m = multiplication_profile(1000000);
  ch.at_most("number-theory/dirichlet-envelope", "|D(n) - (n ln n + (2 gamma - 1) n)| at n = 10^6, envelope 10 sqrt(n)",
             m.dirichlet_gap, m.envelope);
  const double oracle = 2.0 * neg_xlog2x(0.2) + 2.0 * neg_xlog2x(0.3);
  ch.value("number-theory/totient-entropy-10", "phi(1..10) value entropy", totient_profile(10).entropy.value(),
           oracle, kGoldenTolerance);
  ch.flag("number-theory/carmichael-1e6", "every totient value up to 10^6 has two or more preimages",
          totient_profile(1000000).carmichael_ok);
}

void subset_sum_checks(Checker& ch) {
  const SubsetSumProfile pm = subset_sum_profile(SubsetSumInstance{{1, -1}});
  ch.value("subset-sum/plus-minus-one-entropy", "H(SUM) for weights (1, -1)", pm.entropy.value(), 1.5,
           kGoldenTolerance);
  ch.value("subset-sum/plus-minus-one-zero-info", "I(SUM = 0) for weights (1, -1)", pm.zero_info.value(), 1.0,
           kGoldenTolerance);
  double worst = 0.0;
  for (int n = 1; n <= 20; ++n) {
    const SubsetSumProfile p = subset_sum_profile(SubsetSumInstance{std::vector<std::int64_t>(n, 1)});
    double binomial = 0.0;
    double choose = 1.0;
    for (int k = 0; k <= n; ++k) {
      binomial += neg_xlog2x(std::ldexp(choose, -n));
      choose = choose * (n - k) / (k + 1);
    }
    worst = std::max(worst, std::fabs(p.entropy.value() - binomial));
  }
  ch.value("subset-sum/all-ones", "worst |H(SUM) - H(Binomial(n, 1/2))|, n <= 20", worst, 0.0, kGoldenTolerance);
  std::uint64_t mismatches = 0;
  for (std::uint64_t t = 0; t < 50; ++t) {
    Rng rng(kSeed, 3, t);
    SubsetSumInstance s;
    const std::size_t n = 1 + rng.below(20);
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t w = 0;
      while (w == 0) {
        w = static_cast<std::int64_t>(rng.below(201)) - 100;
      }
      s.weights.push_back(w);
    }
    if (!(exhaustive_histogram(s) == meet_in_middle_histogram(s))) {
      ++mismatches;
    }
  }
  ch.exact("subset-sum/meet-in-middle", "seeded instances (n <= 20) whose split histogram differs", mismatches, 0);
}

}  // namespace

std::vector<VerifyCheck> run_verification(const VerifyOptions& options) {
  Checker ch(options.inject_fault);
  golden_entropies(ch);
  small_channel_checks(ch);
  rabin_preimages(ch);
  channel_algebra(ch);
  pp_approximation_grid(ch);
  std::vector<JointModel> joints;
  joints.reserve(kRandomJoints);
  for (std::uint64_t t = 0; t < kRandomJoints; ++t) {
    joints.push_back(random_joint(t));
  }
  information_identities(ch, joints);
  complexity_identities(ch, joints);
  worked_query_counts(ch);
  sat_trials(ch);
  number_theory_checks(ch);
  subset_sum_checks(ch);
  return ch.take();
}

}  // namespace infoq

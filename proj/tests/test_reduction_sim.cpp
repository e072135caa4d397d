#include <doctest.h>

#include <cmath>

#include "infoq/error.hpp"
#include "infoq/reduction_sim.hpp"

using namespace infoq;

namespace {

std::size_t floor_log3(std::uint64_t n) {
  std::size_t e = 0;
  for (std::uint64_t p = 3; p <= n; p *= 3) {
    ++e;
  }
  return e;
}

}  // namespace

TEST_CASE("ceil log3 by repeated multiplication") {
  CHECK(ceil_log3(1) == 0);
  CHECK(ceil_log3(2) == 1);
  CHECK(ceil_log3(3) == 1);
  CHECK(ceil_log3(4) == 2);
  CHECK(ceil_log3(729) == 6);
  CHECK(ceil_log3(730) == 7);
}

TEST_CASE("coin weighing, exhaustive up to 3^6 coins") {
  for (std::uint64_t n = 1; n <= 729; ++n) {
    std::size_t most = 0;
    for (std::uint64_t light = 0; light < n; ++light) {
      const QueryTrace t = coin_weighing_sim(n, light);
      REQUIRE(t.outcomes.size() == t.queries);
      CHECK(t.queries >= floor_log3(n));
      most = std::max(most, t.queries);
    }
    // Worst case meets ceil(log3 n); a short last group can end a search
    // early, so equality for every position holds only at powers of 3.
    CHECK(most == ceil_log3(n));
    CHECK(most == static_cast<std::size_t>(std::ceil(coin_weighing_sim(n, 0).predicted - 1e-9)));
  }
  for (std::uint64_t light = 0; light < 243; ++light) {
    CHECK(coin_weighing_sim(243, light).queries == 5);
  }
  CHECK_THROWS_AS(coin_weighing_sim(0, 0), DomainError);
  CHECK_THROWS_AS(coin_weighing_sim(5, 5), DomainError);
}

TEST_CASE("coin outcomes trace the light coin") {
  const QueryTrace t = coin_weighing_sim(27, 26);
  CHECK(t.outcomes == std::vector<std::string>{"equal", "equal", "equal"});
  CHECK(coin_weighing_sim(27, 0).outcomes == std::vector<std::string>{"left", "left", "left"});
  CHECK(coin_weighing_sim(27, 12).outcomes.front() == "right");
}

TEST_CASE("bisection uses log2 of the shrink factor") {
  for (int t = 4; t <= 12; ++t) {
    const QueryTrace tr = bisection_sim([](double x) { return x - 1.0 / 3.0; }, 0.0, 1.0, std::ldexp(1.0, -t));
    CHECK(tr.queries == static_cast<std::size_t>(t));
    CHECK(tr.predicted == doctest::Approx(t));
    CHECK(tr.bracket_lo <= 1.0 / 3.0);
    CHECK(tr.bracket_hi >= 1.0 / 3.0);
  }
  const QueryTrace odd = bisection_sim([](double x) { return std::cos(x); }, 0.0, 3.0, 1e-3);
  CHECK(odd.queries == static_cast<std::size_t>(std::ceil(odd.predicted)));
  CHECK(std::fabs(0.5 * (odd.bracket_lo + odd.bracket_hi) - M_PI / 2) < 1e-3);
  CHECK_THROWS_AS(bisection_sim([](double x) { return x + 1.0; }, 0.0, 1.0, 0.1), DomainError);
  CHECK_THROWS_AS(bisection_sim([](double x) { return x; }, 1.0, 0.0, 0.1), DomainError);
}

TEST_CASE("bisection on samples") {
  const auto f = SampledFunction::on_grid(-1.0, 1.0, 201, [](double x) { return x * x * x - 0.1; });
  const QueryTrace t = bisection_sim(f, 1.0 / 1024);
  CHECK(t.queries == static_cast<std::size_t>(std::ceil(t.predicted)));
  CHECK(std::fabs(t.bracket_lo - std::cbrt(0.1)) < 0.01);
}

TEST_CASE("one sign query carries one bit") {
  const JointModel j = bisection_query_joint();
  CHECK(pmi(j, 0, 0).value() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mutual_information(j).value() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(bisection_query_joint(0), DomainError);
}

TEST_CASE("geometric search") {
  const GeometricResult one = geometric_search_sim(1.0, 100, 0);
  CHECK(one.mean == 1.0);
  CHECK(one.within);
  const GeometricResult a = geometric_search_sim(0.25, 20000, 3);
  const GeometricResult b = geometric_search_sim(0.25, 20000, 3);
  CHECK(a.mean == b.mean);
  CHECK(a.within);
  CHECK(a.sigma == doctest::Approx(std::sqrt(0.75) / 0.25));
  CHECK(geometric_search_sim(0.25, 20000, 4).mean != a.mean);
  CHECK_THROWS_AS(geometric_search_sim(0.0, 10, 0), DomainError);
  CHECK_THROWS_AS(geometric_search_sim(0.5, 0, 0), DomainError);
}

TEST_CASE("majority vote") {
  // r = 3: wrong when at most one of three is right.
  const double q = 0.5 + 0.1;
  const double three = (1 - q) * (1 - q) * (1 - q) + 3 * q * (1 - q) * (1 - q);
  CHECK(majority_error_exact(0.1, 3) == doctest::Approx(three).epsilon(1e-12));
  CHECK(majority_error_exact(0.1, 1) == doctest::Approx(0.4));
  double prev = 1.0;
  for (std::size_t r = 1; r < 400; r += 2) {
    const double e = majority_error_exact(0.05, r);
    CHECK(e <= prev + 1e-15);
    prev = e;
  }
  const AmplificationResult a = amplification_sim(make_channel(ChannelKind::pp, 0.5, 0.1), 51, 4000, 9);
  const AmplificationResult b = amplification_sim(make_channel(ChannelKind::pp, 0.5, 0.1), 51, 4000, 9);
  CHECK(a.errors == b.errors);
  const double sd = std::sqrt(a.exact_error * (1 - a.exact_error) / 4000.0);
  CHECK(std::fabs(a.error_rate - a.exact_error) < 4 * sd);
  CHECK_THROWS_AS(amplification_sim(make_channel(ChannelKind::pp, 0.5, 0.1), 4, 10, 0), DomainError);
  CHECK_THROWS_AS(amplification_sim(make_channel(ChannelKind::pp, 0.5, 0.0), 3, 10, 0), DomainError);
}

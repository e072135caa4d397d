#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "infoq/cnf.hpp"
#include "infoq/complexity.hpp"
#include "infoq/measure.hpp"
#include "infoq/subset_sum.hpp"

namespace infoq {

/// Indicator of the rationals on [0, 1] under Lebesgue measure: the
/// rational preimage has measure 0, the irrational one measure 1.
/// complement swaps the two labels.
InfoValue dirichlet_entropy(bool complement = false);

struct ModProfile {
  std::uint64_t modulus = 0;
  std::uint64_t domain_size = 0;
  Distribution distribution = Distribution::uniform(1);
  InfoValue entropy;
  double closed_form = 0.0;  // log2 n
};

/// x mod n over the domain 0..domain_size-1, which must be a positive
/// multiple of n (full residue systems).
ModProfile mod_profile(std::uint64_t n, std::uint64_t domain_size);

struct BoolProfile {
  int variables = 0;
  std::uint64_t sat_count = 0;
  double p1 = 0.0;
  InfoValue entropy;
  InfoValue info_true;  // I(BOOL = 1)
};

BoolProfile bool_profile(const SatInstance& s);

inline constexpr std::uint64_t kTotientLimit = 10'000'000;

struct TotientProfile {
  std::uint64_t bound = 0;
  Distribution distribution = Distribution::uniform(1);  // over totient values, ascending
  InfoValue entropy;
  bool carmichael_ok = false;
  /// Search bound for full preimage counts: every x with phi(x) <= bound is
  /// at most this large.
  std::uint64_t preimage_bound = 0;
  std::uint64_t singleton_value = 0;  // a value with one preimage, when found
};

/// phi(x) for x = 1..N. carmichael_ok: every attained value has at least two
/// preimages among all positive integers (not only those <= N).
TotientProfile totient_profile(std::uint64_t n);

struct DiscreteLogProfile {
  std::uint64_t prime = 0;
  std::uint64_t base = 0;
  Distribution distribution = Distribution::uniform(1);
  InfoValue entropy;
  double closed_form = 0.0;  // log2(p - 1)
  bool equiprobable_info = false;  // I(EXP = y) = H for every y
};

/// b^x mod p over x = 1..p-1. Throws DomainError (with the computed order)
/// when b is not a primitive root.
DiscreteLogProfile discrete_log_profile(std::uint64_t p, std::uint64_t b);

inline constexpr std::uint64_t kRabinModulusLimit = 1'000'000;

struct RabinProfile {
  std::uint64_t q1 = 0;
  std::uint64_t q2 = 0;
  std::uint64_t modulus = 0;
  std::uint64_t phi = 0;
  Distribution distribution = Distribution::uniform(1);
  InfoValue entropy;
  double closed_form = 0.0;  // log2(phi / 4)
  std::map<std::uint64_t, std::uint64_t> preimage_histogram;  // preimage count -> number of images
  bool four_to_one = false;
};

/// x^2 mod q1 q2 over the reduced residue system.
RabinProfile rabin_profile(std::uint64_t q1, std::uint64_t q2);

struct RsaProfile {
  std::uint64_t q1 = 0;
  std::uint64_t q2 = 0;
  std::uint64_t exponent = 0;
  std::uint64_t modulus = 0;
  std::uint64_t phi = 0;
  std::uint64_t trapdoor = 0;  // e^-1 mod phi
  InfoValue entropy;
  double closed_form = 0.0;  // log2 phi
  bool bijection_ok = false;
  bool trapdoor_ok = false;
};

/// x^e mod q1 q2 over the reduced residue system.
RsaProfile rsa_profile(std::uint64_t q1, std::uint64_t q2, std::uint64_t e);

inline constexpr std::uint64_t kDivisorLimit = 10'000'000;
inline constexpr double kEulerGamma = 0.5772156649;

struct MultiplicationProfile {
  std::uint64_t n = 0;
  std::uint64_t divisors = 0;        // d(n)
  std::uint64_t summatory = 0;       // D(n) from the sieve
  std::uint64_t summatory_hyperbola = 0;
  double probability = 0.0;          // d(n) / D(n)
  InfoValue info;                    // log2(D(n) / d(n))
  double asymptotic = 0.0;           // n ln n + (2 gamma - 1) n
  double dirichlet_gap = 0.0;
  double envelope = 0.0;             // 10 sqrt(n)
  bool within_envelope = false;
};

/// Ordered pairs (u, v) with uv <= n; the product takes value k on d(k)
/// of them.
MultiplicationProfile multiplication_profile(std::uint64_t n);

struct SubsetSumProfile {
  std::size_t weights = 0;
  bool meet_in_middle = false;
  SumHistogram histogram;
  std::uint64_t total = 0;   // 2^n
  InfoValue entropy;         // H(SUM)
  InfoValue zero_info;       // I(SUM = 0)
  ExtendedReal ratio;        // I(SUM = 0) / H(SUM)
  double nonzero_zero_prob = 0.0;  // Pr(SUM = 0 and x != 0)
};

SubsetSumProfile subset_sum_profile(const SubsetSumInstance& s, bool meet_in_middle = false);

/// Entropy of an integer histogram, computed as log2 T - sum c log2 c / T.
InfoValue histogram_entropy(const SumHistogram& h);

inline constexpr int kKsatMaxVariables = 20;

struct KsatPoint {
  double density = 0.0;
  std::size_t clauses = 0;
  std::size_t instances = 0;
  std::size_t satisfiable = 0;
  double fraction_sat = 0.0;
  double std_error = 0.0;        // binomial sqrt(f (1 - f) / instances)
  double mean_entropy = 0.0;     // H(BOOL), unsatisfiable instances count as 0
  ExtendedReal mean_bound;       // mean I(BOOL=1)/H(BOOL) over satisfiable instances
};

/// Random K-SAT: round(density n) clauses per instance, each over K distinct
/// variables with uniform signs. Instance j at grid point i draws from
/// Rng(seed, i, j).
std::vector<KsatPoint> ksat_experiment(int n, int k, const std::vector<double>& densities, std::size_t instances,
                                       std::uint64_t seed);

SatInstance random_ksat(int n, int k, std::size_t clauses, std::uint64_t seed, std::uint64_t stream,
                        std::uint64_t substream);

}  // namespace infoq

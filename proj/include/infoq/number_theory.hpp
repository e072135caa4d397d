#pragma once

#include <cstdint>
#include <vector>

namespace infoq {

/// phi(x) for x = 0..n (phi(0) = 0).
std::vector<std::uint32_t> totient_table(std::uint64_t n);

/// d(x), the number of divisors of x, for x = 0..n (d(0) = 0).
std::vector<std::uint32_t> divisor_count_table(std::uint64_t n);

/// sum_{k <= n} d(k) as 2 sum_{k <= sqrt n} floor(n / k) - floor(sqrt n)^2.
std::uint64_t divisor_summatory_hyperbola(std::uint64_t n);

/// sum_{k <= n} floor(n / k), the lattice-point count under uv = n.
std::uint64_t floor_quotient_sum(std::uint64_t n);

std::uint64_t isqrt(std::uint64_t n);
bool is_prime(std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Inverse of a modulo m; throws DomainError when gcd(a, m) != 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

/// Distinct prime factors in increasing order (trial division).
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

/// Smallest r >= 1 with b^r = 1 (mod p), p prime, b not divisible by p.
std::uint64_t multiplicative_order(std::uint64_t b, std::uint64_t p);

/// max x / phi(x) over x <= bound, attained at the largest primorial <= bound.
double max_totient_ratio(std::uint64_t bound);

}  // namespace infoq

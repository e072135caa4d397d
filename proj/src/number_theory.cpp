#include "infoq/number_theory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "infoq/error.hpp"

namespace infoq {

std::vector<std::uint32_t> totient_table(std::uint64_t n) {
  std::vector<std::uint32_t> phi(n + 1);
  std::iota(phi.begin(), phi.end(), 0U);
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (phi[p] != p) {
      continue;  // composite: already reduced by a smaller prime
    }
    for (std::uint64_t m = p; m <= n; m += p) {
      phi[m] -= phi[m] / static_cast<std::uint32_t>(p);
    }
  }
  return phi;
}

std::vector<std::uint32_t> divisor_count_table(std::uint64_t n) {
  std::vector<std::uint32_t> d(n + 1, 0);
  for (std::uint64_t k = 1; k <= n; ++k) {
    for (std::uint64_t m = k; m <= n; m += k) {
      ++d[m];
    }
  }
  return d;
}

std::uint64_t isqrt(std::uint64_t n) {
  constexpr std::uint64_t kMaxRoot = 0xFFFFFFFFULL;
  auto r = std::min(kMaxRoot, static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n))));
  // Compare by division so r near 2^32 cannot overflow.
  while (r > 0 && r > n / r) {
    --r;
  }
  while (r < kMaxRoot && r + 1 <= n / (r + 1)) {
    ++r;
  }
  return r;
}

std::uint64_t divisor_summatory_hyperbola(std::uint64_t n) {
  const std::uint64_t s = isqrt(n);
  std::uint64_t sum = 0;
  for (std::uint64_t k = 1; k <= s; ++k) {
    sum += n / k;
  }
  return 2 * sum - s * s;
}

std::uint64_t floor_quotient_sum(std::uint64_t n) {
  std::uint64_t sum = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    sum += n / k;
  }
  return sum;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      return false;
    }
  }
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) {
    return 0;
  }
  __extension__ using u128 = unsigned __int128;
  u128 result = 1;
  u128 b = base % mod;
  while (exp > 0) {
    if (exp & 1U) {
      result = result * b % mod;
    }
    b = b * b % mod;
    exp >>= 1U;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) {
    throw DomainError(std::to_string(a) + " has no inverse modulo " + std::to_string(m));
  }
  const auto mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) {
        n /= q;
      }
    }
  }
  if (n > 1) {
    out.push_back(n);
  }
  return out;
}

std::uint64_t multiplicative_order(std::uint64_t b, std::uint64_t p) {
  if (b % p == 0) {
    throw DomainError("base is divisible by the modulus");
  }
  std::uint64_t order = p - 1;
  for (std::uint64_t q : distinct_prime_factors(p - 1)) {
    while (order % q == 0 && pow_mod(b, order / q, p) == 1) {
      order /= q;
    }
  }
  return order;
}

double max_totient_ratio(std::uint64_t bound) {
  double ratio = 1.0;
  std::uint64_t primorial = 1;
  for (std::uint64_t p = 2;; ++p) {
    if (!is_prime(p)) {
      continue;
    }
    if (primorial > bound / p) {
      break;
    }
    primorial *= p;
    ratio *= static_cast<double>(p) / static_cast<double>(p - 1);
  }
  return ratio;
}

}  // namespace infoq

#include "progressio/numtheory.hpp"

#include <algorithm>
#include <string>

#include "progressio/error.hpp"

namespace progressio::numtheory {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(u128{a} * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool strong_probable_prime(std::uint64_t n, std::uint64_t a) {
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

constexpr std::array<std::uint64_t, 12> kWitnesses{2,  3,  5,  7,  11, 13,
                                                   17, 19, 23, 29, 31, 37};

std::optional<std::uint64_t> smallest_prime_in(std::uint64_t lo, std::uint64_t hi) {
  // open interval (lo, hi)
  for (std::uint64_t p = lo + 1; p < hi; ++p)
    if (is_prime(p)) return p;
  return std::nullopt;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : kWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 41 * 41) return true;
  for (std::uint64_t a : kWitnesses)
    if (!strong_probable_prime(n, a)) return false;
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<std::uint64_t> prime_power_base(std::uint64_t n) {
  auto primes = prime_divisors(n);
  if (primes.size() != 1) return std::nullopt;
  return primes.front();
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> cunningham_pairs(std::uint64_t limit) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  if (limit < 3) return pairs;
  std::uint64_t const top = 2 * limit - 1;
  std::vector<bool> composite(top + 1, false);
  composite[0] = composite[1] = true;
  for (std::uint64_t i = 2; i * i <= top; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= top; j += i) composite[j] = true;
  }
  for (std::uint64_t q = 3; q <= limit; q += 2)
    if (!composite[q] && !composite[2 * q - 1]) pairs.emplace_back(q, 2 * q - 1);
  return pairs;
}

std::uint64_t multiplicative_order(std::uint64_t p, std::uint64_t q) {
  if (q < 2) throw PreconditionError("modulus must be at least 2");
  std::uint64_t const base = p % q;
  if (base == 0) {
    throw PreconditionError(std::to_string(p) + " is divisible by " + std::to_string(q) +
                            "; no multiplicative order");
  }
  std::uint64_t x = base;
  for (std::uint64_t b = 1; b <= q; ++b) {
    if (x == 1) return b;
    x = mul_mod(x, base, q);
  }
  throw PreconditionError(std::to_string(p) + " is not a unit modulo " + std::to_string(q));
}

std::uint64_t bertrand_prime(std::uint64_t n) {
  if (n == 0) throw PreconditionError("bertrand_prime needs n >= 1");
  if (n == 1) return 2;
  // Bertrand's postulate guarantees a hit before 2n
  return *smallest_prime_in(n, 2 * n);
}

std::uint64_t consecutive_prime_bound(std::uint64_t r) {
  if (r == 0) throw PreconditionError("ratio must be positive");
  for (std::uint64_t p = 2;; ++p)
    if (is_prime(p) && r % p != 0) return p;
}

Case1Scan lemma21_case1_scan(std::uint64_t m) {
  if (m % 2 == 0) throw PreconditionError("m must be odd, got " + std::to_string(m));
  Case1Scan scan;
  scan.m = m;
  if (m >= 41) {
    std::uint64_t const k = m / 8;
    auto p1 = smallest_prime_in(k, 2 * k);
    auto p2 = smallest_prime_in(2 * k, 4 * k);
    auto p3 = smallest_prime_in(4 * k, 8 * k);
    if (p1 && p2 && p3 && *p1 * *p2 > m && *p3 <= m) {
      scan.eliminated = true;
      scan.witness = std::array{*p1, *p2, *p3};
      scan.method = Case1Scan::Method::BertrandIntervals;
      return scan;
    }
  }
  // exhaustive over triples of odd primes ≤ m, largest first
  std::vector<std::uint64_t> primes;
  for (std::uint64_t x = 3; x <= m; x += 2)
    if (is_prime(x)) primes.push_back(x);
  std::reverse(primes.begin(), primes.end());
  for (std::size_t a = 0; a < primes.size(); ++a) {
    for (std::size_t b = a + 1; b < primes.size(); ++b) {
      for (std::size_t c = b + 1; c < primes.size(); ++c) {
        // primes[c] < primes[b] < primes[a]: the smallest product is c·b
        if (primes[c] * primes[b] > m) {
          scan.eliminated = true;
          scan.witness = std::array{primes[c], primes[b], primes[a]};
          scan.method = Case1Scan::Method::Exhaustive;
          return scan;
        }
      }
    }
  }
  return scan;
}

std::uint64_t prime_run_length(std::uint64_t a, std::uint64_t r) {
  std::uint64_t run = 0;
  while (is_prime(a + run * r)) ++run;
  return run;
}

}  // namespace progressio::numtheory

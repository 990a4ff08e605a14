#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace progressio::numtheory {

/// Deterministic for every 64-bit input (trial division, then Miller-Rabin
/// with a witness set proven sufficient below 2^64).
bool is_prime(std::uint64_t n);

/// Primes p ≤ n, ascending (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

/// Distinct primes dividing n, ascending. n = 0 or 1 gives an empty list.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// If n = p^k for a prime p and k ≥ 1, returns p.
std::optional<std::uint64_t> prime_power_base(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Pairs (q, p) of odd primes with p = 2q - 1 and q ≤ limit, ascending in q.
/// Sieve-based.
std::vector<std::pair<std::uint64_t, std::uint64_t>> cunningham_pairs(std::uint64_t limit);

/// Least b ≥ 1 with p^b ≡ 1 (mod q). Throws PreconditionError when
/// p ≡ 0 (mod q) or q < 2.
std::uint64_t multiplicative_order(std::uint64_t p, std::uint64_t q);

/// Smallest prime p with n < p < 2n; for n = 1 the answer is 2, the only
/// prime in (1, 2].
std::uint64_t bertrand_prime(std::uint64_t n);

/// Smallest prime not dividing r.
std::uint64_t consecutive_prime_bound(std::uint64_t r);

/// Outcome of trying to rule out π_e = {1, 3, 5, ..., m} for an odd-order
/// solvable group via the three-primes lemma: a triple of primes from the
/// set whose pairwise products all exceed m means no element can have the
/// order the lemma demands.
struct Case1Scan {
  enum class Method { None, BertrandIntervals, Exhaustive };

  std::uint64_t m = 0;
  bool eliminated = false;
  std::optional<std::array<std::uint64_t, 3>> witness;
  Method method = Method::None;
};

/// m odd. For m ≥ 41 the witness is the smallest prime in each of the
/// nested intervals (k, 2k), (2k, 4k), (4k, 8k) with k = ⌊m/8⌋. Below that
/// all triples of odd primes ≤ m are searched, largest first, so the
/// witness is the three largest primes whenever any triple works. Throws
/// PreconditionError for even m.
Case1Scan lemma21_case1_scan(std::uint64_t m);

/// Longest run of consecutive prime terms a, a+r, a+2r, ... starting at a.
std::uint64_t prime_run_length(std::uint64_t a, std::uint64_t r);

}  // namespace progressio::numtheory

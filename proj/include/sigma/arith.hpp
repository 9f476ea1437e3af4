#ifndef SIGMA_ARITH_HPP
#define SIGMA_ARITH_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

namespace sigma {

// Prime sets are sorted, duplicate-free vectors.  Orders in this library
// stay tiny, so trial division is all the number theory we need.
using PrimeVec = std::vector<std::uint64_t>;

bool is_prime(std::uint64_t n);

// Prime factorization as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

// pi(n): the set of primes dividing n.  pi(1) is empty.
PrimeVec prime_support(std::uint64_t n);

// Largest divisor of n supported on `primes`.
std::uint64_t part_for_primes(std::uint64_t n, PrimeVec const &primes);

// p-part of n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

inline bool contains_prime(PrimeVec const &s, std::uint64_t p) {
  return std::binary_search(s.begin(), s.end(), p);
}

inline bool subset_of(PrimeVec const &a, PrimeVec const &b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool disjoint(PrimeVec const &a, PrimeVec const &b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j)
      return false;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return true;
}

PrimeVec set_union(PrimeVec const &a, PrimeVec const &b);
PrimeVec set_intersection(PrimeVec const &a, PrimeVec const &b);
PrimeVec set_difference(PrimeVec const &a, PrimeVec const &b);

} // namespace sigma

#endif

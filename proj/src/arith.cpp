#include "sigma/arith.hpp"

namespace sigma {

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  if (n % 2 == 0)
    return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0)
      continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

PrimeVec prime_support(std::uint64_t n) {
  PrimeVec out;
  for (auto const &[p, e] : factorize(n))
    out.push_back(p);
  return out;
}

std::uint64_t part_for_primes(std::uint64_t n, PrimeVec const &primes) {
  std::uint64_t part = 1;
  for (auto const &[p, e] : factorize(n)) {
    if (!contains_prime(primes, p))
      continue;
    for (int i = 0; i < e; ++i)
      part *= p;
  }
  return part;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

PrimeVec set_union(PrimeVec const &a, PrimeVec const &b) {
  PrimeVec out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

PrimeVec set_intersection(PrimeVec const &a, PrimeVec const &b) {
  PrimeVec out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

PrimeVec set_difference(PrimeVec const &a, PrimeVec const &b) {
  PrimeVec out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

} // namespace sigma

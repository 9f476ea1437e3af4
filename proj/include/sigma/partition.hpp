#ifndef SIGMA_PARTITION_HPP
#define SIGMA_PARTITION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sigma/arith.hpp"
#include "sigma/limits.hpp"

namespace sigma {

// A partition of a finite prime set into disjoint non-empty blocks.
// Canonical form: primes ascending inside each block, blocks ordered by
// their least prime.  Primes outside the covered set are rejected by the
// lookup functions, so callers must build partitions that cover every
// prime they will ask about.
class SigmaPartition {
public:
  explicit SigmaPartition(std::vector<PrimeVec> blocks);

  std::size_t block_count() const { return blocks_.size(); }
  PrimeVec const &block(std::size_t i) const { return blocks_[i]; }
  std::vector<PrimeVec> const &blocks() const { return blocks_; }

  PrimeVec const &covered_primes() const { return covered_; }
  bool covers(PrimeVec const &primes) const { return subset_of(primes, covered_); }

  // Index of the block containing p; throws DomainError for uncovered p.
  std::size_t block_index_of(std::uint64_t p) const;

  // sigma(n): indices of the blocks meeting the prime support of n,
  // ascending.  sigma(1) is empty.
  std::vector<std::size_t> sigma_of(std::uint64_t n) const;

  // n is sigma-primary when sigma(n) has at most one member.
  bool is_primary(std::uint64_t n) const { return sigma_of(n).size() <= 1; }

  bool sigma_coprime(std::uint64_t a, std::uint64_t b) const;

  // "2,7|3" with '|' between blocks and ',' between primes.
  std::string to_literal() const;
  static SigmaPartition parse(std::string const &literal);

  // Each prime in its own block.
  static SigmaPartition singletons(PrimeVec const &primes);

  // {primes in pi, the rest}; empty sides are dropped.
  static SigmaPartition two_block(PrimeVec const &pi, PrimeVec const &primes);

  bool operator==(SigmaPartition const &o) const { return blocks_ == o.blocks_; }
  bool operator!=(SigmaPartition const &o) const { return !(*this == o); }

private:
  std::vector<PrimeVec> blocks_;
  PrimeVec covered_;
};

// Every partition of `primes`, deterministically ordered (restricted
// growth strings, lexicographic).  Refuses prime sets larger than
// limits.partition_primes_cap.
std::vector<SigmaPartition> all_partitions(PrimeVec const &primes,
                                           Limits const &limits = default_limits());

// A subset Pi of the blocks of a fixed partition, kept as ascending block
// indices.  Pi-numbers are those whose prime support lies inside the
// selected blocks.
class Pi {
public:
  Pi(SigmaPartition sigma, std::vector<std::size_t> block_indices);

  SigmaPartition const &sigma() const { return sigma_; }
  std::vector<std::size_t> const &block_indices() const { return indices_; }
  std::size_t block_count() const { return indices_.size(); }

  bool has_block(std::size_t i) const;
  PrimeVec primes() const;

  // The complementary selection Pi' inside the same partition.
  Pi complement() const;

  bool is_pi_number(std::uint64_t n) const;
  bool is_pi_prime_number(std::uint64_t n) const; // Pi'-number

  // Blocks of Pi that meet the prime support of n, ascending.
  std::vector<std::size_t> blocks_meeting(std::uint64_t n) const;

  // "2,7" or "2,7|3": the selected blocks in partition syntax.
  std::string to_literal() const;

  // Selects the blocks of `sigma` that are listed in `literal`; each
  // listed block must be a block of sigma.
  static Pi parse(SigmaPartition sigma, std::string const &literal);

  static Pi all_blocks(SigmaPartition sigma);

  bool operator==(Pi const &o) const {
    return sigma_ == o.sigma_ && indices_ == o.indices_;
  }

private:
  SigmaPartition sigma_;
  std::vector<std::size_t> indices_;
};

// Classic pi-numbers for a plain prime set.
inline bool is_pi_number(std::uint64_t n, PrimeVec const &pi) {
  return subset_of(prime_support(n), pi);
}

} // namespace sigma

#endif

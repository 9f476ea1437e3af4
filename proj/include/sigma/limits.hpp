#ifndef SIGMA_LIMITS_HPP
#define SIGMA_LIMITS_HPP

#include <cstddef>
#include <cstdint>

namespace sigma {

// Resource caps.  These are configuration, not constants: every cap can be
// raised by passing a custom Limits to the operation that needs it.
// Exceeding a cap raises ResourceError, which the verifier records as a
// skip rather than a verdict.
struct Limits {
  // Largest group order for which construction (and hence element
  // materialization) is permitted.
  std::uint64_t element_cap = 10000;

  // Largest group order for which a Cayley table and the full subgroup
  // lattice may be built.  Everything in the verification corpus stays
  // well below this.
  std::uint64_t universe_cap = 600;

  // Hard ceiling on the number of subgroups a lattice may contain.
  std::size_t subgroup_cap = 20000;

  // Cap on the materialized cartesian product in complete_hall_sets,
  // per (group, Pi) query.
  std::size_t hall_product_cap = 512;

  // Partition enumeration refuses prime sets larger than this
  // (Bell(4) = 15 partitions is the intended working maximum).
  int partition_primes_cap = 4;
};

inline Limits const &default_limits() {
  static Limits const lim{};
  return lim;
}

} // namespace sigma

#endif

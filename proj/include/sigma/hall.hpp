#ifndef SIGMA_HALL_HPP
#define SIGMA_HALL_HPP

#include <cstdint>
#include <vector>

#include "sigma/partition.hpp"
#include "sigma/subgroup_ops.hpp"
#include "sigma/universe.hpp"

namespace sigma {

// Hall subgroups for `primes`: subgroups whose order is the full
// primes-part of |e|.  Ascending lattice ids.
std::vector<Subgroup> hall_subgroups(Subgroup const &e, PrimeVec const &primes);

std::vector<Subgroup> sylow_subgroups(Subgroup const &e, std::uint64_t p);

bool is_pi_group(Subgroup const &g, Pi const &pi);

// Blocks of pi that meet the prime support of |g|, ascending.
std::vector<std::size_t> relevant_blocks(Subgroup const &g, Pi const &pi);

// Hall subgroup lists of g, one list per relevant block, aligned with
// relevant_blocks(g, pi).
std::vector<std::vector<Subgroup>> hall_lists_per_block(Subgroup const &g,
                                                        Pi const &pi);

// g has a Hall subgroup for every relevant block of pi.
bool is_pi_full(Subgroup const &g, Pi const &pi);

// One Hall subgroup per relevant block.
struct CompleteHallSet {
  std::vector<std::size_t> block_indices;
  std::vector<Subgroup> members;
};

// Every complete Hall pi-set of g, ordered lexicographically by member
// lattice ids.  Throws ResourceError when the count would exceed
// limits.hall_product_cap.
std::vector<CompleteHallSet> complete_hall_sets(
    Subgroup const &g, Pi const &pi, Limits const &limits = default_limits());

enum class DPropertyMode {
  ECD, // existence, conjugacy, dominance
  EC,  // existence and conjugacy only
};

// e satisfies the D-property for `primes`: Hall subgroups exist, are all
// conjugate in e, and (under ECD) every subgroup of e whose order is
// supported on `primes` lies inside one of them.
bool is_d_property(Subgroup const &e, PrimeVec const &primes,
                   DPropertyMode mode);

// Every subgroup of g has the D-property for every block of pi meeting
// its order.
bool is_sylow_type(Subgroup const &g, Pi const &pi,
                   DPropertyMode mode = DPropertyMode::ECD);

// Largest normal subgroup of g whose order is a pi-number.
Subgroup o_pi_lower(Subgroup const &g, Pi const &pi);

// Smallest normal subgroup of g with pi-group quotient: the closure of
// all elements of pi'-order.
Subgroup o_pi_upper(Subgroup const &g, Pi const &pi);

// g has a normal Hall subgroup for the primes selected by pi.
bool is_pi_closed(Subgroup const &g, Pi const &pi);

// Plain prime-set variant: a normal subgroup of order part(|g|, primes).
bool has_normal_hall(Subgroup const &g, PrimeVec const &primes);

} // namespace sigma

#endif

#ifndef SIGMA_EMBEDDING_HPP
#define SIGMA_EMBEDDING_HPP

#include <string>
#include <vector>

#include "sigma/hall.hpp"
#include "sigma/partition.hpp"
#include "sigma/subgroup_ops.hpp"
#include "sigma/universe.hpp"

namespace sigma {

namespace detail {

// Deliberately broken predicate variants, used to demonstrate that the
// verification suites can detect an incorrect implementation.  At most
// one fault is active at a time; predicate caches that a fault could
// poison are bypassed while it is active.
enum class Fault {
  none,
  // Definition-level permutability checks only the chosen Hall subgroups
  // themselves, never their conjugates.
  drop_conjugates,
  // AB = BA is "checked" with the product-size identity
  // |AB| * |A & B| = |A| * |B|, which holds for all pairs of subgroups.
  permutes_by_order_formula,
  // S-permutability only tests Sylow subgroups for the smallest prime.
  s_permutable_first_prime_only,
  // Nilpotency for a partition is replaced by mere existence of Hall
  // subgroups per block, dropping the normality requirement.
  sigma_nilpotent_by_hall_existence,
};

Fault active_fault();
void set_active_fault(Fault f);

struct FaultGuard {
  explicit FaultGuard(Fault f) { set_active_fault(f); }
  ~FaultGuard() { set_active_fault(Fault::none); }
  FaultGuard(FaultGuard const &) = delete;
  FaultGuard &operator=(FaultGuard const &) = delete;
};

std::vector<std::pair<std::string, Fault>> const &fault_registry();
Fault fault_by_name(std::string const &name);

} // namespace detail

// AB as an element set.
ElemSet product_set(Subgroup const &a, Subgroup const &b);

// AB = BA, equivalently AB is a subgroup.
bool permutes(Subgroup const &a, Subgroup const &b);

// h permutes with v^x for every x in `conjugators`.
bool permutes_with_all_conjugates(Subgroup const &h, Subgroup const &v,
                                  Subgroup const &conjugators);

// h permutes with every listed subgroup.
bool is_set_permutable(Subgroup const &h, std::vector<Subgroup> const &members);

// For each relevant block of pi (in the h's ambient group), the Hall
// subgroups V of that block such that h permutes with every conjugate
// V^x, x in `conjugators`.  Aligned with relevant_blocks of the full
// group.
std::vector<std::vector<Subgroup>> pi_permutable_blocks(
    Subgroup const &h, Pi const &pi, Subgroup const &conjugators);

// Some complete Hall pi-set H of the full group exists with h
// H^K-permutable; per-block independence makes this equivalent to every
// list from pi_permutable_blocks being non-empty.
bool is_pi_permutable_over(Subgroup const &h, Pi const &pi,
                           Subgroup const &conjugators);

// The K = G case.
bool is_pi_permutable(Subgroup const &h, Pi const &pi);

// Pi-permutability evaluated inside amb: Hall lists and conjugators both
// come from amb rather than the full group.  Requires h <= amb.
bool is_pi_permutable_in(Subgroup const &h, Subgroup const &amb, Pi const &pi);

// h permutes with every Sylow subgroup of the full group.
bool is_s_permutable(Subgroup const &h);

// h permutes with every Sylow p-subgroup for the primes p not dividing
// |h|.
bool is_s_semipermutable(Subgroup const &h);

bool is_sigma_primary(Subgroup const &g, SigmaPartition const &sigma);

// Direct product of its Hall block-subgroups; checked per block by
// counting and closing the elements of block order.
bool is_sigma_nilpotent(Subgroup const &g, SigmaPartition const &sigma);

// Every chief factor order is primary for the partition.
bool is_sigma_soluble(Subgroup const &g, SigmaPartition const &sigma);

// Smallest normal subgroup with sigma-nilpotent quotient.
Subgroup sigma_nilpotent_residual(Subgroup const &g,
                                  SigmaPartition const &sigma);

// A chain h = T_0 <= ... <= T_n = ambient exists where each step is
// either normal or has primary quotient over the core.
bool is_sigma_subnormal(Subgroup const &h, Subgroup const &ambient,
                        SigmaPartition const &sigma);

// Witness chain for is_sigma_subnormal, ascending; empty when h is not
// subnormal for the partition.
std::vector<Subgroup> sigma_subnormal_chain(Subgroup const &h,
                                            Subgroup const &ambient,
                                            SigmaPartition const &sigma);

// Non-nilpotent with every maximal subgroup nilpotent.
bool is_schmidt(Subgroup const &g);

bool is_minimal_non_sigma_nilpotent(Subgroup const &g,
                                    SigmaPartition const &sigma);

// g is the direct product of a Hall pi-subgroup and a Hall pi'-subgroup.
bool is_pi_decomposable(Subgroup const &g, PrimeVec const &pi);

// Every chief factor order is a pi-number or a pi'-number.
bool is_pi_separable(Subgroup const &g, PrimeVec const &pi);

} // namespace sigma

#endif

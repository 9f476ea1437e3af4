#ifndef SIGMA_SUBGROUP_OPS_HPP
#define SIGMA_SUBGROUP_OPS_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "sigma/universe.hpp"

namespace sigma {

// All binary operations require both handles to live in the same
// universe, and an explicit ambient argument where the result depends on
// it.  Containment violations raise DomainError.

bool is_normal_in(Subgroup const &a, Subgroup const &ambient);

Subgroup intersection(Subgroup const &a, Subgroup const &b);
Subgroup join(Subgroup const &a, Subgroup const &b);
Subgroup conjugate(Subgroup const &a, std::uint32_t x);
Subgroup conjugate(Subgroup const &a, Permutation const &x);

Subgroup normalizer(Subgroup const &ambient, Subgroup const &a);
Subgroup centralizer(Subgroup const &ambient, Subgroup const &a);
Subgroup core(Subgroup const &ambient, Subgroup const &a);
Subgroup normal_closure(Subgroup const &ambient, Subgroup const &a);

// distinct conjugates a^x for x ranging over `conjugators`, ascending ids
std::vector<Subgroup> conjugates_under(Subgroup const &a,
                                       Subgroup const &conjugators);

std::vector<Subgroup> all_subgroups(Subgroup const &ambient);
std::vector<Subgroup> maximal_subgroups(Subgroup const &ambient);
std::vector<Subgroup> normal_subgroups(Subgroup const &ambient);
std::vector<Subgroup> minimal_normal_subgroups(Subgroup const &ambient);
std::vector<Subgroup> subgroups_between(Subgroup const &inner,
                                        Subgroup const &ambient);

Subgroup frattini(Subgroup const &ambient);

// Ascending chief series 1 = T_0 < ... < T_k = ambient; every term is
// normal in the ambient group and each T_{i+1}/T_i is a minimal normal
// subgroup of the corresponding quotient.  Ties between candidate next
// terms break deterministically by element-set order; `prefer_largest`
// flips the tie-break (used to confirm factor multisets are invariant).
std::vector<Subgroup> chief_series(Subgroup const &ambient,
                                   bool prefer_largest = false);
std::vector<std::uint64_t> chief_factor_orders(Subgroup const &ambient,
                                               bool prefer_largest = false);

bool is_abelian(Subgroup const &g);
bool is_nilpotent(Subgroup const &g);
bool is_subnormal(Subgroup const &h, Subgroup const &ambient);

// Coset-action quotient `ambient / ker`.  Faithful on the coset space,
// so the resulting group has order |ambient| / |ker|; elem_image maps
// parent element indices to quotient element indices.
struct Quotient {
  PermGroup group;
  std::shared_ptr<Universe const> parent;
  std::size_t amb_id = 0;
  std::size_t ker_id = 0;
  std::vector<std::int32_t> elem_image;
  std::shared_ptr<Universe const> q_universe;

  Subgroup image_of(Subgroup const &s) const;
  Subgroup image_full() const;
  Subgroup preimage_of(Subgroup const &qs) const;
};

std::shared_ptr<Quotient const> quotient(Subgroup const &ambient,
                                         Subgroup const &ker);

} // namespace sigma

#endif

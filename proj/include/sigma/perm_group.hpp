#ifndef SIGMA_PERM_GROUP_HPP
#define SIGMA_PERM_GROUP_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "sigma/limits.hpp"
#include "sigma/perm.hpp"

namespace sigma {

// Base-and-strong-generators structure.  Order and membership come from
// here without materializing elements.
class StabilizerChain {
public:
  StabilizerChain() = default;

  static StabilizerChain build(unsigned degree,
                               std::vector<Permutation> const &gens);

  std::uint64_t order() const;
  bool contains(Permutation const &p) const;
  unsigned degree() const { return degree_; }

private:
  struct Level {
    unsigned base_point = 0;
    std::vector<Permutation> gens;
    // transversal_[q] maps base_point to q; index -1 means q not in orbit
    std::vector<int> orbit_pos;
    std::vector<Permutation> transversal;
  };

  std::size_t add_strong_generator(Permutation const &g);
  void rebuild_orbit(std::size_t level);
  void complete();

  unsigned degree_ = 0;
  std::vector<Level> levels_;
};

// An immutable finite permutation group given by generators.  The exact
// order is computed at construction; construction refuses groups whose
// order exceeds the element cap, so elements() is always available.
// Copies share state; lazy caches fill at most once and are safe to
// trigger from concurrent readers.
class PermGroup {
public:
  PermGroup(unsigned degree, std::vector<Permutation> gens,
            Limits const &limits = default_limits());

  static PermGroup trivial(unsigned degree,
                           Limits const &limits = default_limits());

  unsigned degree() const;
  std::uint64_t order() const;
  std::vector<Permutation> const &generators() const;
  bool contains(Permutation const &p) const;

  // All elements, sorted by image list (the identity comes first).
  std::vector<Permutation> const &elements() const;

  bool is_subgroup_of(PermGroup const &other) const;

  Limits const &limits() const;

  // Stable identity of the shared state; used to key per-group caches.
  void const *identity_key() const { return data_.get(); }

private:
  struct Data;
  std::shared_ptr<Data const> data_;
};

// Spelled-out constructor for symmetry with the rest of the interface.
inline PermGroup group_from_generators(unsigned degree,
                                       std::vector<Permutation> gens,
                                       Limits const &limits = default_limits()) {
  return PermGroup(degree, std::move(gens), limits);
}

} // namespace sigma

#endif

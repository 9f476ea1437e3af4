#ifndef SIGMA_UNIVERSE_HPP
#define SIGMA_UNIVERSE_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "sigma/elemset.hpp"
#include "sigma/perm.hpp"
#include "sigma/perm_group.hpp"

namespace sigma {

class Subgroup;
struct Quotient;

// Materialized view of one ambient group: indexed elements, a Cayley
// table, and (on demand) the complete subgroup lattice with conjugacy
// classes.  Subgroups of the ambient group live here as element sets;
// every subgroup-valued operation resolves its result back to a lattice
// id, so identical subgroups always share one record.
//
// Instances are immutable after construction except for the lazily
// filled lattice and the memo tables, all of which are fill-once or
// mutex-guarded; concurrent readers are safe.
class Universe : public std::enable_shared_from_this<Universe> {
public:
  static std::shared_ptr<Universe const> make(PermGroup const &group);

  PermGroup const &group() const { return group_; }
  std::size_t size() const { return elements_.size(); }
  unsigned degree() const { return group_.degree(); }

  Permutation const &element(std::uint32_t i) const { return elements_[i]; }
  std::uint32_t index_of(Permutation const &p) const;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return table_[a * elements_.size() + b];
  }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  std::uint64_t elem_order(std::uint32_t a) const { return elem_order_[a]; }

  std::vector<std::uint32_t> const &gen_indices() const { return gen_idx_; }

  // x^-1 s x, elementwise
  ElemSet conjugate_set(ElemSet const &s, std::uint32_t x) const;

  // subgroup generated by the members of `seed`
  ElemSet closure(ElemSet const &seed) const;
  ElemSet closure_from(ElemSet start, std::vector<std::uint32_t> const &gens) const;

  // --- subgroup lattice (built on first use) ---

  struct SubgroupRec {
    ElemSet set;
    std::uint64_t order;
    std::vector<std::uint32_t> gens; // greedy minimal generating elements
    std::uint32_t class_id;
    bool normal; // in the ambient group
  };

  std::size_t subgroup_count() const;
  SubgroupRec const &subgroup_rec(std::size_t id) const;
  std::size_t id_of_set(ElemSet const &s) const; // s must be a subgroup
  std::size_t full_id() const;
  std::size_t trivial_id() const;

  // ids of subgroups contained in `outer` / containing `inner`, ascending
  std::vector<std::uint32_t> subgroups_below(std::size_t outer) const;
  std::vector<std::uint32_t> subgroups_above(std::size_t inner) const;
  std::vector<std::uint32_t> subgroups_between(std::size_t inner,
                                               std::size_t outer) const;
  bool id_contains(std::size_t outer, std::size_t inner) const;

  std::vector<std::uint32_t> const &class_members(std::uint32_t class_id) const;
  std::vector<std::uint32_t> const &class_rep_ids() const;

  std::size_t conjugate_subgroup(std::size_t id, std::uint32_t x) const;

  // --- shared memo tables ---
  //
  // Plumbing for the predicate layers.  Keys are lattice-id pairs (or a
  // canonical partition literal where a memo depends on the partition).
  // Guarded by mutex; cached values are deterministic, so cache hits can
  // never change a verdict.
  struct Caches {
    std::mutex mutex;
    std::unordered_map<std::uint64_t, bool> normal_in;
    std::unordered_map<std::uint64_t, std::uint32_t> core;
    std::unordered_map<std::uint64_t, std::uint32_t> normalizer;
    std::unordered_map<std::uint64_t, bool> product_closed;
    std::unordered_map<std::uint64_t, bool> permutes_all_conj;
    std::unordered_map<std::uint64_t, std::shared_ptr<Quotient const>> quotient;
    std::unordered_map<std::string, bool> block_d_property;
    std::unordered_map<std::string,
                       std::unordered_map<std::uint64_t, std::uint8_t>>
        sigma_subnormal;
    std::unordered_map<std::string, std::size_t> residual;
    std::unordered_map<std::string, std::uint8_t> sigma_nilpotent;
    std::unordered_map<std::string, std::vector<std::uint32_t>> hall_lists;
  };
  Caches &caches() const { return caches_; }

  static std::uint64_t pair_key(std::size_t a, std::size_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }

private:
  explicit Universe(PermGroup group);
  void build_tables();
  void ensure_lattice() const;
  void build_lattice() const;

  PermGroup group_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::uint32_t, PermHash> index_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint64_t> elem_order_;
  std::vector<std::uint32_t> gen_idx_;

  mutable std::once_flag lattice_once_;
  mutable std::vector<SubgroupRec> subs_;
  mutable std::unordered_map<ElemSet, std::uint32_t, ElemSetHash> sub_index_;
  mutable std::vector<ElemSet> below_;          // id -> bitset over ids
  mutable std::vector<ElemSet> above_;          // transpose
  mutable std::vector<std::vector<std::uint32_t>> classes_;
  mutable std::vector<std::uint32_t> class_reps_;
  mutable std::vector<std::vector<std::uint32_t>> gen_conj_elem_; // per gen
  mutable std::size_t trivial_id_ = 0, full_id_ = 0;

  mutable Caches caches_;
};

std::shared_ptr<Universe const> universe_of(PermGroup const &g);

// Handle to one lattice subgroup of a universe.  Cheap to copy and
// compare; all predicate modules traffic in these.
class Subgroup {
public:
  Subgroup() = default;
  Subgroup(std::shared_ptr<Universe const> u, std::size_t id)
      : u_(std::move(u)), id_(id) {}

  static Subgroup full(std::shared_ptr<Universe const> const &u);
  static Subgroup trivial(std::shared_ptr<Universe const> const &u);
  static Subgroup from_set(std::shared_ptr<Universe const> const &u,
                           ElemSet const &closed_set);
  static Subgroup generated_by(std::shared_ptr<Universe const> const &u,
                               std::vector<Permutation> const &gens);

  Universe const &universe() const { return *u_; }
  std::shared_ptr<Universe const> const &universe_ptr() const { return u_; }
  std::size_t id() const { return id_; }

  ElemSet const &set() const { return u_->subgroup_rec(id_).set; }
  std::uint64_t order() const { return u_->subgroup_rec(id_).order; }
  bool is_trivial() const { return order() == 1; }
  bool is_full() const { return id_ == u_->full_id(); }

  std::vector<std::uint32_t> const &gen_elems() const {
    return u_->subgroup_rec(id_).gens;
  }
  std::vector<Permutation> generator_perms() const;
  std::string gens_literal() const; // "(0 1 2); (3 4)" for witnesses

  bool contains(Subgroup const &other) const {
    return u_->id_contains(id_, other.id());
  }

  PermGroup to_group() const;

  bool operator==(Subgroup const &o) const {
    return u_.get() == o.u_.get() && id_ == o.id_;
  }
  bool operator!=(Subgroup const &o) const { return !(*this == o); }

private:
  std::shared_ptr<Universe const> u_;
  std::size_t id_ = 0;
};

} // namespace sigma

#endif

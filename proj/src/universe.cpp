#include "sigma/universe.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "sigma/arith.hpp"
#include "sigma/errors.hpp"

namespace sigma {

Universe::Universe(PermGroup group) : group_(std::move(group)) {
  build_tables();
}

std::shared_ptr<Universe const> Universe::make(PermGroup const &group) {
  if (group.order() > group.limits().universe_cap)
    throw ResourceError("group order " + std::to_string(group.order()) +
                        " exceeds universe cap " +
                        std::to_string(group.limits().universe_cap));
  return std::shared_ptr<Universe const>(new Universe(group));
}

std::shared_ptr<Universe const> universe_of(PermGroup const &g) {
  // One universe per distinct group value.  The registry holds weak
  // references only, keyed by the group's shared state.
  static std::mutex mutex;
  static std::map<void const *, std::weak_ptr<Universe const>> registry;

  void const *key = g.identity_key();
  std::lock_guard<std::mutex> lock(mutex);
  auto it = registry.find(key);
  if (it != registry.end()) {
    if (auto u = it->second.lock())
      return u;
  }
  auto u = Universe::make(g);
  registry[key] = u;
  return u;
}

void Universe::build_tables() {
  elements_ = group_.elements(); // sorted, identity first
  std::size_t n = elements_.size();
  index_.reserve(n * 2);
  for (std::uint32_t i = 0; i < n; ++i)
    index_.emplace(elements_[i], i);

  table_.assign(n * n, 0);
#pragma omp parallel for schedule(static)
  for (long long a = 0; a < static_cast<long long>(n); ++a) {
    for (std::size_t b = 0; b < n; ++b)
      table_[static_cast<std::size_t>(a) * n + b] =
          index_.at(elements_[static_cast<std::size_t>(a)] * elements_[b]);
  }

  inv_.resize(n);
  elem_order_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    inv_[i] = index_.at(elements_[i].inverse());
    elem_order_[i] = elements_[i].order();
  }

  for (auto const &g : group_.generators()) {
    std::uint32_t gi = index_.at(g);
    if (gi != 0 &&
        std::find(gen_idx_.begin(), gen_idx_.end(), gi) == gen_idx_.end())
      gen_idx_.push_back(gi);
  }
}

std::uint32_t Universe::index_of(Permutation const &p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw DomainError("permutation is not an element of the ambient group");
  return it->second;
}

ElemSet Universe::conjugate_set(ElemSet const &s, std::uint32_t x) const {
  ElemSet out(size());
  std::uint32_t xi = inv_[x];
  s.for_each([&](std::uint32_t a) { out.set(mul(mul(xi, a), x)); });
  return out;
}

ElemSet Universe::closure_from(ElemSet start,
                               std::vector<std::uint32_t> const &gens) const {
  std::vector<std::uint32_t> queue = start.members();
  if (!start.test(0)) {
    start.set(0);
    queue.push_back(0);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto g : gens) {
      std::uint32_t t = mul(queue[head], g);
      if (!start.test(t)) {
        start.set(t);
        queue.push_back(t);
      }
    }
  }
  return start;
}

ElemSet Universe::closure(ElemSet const &seed) const {
  return closure_from(seed, seed.members());
}

// --- lattice -------------------------------------------------------------

void Universe::ensure_lattice() const {
  std::call_once(lattice_once_, [this] { build_lattice(); });
}

namespace {

// smallest generating list for a known subgroup, chosen greedily over
// ascending element indices (deterministic)
std::vector<std::uint32_t> greedy_gens(Universe const &u, ElemSet const &set) {
  std::vector<std::uint32_t> gens;
  if (set.count() == 1)
    return gens;
  ElemSet have(set.universe_size());
  have.set(0);
  for (auto e : set.members()) {
    if (have.test(e))
      continue;
    gens.push_back(e);
    have = u.closure_from(std::move(have), gens);
    if (have == set)
      break;
  }
  return gens;
}

} // namespace

void Universe::build_lattice() const {
  std::size_t n = size();
  auto const &lim = group_.limits();

  ElemSet trivial(n);
  trivial.set(0);

  // seeds: one cyclic subgroup for every element of prime-power order
  std::vector<ElemSet> seeds;
  std::unordered_map<ElemSet, std::uint32_t, ElemSetHash> seen;
  seen.emplace(trivial, 0);
  for (std::uint32_t x = 1; x < n; ++x) {
    auto f = factorize(elem_order_[x]);
    if (f.size() != 1)
      continue;
    ElemSet cyc(n);
    std::uint32_t e = 0;
    do {
      cyc.set(e);
      e = mul(e, x);
    } while (e != 0);
    if (seen.emplace(cyc, static_cast<std::uint32_t>(seen.size())).second)
      seeds.push_back(std::move(cyc));
  }

  std::vector<ElemSet> found;
  found.push_back(trivial);
  for (auto const &s : seeds)
    found.push_back(s);

  std::vector<std::vector<std::uint32_t>> gens_of;
  gens_of.reserve(found.size());
  for (auto const &s : found)
    gens_of.push_back(greedy_gens(*this, s));

  // cyclic extension: join everything reachable with the seeds
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (std::size_t si = 0; si < seeds.size(); ++si) {
      if (seeds[si].is_subset_of(found[head]))
        continue;
      std::vector<std::uint32_t> jg = gens_of[head];
      for (auto e : greedy_gens(*this, seeds[si]))
        jg.push_back(e);
      ElemSet join = closure_from(found[head] | seeds[si], jg);
      if (seen.emplace(join, static_cast<std::uint32_t>(seen.size())).second) {
        if (found.size() >= lim.subgroup_cap)
          throw ResourceError("subgroup count exceeds cap " +
                              std::to_string(lim.subgroup_cap));
        gens_of.push_back(greedy_gens(*this, join));
        found.push_back(std::move(join));
      }
    }
  }

  // canonical ordering: order ascending, then element-set lex
  std::vector<std::size_t> perm(found.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    perm[i] = i;
  std::vector<std::uint64_t> orders(found.size());
  for (std::size_t i = 0; i < found.size(); ++i)
    orders[i] = found[i].count();
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (orders[a] != orders[b])
      return orders[a] < orders[b];
    return found[a].lex_less(found[b]);
  });

  subs_.resize(found.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    SubgroupRec rec;
    rec.set = std::move(found[perm[k]]);
    rec.order = orders[perm[k]];
    rec.gens = std::move(gens_of[perm[k]]);
    rec.class_id = 0;
    rec.normal = false;
    subs_[k] = std::move(rec);
  }
  sub_index_.clear();
  for (std::uint32_t k = 0; k < subs_.size(); ++k)
    sub_index_.emplace(subs_[k].set, k);
  trivial_id_ = 0;
  full_id_ = subs_.size() - 1;

  // containment matrix, both directions
  std::size_t m = subs_.size();
  below_.assign(m, ElemSet(m));
  above_.assign(m, ElemSet(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (subs_[j].order > subs_[i].order)
        continue;
      if (subs_[j].set.is_subset_of(subs_[i].set)) {
        below_[i].set(j);
        above_[j].set(i);
      }
    }

  // conjugation action of the ambient generators on subgroup ids
  gen_conj_elem_.clear();
  for (auto g : gen_idx_) {
    std::vector<std::uint32_t> cmap(n);
    std::uint32_t gi = inv_[g];
    for (std::uint32_t x = 0; x < n; ++x)
      cmap[x] = mul(mul(gi, x), g);
    gen_conj_elem_.push_back(std::move(cmap));
  }
  std::vector<std::vector<std::uint32_t>> conj_id(gen_idx_.size());
  for (std::size_t gi = 0; gi < gen_idx_.size(); ++gi) {
    conj_id[gi].resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      ElemSet img(n);
      subs_[i].set.for_each(
          [&](std::uint32_t x) { img.set(gen_conj_elem_[gi][x]); });
      conj_id[gi][i] = sub_index_.at(img);
    }
  }

  // orbits = conjugacy classes of subgroups
  std::vector<std::uint32_t> class_of(m, UINT32_MAX);
  classes_.clear();
  class_reps_.clear();
  for (std::uint32_t i = 0; i < m; ++i) {
    if (class_of[i] != UINT32_MAX)
      continue;
    std::uint32_t cid = static_cast<std::uint32_t>(classes_.size());
    std::vector<std::uint32_t> orbit{i};
    class_of[i] = cid;
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (std::size_t gi = 0; gi < gen_idx_.size(); ++gi) {
        std::uint32_t img = conj_id[gi][orbit[head]];
        if (class_of[img] == UINT32_MAX) {
          class_of[img] = cid;
          orbit.push_back(img);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    class_reps_.push_back(orbit.front());
    classes_.push_back(std::move(orbit));
  }
  for (std::uint32_t i = 0; i < m; ++i) {
    subs_[i].class_id = class_of[i];
    subs_[i].normal = classes_[class_of[i]].size() == 1;
  }
}

std::size_t Universe::subgroup_count() const {
  ensure_lattice();
  return subs_.size();
}

Universe::SubgroupRec const &Universe::subgroup_rec(std::size_t id) const {
  ensure_lattice();
  return subs_[id];
}

std::size_t Universe::id_of_set(ElemSet const &s) const {
  ensure_lattice();
  auto it = sub_index_.find(s);
  if (it == sub_index_.end())
    throw DomainError("element set is not a subgroup of the ambient group");
  return it->second;
}

std::size_t Universe::full_id() const {
  ensure_lattice();
  return full_id_;
}

std::size_t Universe::trivial_id() const {
  ensure_lattice();
  return trivial_id_;
}

std::vector<std::uint32_t> Universe::subgroups_below(std::size_t outer) const {
  ensure_lattice();
  return below_[outer].members();
}

std::vector<std::uint32_t> Universe::subgroups_above(std::size_t inner) const {
  ensure_lattice();
  return above_[inner].members();
}

std::vector<std::uint32_t> Universe::subgroups_between(std::size_t inner,
                                                       std::size_t outer) const {
  ensure_lattice();
  return (below_[outer] & above_[inner]).members();
}

bool Universe::id_contains(std::size_t outer, std::size_t inner) const {
  ensure_lattice();
  return below_[outer].test(inner);
}

std::vector<std::uint32_t> const &
Universe::class_members(std::uint32_t class_id) const {
  ensure_lattice();
  return classes_[class_id];
}

std::vector<std::uint32_t> const &Universe::class_rep_ids() const {
  ensure_lattice();
  return class_reps_;
}

std::size_t Universe::conjugate_subgroup(std::size_t id,
                                         std::uint32_t x) const {
  ensure_lattice();
  return sub_index_.at(conjugate_set(subs_[id].set, x));
}

// --- Subgroup ------------------------------------------------------------

Subgroup Subgroup::full(std::shared_ptr<Universe const> const &u) {
  return Subgroup(u, u->full_id());
}

Subgroup Subgroup::trivial(std::shared_ptr<Universe const> const &u) {
  return Subgroup(u, u->trivial_id());
}

Subgroup Subgroup::from_set(std::shared_ptr<Universe const> const &u,
                            ElemSet const &closed_set) {
  return Subgroup(u, u->id_of_set(closed_set));
}

Subgroup Subgroup::generated_by(std::shared_ptr<Universe const> const &u,
                                std::vector<Permutation> const &gens) {
  ElemSet seed(u->size());
  seed.set(0);
  for (auto const &g : gens)
    seed.set(u->index_of(g));
  return from_set(u, u->closure(seed));
}

std::vector<Permutation> Subgroup::generator_perms() const {
  std::vector<Permutation> out;
  for (auto e : gen_elems())
    out.push_back(u_->element(e));
  if (out.empty())
    out.push_back(Permutation(u_->degree())); // trivial subgroup
  return out;
}

std::string Subgroup::gens_literal() const {
  std::ostringstream s;
  auto gens = generator_perms();
  if (gens.empty())
    return "()"; // trivial subgroup: the identity generates it
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i)
      s << "; ";
    s << gens[i].to_cycles();
  }
  return s.str();
}

PermGroup Subgroup::to_group() const {
  return PermGroup(u_->degree(), generator_perms(), u_->group().limits());
}

} // namespace sigma

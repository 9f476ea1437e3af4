#include "sigma/perm_group.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

#include "sigma/errors.hpp"

namespace sigma {

// --- StabilizerChain ---------------------------------------------------

StabilizerChain StabilizerChain::build(unsigned degree,
                                       std::vector<Permutation> const &gens) {
  StabilizerChain chain;
  chain.degree_ = degree;
  for (auto const &g : gens) {
    if (g.degree() != degree)
      throw DomainError("generator degree mismatch");
    if (!g.is_identity())
      chain.add_strong_generator(g);
  }
  chain.complete();
  return chain;
}

// Every strong generator is stored at each level whose earlier base points
// it fixes, so level k's generators always generate the full stabilizer
// candidate at that depth.  Returns the deepest level that received g.
std::size_t StabilizerChain::add_strong_generator(Permutation const &g) {
  std::size_t d = 0;
  while (d < levels_.size() &&
         g[levels_[d].base_point] == levels_[d].base_point)
    ++d;
  if (d == levels_.size()) {
    Level lv;
    unsigned b = 0;
    while (g[b] == b)
      ++b;
    lv.base_point = b;
    levels_.push_back(std::move(lv));
  }
  for (std::size_t l = 0; l <= d; ++l)
    levels_[l].gens.push_back(g);
  for (std::size_t l = 0; l <= d; ++l)
    rebuild_orbit(l);
  return d;
}

void StabilizerChain::rebuild_orbit(std::size_t level) {
  Level &lv = levels_[level];
  lv.orbit_pos.assign(degree_, -1);
  lv.transversal.clear();
  lv.transversal.push_back(Permutation(degree_));
  lv.orbit_pos[lv.base_point] = 0;
  std::vector<unsigned> queue{lv.base_point};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    unsigned q = queue[head];
    for (auto const &s : lv.gens) {
      unsigned img = s[q];
      if (lv.orbit_pos[img] < 0) {
        lv.orbit_pos[img] = static_cast<int>(lv.transversal.size());
        lv.transversal.push_back(lv.transversal[lv.orbit_pos[q]] * s);
        queue.push_back(img);
      }
    }
  }
}

// Bottom-up verification: level i is clean once every Schreier generator
// of its orbit sifts to the identity through the levels below it.  A
// surviving residue becomes a new strong generator and the pointer jumps
// down to the deepest level it touched.  levels_ may reallocate inside the
// loop, so it is re-indexed on every access.
void StabilizerChain::complete() {
  if (levels_.empty())
    return;
  std::size_t i = levels_.size() - 1;
  for (;;) {
    bool clean = true;
    for (std::size_t pos = 0;
         clean && pos < levels_[i].transversal.size(); ++pos)
      for (std::size_t gi = 0; clean && gi < levels_[i].gens.size(); ++gi) {
        Permutation w = levels_[i].transversal[pos] * levels_[i].gens[gi];
        int img_pos = levels_[i].orbit_pos[w[levels_[i].base_point]];
        w = w * levels_[i].transversal[img_pos].inverse();
        std::size_t j = i + 1;
        while (j < levels_.size() && !w.is_identity()) {
          int p = levels_[j].orbit_pos[w[levels_[j].base_point]];
          if (p < 0)
            break;
          w = w * levels_[j].transversal[p].inverse();
          ++j;
        }
        if (!w.is_identity()) {
          // residue fixes the bases of levels 0..i, so it lands below i
          i = add_strong_generator(w);
          clean = false;
        }
      }
    if (clean) {
      if (i == 0)
        return;
      --i;
    }
  }
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t n = 1;
  for (auto const &lv : levels_)
    n *= lv.transversal.size();
  return n;
}

bool StabilizerChain::contains(Permutation const &p) const {
  if (p.degree() != degree_)
    return false;
  Permutation r = p;
  for (auto const &lv : levels_) {
    if (r.is_identity())
      return true;
    int pos = lv.orbit_pos[r[lv.base_point]];
    if (pos < 0)
      return false;
    r = r * lv.transversal[pos].inverse();
  }
  return r.is_identity();
}

// --- PermGroup ----------------------------------------------------------

struct PermGroup::Data {
  unsigned degree;
  std::vector<Permutation> gens;
  StabilizerChain chain;
  std::uint64_t order;
  Limits limits;

  mutable std::once_flag elems_once;
  mutable std::vector<Permutation> elems;
};

PermGroup::PermGroup(unsigned degree, std::vector<Permutation> gens,
                     Limits const &limits) {
  auto d = std::make_shared<Data>();
  d->degree = degree;
  for (auto const &g : gens)
    if (g.degree() != degree)
      throw DomainError("generator degree mismatch");
  d->gens = std::move(gens);
  d->chain = StabilizerChain::build(degree, d->gens);
  d->order = d->chain.order();
  d->limits = limits;
  if (d->order > limits.element_cap)
    throw ResourceError("group order " + std::to_string(d->order) +
                        " exceeds element cap " +
                        std::to_string(limits.element_cap));
  data_ = std::move(d);
}

PermGroup PermGroup::trivial(unsigned degree, Limits const &limits) {
  return PermGroup(degree, {}, limits);
}

unsigned PermGroup::degree() const { return data_->degree; }
std::uint64_t PermGroup::order() const { return data_->order; }

std::vector<Permutation> const &PermGroup::generators() const {
  return data_->gens;
}

bool PermGroup::contains(Permutation const &p) const {
  if (p.degree() != data_->degree)
    return false;
  return data_->chain.contains(p);
}

Limits const &PermGroup::limits() const { return data_->limits; }

std::vector<Permutation> const &PermGroup::elements() const {
  std::call_once(data_->elems_once, [this] {
    // Plain closure; the chain already certified the order, which we
    // re-check here as a cheap internal consistency guard.
    std::unordered_set<Permutation, PermHash> seen;
    std::vector<Permutation> queue;
    Permutation id(data_->degree);
    seen.insert(id);
    queue.push_back(id);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (auto const &g : data_->gens) {
        Permutation next = queue[head] * g;
        if (seen.insert(next).second)
          queue.push_back(next);
      }
    }
    if (queue.size() != data_->order)
      throw Error("internal: closure size disagrees with chain order");
    std::sort(queue.begin(), queue.end());
    data_->elems = std::move(queue);
  });
  return data_->elems;
}

bool PermGroup::is_subgroup_of(PermGroup const &other) const {
  if (degree() != other.degree())
    return false;
  for (auto const &g : generators())
    if (!other.contains(g))
      return false;
  return true;
}

} // namespace sigma

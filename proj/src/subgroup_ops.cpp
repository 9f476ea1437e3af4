#include "sigma/subgroup_ops.hpp"

#include <algorithm>

#include "sigma/arith.hpp"
#include "sigma/errors.hpp"

namespace sigma {

namespace {

void require_same_universe(Subgroup const &a, Subgroup const &b) {
  if (&a.universe() != &b.universe())
    throw DomainError("subgroups live in different universes");
}

void require_contains(Subgroup const &ambient, Subgroup const &a) {
  require_same_universe(ambient, a);
  if (!ambient.contains(a))
    throw DomainError("subgroup is not contained in the ambient group");
}

// orbit of a subgroup id under conjugation by elements of `conjugators`,
// via its generating elements; sorted ascending
std::vector<std::uint32_t> conjugate_orbit_ids(Universe const &u,
                                               std::size_t id,
                                               Subgroup const &conjugators) {
  std::vector<std::uint32_t> orbit{static_cast<std::uint32_t>(id)};
  std::vector<bool> in_orbit(u.subgroup_count(), false);
  in_orbit[id] = true;
  auto const &gens = conjugators.gen_elems();
  for (std::size_t head = 0; head < orbit.size(); ++head)
    for (auto g : gens) {
      auto img = static_cast<std::uint32_t>(u.conjugate_subgroup(orbit[head], g));
      if (!in_orbit[img]) {
        in_orbit[img] = true;
        orbit.push_back(img);
      }
    }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

} // namespace

bool is_normal_in(Subgroup const &a, Subgroup const &ambient) {
  require_contains(ambient, a);
  Universe const &u = a.universe();
  if (ambient.is_full())
    return u.subgroup_rec(a.id()).normal;

  auto key = Universe::pair_key(a.id(), ambient.id());
  auto &caches = u.caches();
  {
    std::lock_guard<std::mutex> lock(caches.mutex);
    auto it = caches.normal_in.find(key);
    if (it != caches.normal_in.end())
      return it->second;
  }
  bool normal = true;
  for (auto g : ambient.gen_elems())
    if (u.conjugate_subgroup(a.id(), g) != a.id()) {
      normal = false;
      break;
    }
  std::lock_guard<std::mutex> lock(caches.mutex);
  caches.normal_in.emplace(key, normal);
  return normal;
}

Subgroup intersection(Subgroup const &a, Subgroup const &b) {
  require_same_universe(a, b);
  return Subgroup::from_set(a.universe_ptr(), a.set() & b.set());
}

Subgroup join(Subgroup const &a, Subgroup const &b) {
  require_same_universe(a, b);
  Universe const &u = a.universe();
  std::vector<std::uint32_t> gens = a.gen_elems();
  for (auto g : b.gen_elems())
    gens.push_back(g);
  return Subgroup::from_set(a.universe_ptr(),
                            u.closure_from(a.set() | b.set(), gens));
}

Subgroup conjugate(Subgroup const &a, std::uint32_t x) {
  return Subgroup(a.universe_ptr(), a.universe().conjugate_subgroup(a.id(), x));
}

Subgroup conjugate(Subgroup const &a, Permutation const &x) {
  return conjugate(a, a.universe().index_of(x));
}

Subgroup normalizer(Subgroup const &ambient, Subgroup const &a) {
  require_contains(ambient, a);
  Universe const &u = a.universe();
  auto key = Universe::pair_key(a.id(), ambient.id());
  auto &caches = u.caches();
  {
    std::lock_guard<std::mutex> lock(caches.mutex);
    auto it = caches.normalizer.find(key);
    if (it != caches.normalizer.end())
      return Subgroup(a.universe_ptr(), it->second);
  }
  ElemSet result(u.size());
  auto const &agens = a.gen_elems();
  auto const &aset = a.set();
  ambient.set().for_each([&](std::uint32_t x) {
    std::uint32_t xi = u.inv(x);
    for (auto g : agens)
      if (!aset.test(u.mul(u.mul(xi, g), x)))
        return;
    result.set(x);
  });
  auto id = static_cast<std::uint32_t>(u.id_of_set(result));
  std::lock_guard<std::mutex> lock(caches.mutex);
  caches.normalizer.emplace(key, id);
  return Subgroup(a.universe_ptr(), id);
}

Subgroup centralizer(Subgroup const &ambient, Subgroup const &a) {
  require_contains(ambient, a);
  Universe const &u = a.universe();
  ElemSet result(u.size());
  auto const &agens = a.gen_elems();
  ambient.set().for_each([&](std::uint32_t x) {
    for (auto g : agens)
      if (u.mul(x, g) != u.mul(g, x))
        return;
    result.set(x);
  });
  return Subgroup::from_set(a.universe_ptr(), result);
}

Subgroup core(Subgroup const &ambient, Subgroup const &a) {
  require_contains(ambient, a);
  Universe const &u = a.universe();
  auto key = Universe::pair_key(a.id(), ambient.id());
  auto &caches = u.caches();
  {
    std::lock_guard<std::mutex> lock(caches.mutex);
    auto it = caches.core.find(key);
    if (it != caches.core.end())
      return Subgroup(a.universe_ptr(), it->second);
  }
  ElemSet result = a.set();
  for (auto cid : conjugate_orbit_ids(u, a.id(), ambient))
    result &= u.subgroup_rec(cid).set;
  auto id = static_cast<std::uint32_t>(u.id_of_set(result));
  std::lock_guard<std::mutex> lock(caches.mutex);
  caches.core.emplace(key, id);
  return Subgroup(a.universe_ptr(), id);
}

Subgroup normal_closure(Subgroup const &ambient, Subgroup const &a) {
  require_contains(ambient, a);
  Universe const &u = a.universe();
  ElemSet seed(u.size());
  std::vector<std::uint32_t> gens;
  for (auto cid : conjugate_orbit_ids(u, a.id(), ambient)) {
    seed |= u.subgroup_rec(cid).set;
    for (auto g : u.subgroup_rec(cid).gens)
      gens.push_back(g);
  }
  return Subgroup::from_set(a.universe_ptr(), u.closure_from(seed, gens));
}

std::vector<Subgroup> conjugates_under(Subgroup const &a,
                                       Subgroup const &conjugators) {
  require_same_universe(a, conjugators);
  std::vector<Subgroup> out;
  for (auto id : conjugate_orbit_ids(a.universe(), a.id(), conjugators))
    out.emplace_back(a.universe_ptr(), id);
  return out;
}

std::vector<Subgroup> all_subgroups(Subgroup const &ambient) {
  std::vector<Subgroup> out;
  for (auto id : ambient.universe().subgroups_below(ambient.id()))
    out.emplace_back(ambient.universe_ptr(), id);
  return out;
}

std::vector<Subgroup> maximal_subgroups(Subgroup const &ambient) {
  Universe const &u = ambient.universe();
  std::vector<Subgroup> out;
  for (auto id : u.subgroups_below(ambient.id())) {
    if (id == ambient.id())
      continue;
    // maximal iff nothing sits strictly between it and the ambient group
    auto between = u.subgroups_between(id, ambient.id());
    if (between.size() == 2)
      out.emplace_back(ambient.universe_ptr(), id);
  }
  return out;
}

std::vector<Subgroup> normal_subgroups(Subgroup const &ambient) {
  std::vector<Subgroup> out;
  for (auto id : ambient.universe().subgroups_below(ambient.id())) {
    Subgroup s(ambient.universe_ptr(), id);
    if (is_normal_in(s, ambient))
      out.push_back(s);
  }
  return out;
}

std::vector<Subgroup> minimal_normal_subgroups(Subgroup const &ambient) {
  auto normals = normal_subgroups(ambient);
  std::vector<Subgroup> out;
  for (auto const &n : normals) {
    if (n.is_trivial())
      continue;
    bool minimal = true;
    for (auto const &m : normals)
      if (!m.is_trivial() && m != n && n.contains(m)) {
        minimal = false;
        break;
      }
    if (minimal)
      out.push_back(n);
  }
  return out;
}

std::vector<Subgroup> subgroups_between(Subgroup const &inner,
                                        Subgroup const &ambient) {
  require_contains(ambient, inner);
  std::vector<Subgroup> out;
  for (auto id :
       inner.universe().subgroups_between(inner.id(), ambient.id()))
    out.emplace_back(inner.universe_ptr(), id);
  return out;
}

Subgroup frattini(Subgroup const &ambient) {
  auto maxes = maximal_subgroups(ambient);
  if (maxes.empty())
    return ambient; // trivial group
  ElemSet result = maxes.front().set();
  for (std::size_t i = 1; i < maxes.size(); ++i)
    result &= maxes[i].set();
  return Subgroup::from_set(ambient.universe_ptr(), result);
}

std::vector<Subgroup> chief_series(Subgroup const &ambient,
                                   bool prefer_largest) {
  Universe const &u = ambient.universe();
  auto normals = normal_subgroups(ambient);
  std::vector<Subgroup> series{Subgroup::trivial(ambient.universe_ptr())};
  while (series.back() != ambient) {
    Subgroup const &cur = series.back();
    // minimal normal subgroups of ambient/cur = minimal elements of the
    // normal subgroups strictly above cur
    std::vector<Subgroup> above;
    for (auto const &n : normals)
      if (n != cur && n.contains(cur))
        above.push_back(n);
    Subgroup const *best = nullptr;
    for (auto const &m : above) {
      bool minimal = true;
      for (auto const &k : above)
        if (k != m && m.contains(k)) {
          minimal = false;
          break;
        }
      if (!minimal)
        continue;
      if (!best || (prefer_largest ? best->set().lex_less(m.set())
                                   : m.set().lex_less(best->set())))
        best = &m;
    }
    if (!best)
      throw Error("internal: chief series stalled");
    series.push_back(*best);
    (void)u;
  }
  return series;
}

std::vector<std::uint64_t> chief_factor_orders(Subgroup const &ambient,
                                               bool prefer_largest) {
  auto series = chief_series(ambient, prefer_largest);
  std::vector<std::uint64_t> out;
  for (std::size_t i = 1; i < series.size(); ++i)
    out.push_back(series[i].order() / series[i - 1].order());
  return out;
}

bool is_abelian(Subgroup const &g) {
  Universe const &u = g.universe();
  auto const &gens = g.gen_elems();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (u.mul(gens[i], gens[j]) != u.mul(gens[j], gens[i]))
        return false;
  return true;
}

bool is_nilpotent(Subgroup const &g) {
  // Exactly p_part(|G|) elements of p-power order for every p iff each
  // Sylow subgroup is unique, i.e. normal.
  Universe const &u = g.universe();
  std::uint64_t order = g.order();
  for (auto const &[p, e] : factorize(order)) {
    std::uint64_t count = 0;
    g.set().for_each([&](std::uint32_t x) {
      std::uint64_t ox = u.elem_order(x);
      while (ox % p == 0)
        ox /= p;
      if (ox == 1)
        ++count;
    });
    if (count != p_part(order, p))
      return false;
  }
  return true;
}

bool is_subnormal(Subgroup const &h, Subgroup const &ambient) {
  require_contains(ambient, h);
  Subgroup k = ambient;
  for (;;) {
    if (k == h)
      return true;
    Subgroup next = normal_closure(k, h);
    if (next == k)
      return false;
    k = next;
  }
}

// --- quotient ------------------------------------------------------------

Subgroup Quotient::image_of(Subgroup const &s) const {
  if (&s.universe() != parent.get())
    throw DomainError("subgroup lives in a different universe than the quotient");
  if (!parent->id_contains(amb_id, s.id()))
    throw DomainError("subgroup is not contained in the quotient's domain");
  ElemSet img(q_universe->size());
  s.set().for_each([&](std::uint32_t x) {
    img.set(static_cast<std::uint32_t>(elem_image[x]));
  });
  return Subgroup::from_set(q_universe, img);
}

Subgroup Quotient::image_full() const {
  return Subgroup::full(q_universe);
}

Subgroup Quotient::preimage_of(Subgroup const &qs) const {
  if (&qs.universe() != q_universe.get())
    throw DomainError("subgroup does not live in the quotient universe");
  ElemSet pre(parent->size());
  parent->subgroup_rec(amb_id).set.for_each([&](std::uint32_t x) {
    if (qs.set().test(static_cast<std::uint32_t>(elem_image[x])))
      pre.set(x);
  });
  return Subgroup::from_set(parent, pre);
}

std::shared_ptr<Quotient const> quotient(Subgroup const &ambient,
                                         Subgroup const &ker) {
  if (!is_normal_in(ker, ambient))
    throw DomainError("quotient kernel is not normal in the ambient group");
  Universe const &u = ambient.universe();
  auto key = Universe::pair_key(ambient.id(), ker.id());
  auto &caches = u.caches();
  {
    std::lock_guard<std::mutex> lock(caches.mutex);
    auto it = caches.quotient.find(key);
    if (it != caches.quotient.end())
      return it->second;
  }

  auto members = ambient.set().members();
  auto kmembers = ker.set().members();

  // canonical representative of the right coset (ker)e: its least element
  std::vector<std::int32_t> rep(u.size(), -1);
  std::vector<std::uint32_t> reps;
  for (auto e : members) {
    if (rep[e] >= 0)
      continue;
    std::uint32_t least = e;
    for (auto k : kmembers)
      least = std::min(least, u.mul(k, e));
    for (auto k : kmembers)
      rep[u.mul(k, e)] = static_cast<std::int32_t>(least);
    reps.push_back(least);
  }
  std::sort(reps.begin(), reps.end());
  std::size_t m = reps.size();
  std::vector<std::int32_t> coset_index(u.size(), -1);
  for (std::size_t i = 0; i < m; ++i)
    coset_index[reps[i]] = static_cast<std::int32_t>(i);

  auto action_of = [&](std::uint32_t e) {
    std::vector<Permutation::Point> img(m);
    for (std::size_t i = 0; i < m; ++i)
      img[i] = static_cast<Permutation::Point>(
          coset_index[rep[u.mul(reps[i], e)]]);
    return Permutation(std::move(img));
  };

  std::vector<Permutation> qgens;
  for (auto g : ambient.gen_elems())
    qgens.push_back(action_of(g));

  PermGroup qgroup(static_cast<unsigned>(m), std::move(qgens),
                   u.group().limits());
  if (qgroup.order() != ambient.order() / ker.order())
    throw Error("internal: quotient order mismatch");
  auto q_universe = universe_of(qgroup);
  std::vector<std::int32_t> elem_image(u.size(), -1);
  for (auto e : members)
    elem_image[e] =
        static_cast<std::int32_t>(q_universe->index_of(action_of(e)));

  auto q = std::make_shared<Quotient>(
      Quotient{std::move(qgroup), ambient.universe_ptr(), ambient.id(),
               ker.id(), std::move(elem_image), std::move(q_universe)});

  std::lock_guard<std::mutex> lock(caches.mutex);
  auto [it, inserted] = caches.quotient.emplace(key, std::move(q));
  return it->second;
}

} // namespace sigma

#include "sigma/hall.hpp"

#include <algorithm>
#include <sstream>

#include "sigma/errors.hpp"

namespace sigma {

std::vector<Subgroup> hall_subgroups(Subgroup const &e, PrimeVec const &primes) {
  Universe const &u = e.universe();
  std::ostringstream key;
  for (auto p : primes)
    key << p << ',';
  key << '#' << e.id();
  auto &caches = u.caches();
  {
    std::lock_guard<std::mutex> lock(caches.mutex);
    auto it = caches.hall_lists.find(key.str());
    if (it != caches.hall_lists.end()) {
      std::vector<Subgroup> out;
      for (auto id : it->second)
        out.emplace_back(e.universe_ptr(), id);
      return out;
    }
  }
  std::uint64_t want = part_for_primes(e.order(), primes);
  std::vector<Subgroup> out;
  std::vector<std::uint32_t> ids;
  for (auto id : u.subgroups_below(e.id()))
    if (u.subgroup_rec(id).order == want) {
      out.emplace_back(e.universe_ptr(), id);
      ids.push_back(id);
    }
  std::lock_guard<std::mutex> lock(caches.mutex);
  caches.hall_lists.emplace(key.str(), std::move(ids));
  return out;
}

std::vector<Subgroup> sylow_subgroups(Subgroup const &e, std::uint64_t p) {
  return hall_subgroups(e, PrimeVec{p});
}

bool is_pi_group(Subgroup const &g, Pi const &pi) {
  return pi.is_pi_number(g.order());
}

std::vector<std::size_t> relevant_blocks(Subgroup const &g, Pi const &pi) {
  return pi.blocks_meeting(g.order());
}

std::vector<std::vector<Subgroup>> hall_lists_per_block(Subgroup const &g,
                                                        Pi const &pi) {
  std::vector<std::vector<Subgroup>> out;
  for (auto b : relevant_blocks(g, pi))
    out.push_back(hall_subgroups(g, pi.sigma().block(b)));
  return out;
}

bool is_pi_full(Subgroup const &g, Pi const &pi) {
  for (auto const &list : hall_lists_per_block(g, pi))
    if (list.empty())
      return false;
  return true;
}

std::vector<CompleteHallSet> complete_hall_sets(Subgroup const &g,
                                                Pi const &pi,
                                                Limits const &limits) {
  auto blocks = relevant_blocks(g, pi);
  auto lists = hall_lists_per_block(g, pi);
  for (auto const &list : lists)
    if (list.empty())
      return {};
  std::size_t count = 1;
  for (auto const &list : lists) {
    count *= list.size();
    if (count > limits.hall_product_cap)
      throw ResourceError("complete Hall set count exceeds cap " +
                          std::to_string(limits.hall_product_cap));
  }
  std::vector<CompleteHallSet> out;
  std::vector<std::size_t> pick(lists.size(), 0);
  for (;;) {
    CompleteHallSet hs;
    hs.block_indices = blocks;
    for (std::size_t i = 0; i < lists.size(); ++i)
      hs.members.push_back(lists[i][pick[i]]);
    out.push_back(std::move(hs));
    std::size_t i = lists.size();
    while (i-- > 0) {
      if (++pick[i] < lists[i].size())
        break;
      pick[i] = 0;
      if (i == 0)
        return out;
    }
    if (lists.empty())
      return out;
  }
}

bool is_d_property(Subgroup const &e, PrimeVec const &primes,
                   DPropertyMode mode) {
  Universe const &u = e.universe();
  // invariant under conjugation, so memo on the conjugacy class
  std::ostringstream key;
  for (auto p : primes)
    key << p << ',';
  key << '#' << (mode == DPropertyMode::ECD ? "ECD" : "EC") << '#'
      << u.subgroup_rec(e.id()).class_id;
  auto &caches = u.caches();
  {
    std::lock_guard<std::mutex> lock(caches.mutex);
    auto it = caches.block_d_property.find(key.str());
    if (it != caches.block_d_property.end())
      return it->second;
  }

  auto verdict = [&]() -> bool {
    auto halls = hall_subgroups(e, primes);
    if (halls.empty())
      return false;
    if (halls.size() > 1) {
      auto orbit = conjugates_under(halls.front(), e);
      if (orbit.size() != halls.size())
        return false;
    }
    if (mode == DPropertyMode::ECD) {
      for (auto id : u.subgroups_below(e.id())) {
        if (!is_pi_number(u.subgroup_rec(id).order, primes))
          continue;
        bool covered = false;
        for (auto const &h : halls)
          if (u.id_contains(h.id(), id)) {
            covered = true;
            break;
          }
        if (!covered)
          return false;
      }
    }
    return true;
  }();

  std::lock_guard<std::mutex> lock(caches.mutex);
  caches.block_d_property.emplace(key.str(), verdict);
  return verdict;
}

bool is_sylow_type(Subgroup const &g, Pi const &pi, DPropertyMode mode) {
  Universe const &u = g.universe();
  for (auto id : u.subgroups_below(g.id())) {
    Subgroup e(g.universe_ptr(), id);
    for (auto b : relevant_blocks(e, pi))
      if (!is_d_property(e, pi.sigma().block(b), mode))
        return false;
  }
  return true;
}

Subgroup o_pi_lower(Subgroup const &g, Pi const &pi) {
  Subgroup result = Subgroup::trivial(g.universe_ptr());
  for (auto id : g.universe().subgroups_below(g.id())) {
    Subgroup s(g.universe_ptr(), id);
    if (pi.is_pi_number(s.order()) && is_normal_in(s, g))
      result = join(result, s);
  }
  return result;
}

Subgroup o_pi_upper(Subgroup const &g, Pi const &pi) {
  Universe const &u = g.universe();
  ElemSet seed(u.size());
  std::vector<std::uint32_t> gens;
  g.set().for_each([&](std::uint32_t x) {
    if (pi.is_pi_prime_number(u.elem_order(x))) {
      seed.set(x);
      gens.push_back(x);
    }
  });
  return Subgroup::from_set(g.universe_ptr(), u.closure_from(seed, gens));
}

bool is_pi_closed(Subgroup const &g, Pi const &pi) {
  return o_pi_lower(g, pi).order() == part_for_primes(g.order(), pi.primes());
}

bool has_normal_hall(Subgroup const &g, PrimeVec const &primes) {
  std::uint64_t want = part_for_primes(g.order(), primes);
  for (auto id : g.universe().subgroups_below(g.id()))
    if (g.universe().subgroup_rec(id).order == want &&
        is_normal_in(Subgroup(g.universe_ptr(), id), g))
      return true;
  return false;
}

} // namespace sigma

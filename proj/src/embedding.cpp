#include "sigma/embedding.hpp"

#include <algorithm>
#include <atomic>

#include "sigma/errors.hpp"

namespace sigma {

namespace detail {

namespace {
std::atomic<Fault> g_fault{Fault::none};
}

Fault active_fault() { return g_fault.load(std::memory_order_relaxed); }
void set_active_fault(Fault f) { g_fault.store(f, std::memory_order_relaxed); }

std::vector<std::pair<std::string, Fault>> const &fault_registry() {
  static std::vector<std::pair<std::string, Fault>> const table{
      {"drop-conjugates", Fault::drop_conjugates},
      {"order-formula-permutes", Fault::permutes_by_order_formula},
      {"sylow-first-prime-only", Fault::s_permutable_first_prime_only},
      {"hall-existence-nilpotent", Fault::sigma_nilpotent_by_hall_existence},
  };
  return table;
}

Fault fault_by_name(std::string const &name) {
  for (auto const &[n, f] : fault_registry())
    if (n == name)
      return f;
  throw DomainError("unknown fault \"" + name + "\"");
}

} // namespace detail

namespace {

void require_same_universe(Subgroup const &a, Subgroup const &b) {
  if (&a.universe() != &b.universe())
    throw DomainError("subgroups live in different universes");
}

} // namespace

ElemSet product_set(Subgroup const &a, Subgroup const &b) {
  require_same_universe(a, b);
  Universe const &u = a.universe();
  ElemSet p(u.size());
  a.set().for_each([&](std::uint32_t x) {
    b.set().for_each([&](std::uint32_t y) { p.set(u.mul(x, y)); });
  });
  return p;
}

bool permutes(Subgroup const &a, Subgroup const &b) {
  require_same_universe(a, b);
  if (a.contains(b) || b.contains(a))
    return true;
  Universe const &u = a.universe();
  auto key = Universe::pair_key(std::min(a.id(), b.id()),
                                std::max(a.id(), b.id()));
  bool const use_cache = detail::active_fault() == detail::Fault::none;
  auto &caches = u.caches();
  if (use_cache) {
    std::lock_guard<std::mutex> lock(caches.mutex);
    auto it = caches.product_closed.find(key);
    if (it != caches.product_closed.end())
      return it->second;
  }

  ElemSet p = product_set(a, b);
  bool result;
  if (detail::active_fault() == detail::Fault::permutes_by_order_formula) {
    result = p.count() * (a.set() & b.set()).count() == a.order() * b.order();
  } else {
    // AB = BA iff AB is inverse-closed, because (AB)^-1 = BA for
    // inverse-closed factors.
    result = true;
    for (auto x : p.members())
      if (!p.test(u.inv(x))) {
        result = false;
        break;
      }
  }

  if (use_cache) {
    std::lock_guard<std::mutex> lock(caches.mutex);
    caches.product_closed.emplace(key, result);
  }
  return result;
}

bool permutes_with_all_conjugates(Subgroup const &h, Subgroup const &v,
                                  Subgroup const &conjugators) {
  require_same_universe(h, v);
  require_same_universe(h, conjugators);
  Universe const &u = h.universe();
  bool const use_cache =
      conjugators.is_full() && detail::active_fault() == detail::Fault::none;
  auto key = Universe::pair_key(h.id(), v.id());
  auto &caches = u.caches();
  if (use_cache) {
    std::lock_guard<std::mutex> lock(caches.mutex);
    auto it = caches.permutes_all_conj.find(key);
    if (it != caches.permutes_all_conj.end())
      return it->second;
  }

  bool result = true;
  for (auto const &c : conjugates_under(v, conjugators))
    if (!permutes(h, c)) {
      result = false;
      break;
    }

  if (use_cache) {
    std::lock_guard<std::mutex> lock(caches.mutex);
    caches.permutes_all_conj.emplace(key, result);
  }
  return result;
}

bool is_set_permutable(Subgroup const &h,
                       std::vector<Subgroup> const &members) {
  for (auto const &m : members)
    if (!permutes(h, m))
      return false;
  return true;
}

std::vector<std::vector<Subgroup>> pi_permutable_blocks(
    Subgroup const &h, Pi const &pi, Subgroup const &conjugators) {
  Subgroup g = Subgroup::full(h.universe_ptr());
  bool const members_only =
      detail::active_fault() == detail::Fault::drop_conjugates;
  std::vector<std::vector<Subgroup>> out;
  for (auto const &list : hall_lists_per_block(g, pi)) {
    std::vector<Subgroup> ok;
    for (auto const &v : list) {
      bool fine = members_only ? permutes(h, v)
                               : permutes_with_all_conjugates(h, v, conjugators);
      if (fine)
        ok.push_back(v);
    }
    out.push_back(std::move(ok));
  }
  return out;
}

bool is_pi_permutable_over(Subgroup const &h, Pi const &pi,
                           Subgroup const &conjugators) {
  for (auto const &ok : pi_permutable_blocks(h, pi, conjugators))
    if (ok.empty())
      return false;
  return true;
}

bool is_pi_permutable(Subgroup const &h, Pi const &pi) {
  return is_pi_permutable_over(h, pi, Subgroup::full(h.universe_ptr()));
}

bool is_pi_permutable_in(Subgroup const &h, Subgroup const &amb, Pi const &pi) {
  if (!amb.contains(h))
    throw DomainError("subgroup lies outside the chosen ambient group");
  bool const members_only =
      detail::active_fault() == detail::Fault::drop_conjugates;
  for (auto const &list : hall_lists_per_block(amb, pi)) {
    bool any = false;
    for (auto const &v : list)
      if (members_only ? permutes(h, v)
                       : permutes_with_all_conjugates(h, v, amb)) {
        any = true;
        break;
      }
    if (!any)
      return false;
  }
  return true;
}

bool is_s_permutable(Subgroup const &h) {
  Subgroup g = Subgroup::full(h.universe_ptr());
  PrimeVec primes = prime_support(g.order());
  if (detail::active_fault() == detail::Fault::s_permutable_first_prime_only &&
      !primes.empty())
    primes.resize(1);
  for (auto p : primes)
    for (auto const &syl : sylow_subgroups(g, p))
      if (!permutes(h, syl))
        return false;
  return true;
}

bool is_s_semipermutable(Subgroup const &h) {
  Subgroup g = Subgroup::full(h.universe_ptr());
  for (auto p : prime_support(g.order())) {
    if (h.order() % p == 0)
      continue;
    for (auto const &syl : sylow_subgroups(g, p))
      if (!permutes(h, syl))
        return false;
  }
  return true;
}

bool is_sigma_primary(Subgroup const &g, SigmaPartition const &sigma) {
  return sigma.is_primary(g.order());
}

bool is_sigma_nilpotent(Subgroup const &g, SigmaPartition const &sigma) {
  Universe const &u = g.universe();
  if (detail::active_fault() ==
      detail::Fault::sigma_nilpotent_by_hall_existence) {
    for (auto b : sigma.sigma_of(g.order()))
      if (hall_subgroups(g, sigma.block(b)).empty())
        return false;
    return true;
  }
  // invariant under conjugation: memo on (partition, class)
  std::string key =
      sigma.to_literal() + '#' +
      std::to_string(u.subgroup_rec(g.id()).class_id);
  auto &caches = u.caches();
  {
    std::lock_guard<std::mutex> lock(caches.mutex);
    auto it = caches.sigma_nilpotent.find(key);
    if (it != caches.sigma_nilpotent.end())
      return it->second != 0;
  }
  bool verdict = true;
  for (auto b : sigma.sigma_of(g.order())) {
    PrimeVec const &block = sigma.block(b);
    std::uint64_t want = part_for_primes(g.order(), block);
    ElemSet members(u.size());
    g.set().for_each([&](std::uint32_t x) {
      if (is_pi_number(u.elem_order(x), block))
        members.set(x);
    });
    // exactly one Hall subgroup per block, necessarily normal: the block
    // elements must number the block part of |g| and close under product
    if (members.count() != want || u.closure(members).count() != want) {
      verdict = false;
      break;
    }
  }
  std::lock_guard<std::mutex> lock(caches.mutex);
  caches.sigma_nilpotent.emplace(key, verdict ? 1 : 0);
  return verdict;
}

bool is_sigma_soluble(Subgroup const &g, SigmaPartition const &sigma) {
  for (auto o : chief_factor_orders(g))
    if (!sigma.is_primary(o))
      return false;
  return true;
}

Subgroup sigma_nilpotent_residual(Subgroup const &g,
                                  SigmaPartition const &sigma) {
  auto &caches = g.universe().caches();
  std::string key = sigma.to_literal() + '#' + std::to_string(g.id());
  bool cacheable = detail::active_fault() == detail::Fault::none;
  if (cacheable) {
    std::lock_guard<std::mutex> lock(caches.mutex);
    auto it = caches.residual.find(key);
    if (it != caches.residual.end())
      return Subgroup(g.universe_ptr(), it->second);
  }
  std::vector<Subgroup> hits;
  for (auto const &n : normal_subgroups(g)) {
    auto q = quotient(g, n);
    if (is_sigma_nilpotent(Subgroup::full(q->q_universe), sigma))
      hits.push_back(n);
  }
  // g/g is trivial, so hits is never empty
  Subgroup best = hits.front();
  for (auto const &n : hits)
    if (n.order() < best.order())
      best = n;
  for (auto const &n : hits)
    if (!n.contains(best))
      throw Error("internal: residual candidates have no least member");
  if (cacheable) {
    std::lock_guard<std::mutex> lock(caches.mutex);
    caches.residual.emplace(key, best.id());
  }
  return best;
}

namespace {

bool ssn_step_ok(Universe const &u, Subgroup const &m, Subgroup const &amb,
                 SigmaPartition const &sigma) {
  if (is_normal_in(m, amb))
    return true;
  Subgroup c = core(amb, m);
  (void)u;
  return sigma.is_primary(amb.order() / c.order());
}

bool ssn_search(Subgroup const &h, Subgroup const &amb,
                SigmaPartition const &sigma, std::string const &literal) {
  if (h == amb)
    return true;
  Universe const &u = h.universe();
  auto key = Universe::pair_key(h.id(), amb.id());
  auto &caches = u.caches();
  {
    std::lock_guard<std::mutex> lock(caches.mutex);
    auto &memo = caches.sigma_subnormal[literal];
    auto it = memo.find(key);
    if (it != memo.end())
      return it->second != 0;
  }
  bool found = false;
  for (auto mid : u.subgroups_between(h.id(), amb.id())) {
    if (mid == amb.id())
      continue;
    Subgroup m(h.universe_ptr(), mid);
    if (ssn_step_ok(u, m, amb, sigma) && ssn_search(h, m, sigma, literal)) {
      found = true;
      break;
    }
  }
  std::lock_guard<std::mutex> lock(caches.mutex);
  caches.sigma_subnormal[literal][key] = found ? 1 : 0;
  return found;
}

} // namespace

bool is_sigma_subnormal(Subgroup const &h, Subgroup const &ambient,
                        SigmaPartition const &sigma) {
  require_same_universe(h, ambient);
  if (!ambient.contains(h))
    throw DomainError("subgroup is not contained in the ambient group");
  return ssn_search(h, ambient, sigma, sigma.to_literal());
}

std::vector<Subgroup> sigma_subnormal_chain(Subgroup const &h,
                                            Subgroup const &ambient,
                                            SigmaPartition const &sigma) {
  if (!is_sigma_subnormal(h, ambient, sigma))
    return {};
  std::string literal = sigma.to_literal();
  std::vector<Subgroup> chain{ambient};
  Subgroup top = ambient;
  while (top != h) {
    Universe const &u = h.universe();
    bool stepped = false;
    for (auto mid : u.subgroups_between(h.id(), top.id())) {
      if (mid == top.id())
        continue;
      Subgroup m(h.universe_ptr(), mid);
      if (ssn_step_ok(u, m, top, sigma) && ssn_search(h, m, sigma, literal)) {
        chain.push_back(m);
        top = m;
        stepped = true;
        break;
      }
    }
    if (!stepped)
      throw Error("internal: subnormal chain reconstruction stalled");
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

bool is_schmidt(Subgroup const &g) {
  if (is_nilpotent(g))
    return false;
  for (auto const &m : maximal_subgroups(g))
    if (!is_nilpotent(m))
      return false;
  return true;
}

bool is_minimal_non_sigma_nilpotent(Subgroup const &g,
                                    SigmaPartition const &sigma) {
  if (is_sigma_nilpotent(g, sigma))
    return false;
  for (auto const &m : maximal_subgroups(g))
    if (!is_sigma_nilpotent(m, sigma))
      return false;
  return true;
}

bool is_pi_decomposable(Subgroup const &g, PrimeVec const &pi) {
  PrimeVec rest = set_difference(prime_support(g.order()), pi);
  return has_normal_hall(g, pi) && has_normal_hall(g, rest);
}

bool is_pi_separable(Subgroup const &g, PrimeVec const &pi) {
  for (auto o : chief_factor_orders(g)) {
    PrimeVec support = prime_support(o);
    if (!subset_of(support, pi) && !disjoint(support, pi))
      return false;
  }
  return true;
}

} // namespace sigma

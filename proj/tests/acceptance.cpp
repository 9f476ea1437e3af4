// Acceptance gate: one pass/fail line per criterion, nonzero exit when
// any criterion fails.  Time bounds are part of the criteria and are
// pinned here, in seconds.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "sigma/arith.hpp"
#include "sigma/corpus.hpp"
#include "sigma/embedding.hpp"
#include "sigma/errors.hpp"
#include "sigma/hall.hpp"
#include "sigma/partition.hpp"
#include "sigma/perm.hpp"
#include "sigma/perm_group.hpp"
#include "sigma/subgroup_ops.hpp"
#include "sigma/universe.hpp"
#include "sigma/verifier.hpp"

using namespace sigma;

namespace {

int failures = 0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int number, bool ok, std::string const &label, double seconds) {
  std::printf("%s  criterion %d: %s  (%.2f s)\n", ok ? "PASS" : "FAIL",
              number, label.c_str(), seconds);
  if (!ok)
    ++failures;
}

Pi all_blocks_of(SigmaPartition const &sg) {
  std::vector<std::size_t> idx(sg.block_count());
  for (std::size_t i = 0; i < idx.size(); ++i)
    idx[i] = i;
  return Pi(sg, idx);
}

// deterministic sampling for criterion 7
struct Lcg {
  std::uint64_t state;
  explicit Lcg(std::uint64_t seed)
      : state(seed ^ 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 11;
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

// --- criterion 1: the order-294 regression instance ---

void criterion_1() {
  auto t0 = Clock::now();
  std::string label = "order-294 witness subgroup";
  bool ok = false;
  try {
    PermGroup g = example_group_294();
    auto u = universe_of(g);
    Subgroup G = Subgroup::full(u);
    SigmaPartition sg = SigmaPartition::parse("2,7|3");
    Pi whole = all_blocks_of(sg);

    auto syl7 = sylow_subgroups(G, 7);
    auto hall37 = hall_subgroups(G, {3, 7});
    bool staged = G.order() == 294 && syl7.size() == 1 &&
                  syl7[0].order() == 49 && hall37.size() == 1;
    if (staged) {
      Subgroup P = syl7[0];
      Subgroup PQ = hall37[0];
      for (auto id : u->subgroups_below(P.id())) {
        Subgroup L(u, id);
        if (L.is_trivial() || L == P || !is_normal_in(L, PQ))
          continue;
        if (is_pi_permutable(L, whole) && !is_s_permutable(L) &&
            !is_normal_in(L, G)) {
          ok = true;
          label += " " + L.gens_literal();
          break;
        }
      }
    }
  } catch (Error const &e) {
    label += std::string("; error: ") + e.what();
  }
  double dt = seconds_since(t0);
  report(1, ok && dt < 30.0, label, dt);
}

// --- criterion 2: the order-42 reference group ---

void criterion_2() {
  auto t0 = Clock::now();
  std::string label = "order-42 third-order subgroups";
  bool ok = true;
  bool saw = false;
  try {
    PermGroup g = example_group_42();
    auto u = universe_of(g);
    Subgroup G = Subgroup::full(u);
    SigmaPartition sg =
        SigmaPartition::two_block({2, 3}, prime_support(G.order()));
    Pi pi_complement = Pi::parse(sg, "7"); // complement of pi = {2, 3}

    ok = G.order() == 42;
    for (auto id : u->class_rep_ids()) {
      Subgroup h(u, id);
      if (h.order() != 3)
        continue;
      saw = true;
      ok = ok && is_pi_permutable(h, pi_complement);
      ok = ok && !is_s_semipermutable(h);
      // the normal closure has a nilpotent Hall {7}-subgroup
      Subgroup hg = normal_closure(G, h);
      bool complemented = false;
      for (auto const &k : hall_subgroups(hg, {7}))
        if (k.order() == part_for_primes(hg.order(), {7}) && is_nilpotent(k))
          complemented = true;
      ok = ok && complemented;
    }
  } catch (Error const &e) {
    ok = false;
    label += std::string("; error: ") + e.what();
  }
  double dt = seconds_since(t0);
  report(2, ok && saw && dt < 5.0, label, dt);
}

// --- criteria 3, 4, 5: suite runs over the built-in corpus ---

bool clean_run(VerifyConfig const &cfg, std::uint64_t floor_override,
               std::string &label) {
  VerifyResult r = run_verify(cfg);
  bool ok = r.exit_code == 0;
  std::uint64_t nonvacuous_min = ~0ull;
  for (auto const &s : r.suites) {
    ok = ok && s.status == SuiteStatus::PASS && s.violations.empty();
    std::uint64_t floor =
        floor_override ? floor_override : s.nonvacuity_floor;
    std::uint64_t nonvacuous = s.instances_tested - s.instances_vacuous;
    ok = ok && nonvacuous >= floor;
    nonvacuous_min = std::min(nonvacuous_min, nonvacuous);
  }
  label += " (min nonvacuous " + std::to_string(nonvacuous_min) + ")";
  return ok;
}

void criterion_3() {
  auto t0 = Clock::now();
  std::string label = "main suites over the default corpus";
  VerifyConfig cfg;
  cfg.suites = {"thm_1_3_i", "thm_1_3_ii", "thm_1_3_iii"};
  bool ok = clean_run(cfg, 10, label);
  double dt = seconds_since(t0);
  report(3, ok && dt <= 600.0, label, dt);
}

void criterion_4() {
  auto t0 = Clock::now();
  std::string label = "permutability corollaries to order 100";
  VerifyConfig cfg;
  cfg.suites = {"cor_1_4", "cor_1_6", "cor_1_8", "cor_1_13"};
  cfg.max_order = 100;
  bool ok = clean_run(cfg, 25, label);
  report(4, ok, label, seconds_since(t0));
}

void criterion_5() {
  auto t0 = Clock::now();
  std::string label = "section-2 suites over the default corpus";
  VerifyConfig cfg;
  cfg.suites = {"lemma_2_1", "lemma_2_2", "lemma_2_3", "lemma_2_4",
                "prop_2_5",  "cor_2_6",   "prop_2_7",  "cor_2_8"};
  bool ok = clean_run(cfg, 0, label); // registry floors apply
  report(5, ok, label, seconds_since(t0));
}

// --- criterion 6: oracle equivalences ---

// direct-product definition: one normal Hall subgroup per relevant block,
// pairwise trivial intersections, orders multiplying out to the whole
bool sigma_nilpotent_oracle(Subgroup const &g, SigmaPartition const &sg) {
  std::vector<Subgroup> parts;
  for (std::size_t b = 0; b < sg.block_count(); ++b) {
    PrimeVec rel;
    for (auto p : sg.block(b))
      if (g.order() % p == 0)
        rel.push_back(p);
    if (rel.empty())
      continue;
    bool have = false;
    for (auto const &h : hall_subgroups(g, rel))
      if (is_normal_in(h, g)) {
        parts.push_back(h);
        have = true;
        break;
      }
    if (!have)
      return false;
  }
  std::uint64_t prod = 1;
  Subgroup acc = Subgroup::trivial(g.universe_ptr());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (!intersection(parts[i], parts[j]).is_trivial())
        return false;
    prod *= parts[i].order();
    acc = join(acc, parts[i]);
  }
  return prod == g.order() && acc == g;
}

// independent subgroup enumeration by closing subsets, one added
// generator at a time; returns each subgroup as a sorted element-index
// vector in the element order of g.elements()
std::set<std::vector<std::uint32_t>> subgroups_by_closure(PermGroup const &g) {
  std::vector<Permutation> const elems = g.elements();
  std::unordered_map<Permutation, std::uint32_t, PermHash> index;
  for (std::uint32_t i = 0; i < elems.size(); ++i)
    index.emplace(elems[i], i);

  auto close = [&](std::vector<std::uint32_t> seed) {
    std::set<std::uint32_t> got(seed.begin(), seed.end());
    got.insert(index.at(Permutation(g.degree())));
    std::vector<std::uint32_t> work(got.begin(), got.end());
    while (!work.empty()) {
      std::uint32_t a = work.back();
      work.pop_back();
      for (auto s : seed) {
        std::uint32_t b = index.at(elems[a] * elems[s]);
        if (got.insert(b).second)
          work.push_back(b);
        std::uint32_t c = index.at(elems[s] * elems[a]);
        if (got.insert(c).second)
          work.push_back(c);
      }
    }
    return std::vector<std::uint32_t>(got.begin(), got.end());
  };

  std::set<std::vector<std::uint32_t>> found;
  std::vector<std::vector<std::uint32_t>> queue;
  auto push = [&](std::vector<std::uint32_t> const &s) {
    if (found.insert(s).second)
      queue.push_back(s);
  };
  push(close({}));
  while (!queue.empty()) {
    std::vector<std::uint32_t> base = queue.back();
    queue.pop_back();
    for (std::uint32_t x = 0; x < elems.size(); ++x) {
      if (std::binary_search(base.begin(), base.end(), x))
        continue;
      std::vector<std::uint32_t> seed = base;
      seed.push_back(x);
      push(close(std::move(seed)));
    }
  }
  return found;
}

void criterion_6() {
  auto t0 = Clock::now();
  bool ok = true;
  std::uint64_t checked = 0;
  std::string label;
  try {
    auto corpus = default_corpus();

    // (a) sigma-nilpotency definitions agree on every group x partition
    for (auto const &e : corpus) {
      auto u = universe_of(e.group);
      Subgroup G = Subgroup::full(u);
      for (auto const &sg :
           all_partitions(prime_support(G.order()), Limits{})) {
        if (sigma_nilpotent_oracle(G, sg) != is_sigma_nilpotent(G, sg)) {
          ok = false;
          label += "; nilpotency split on " + e.name + " " + sg.to_literal();
        }
        ++checked;
      }
    }

    // (b) S-permutability is singleton-partition permutability
    for (auto const &e : corpus) {
      auto u = universe_of(e.group);
      Subgroup G = Subgroup::full(u);
      SigmaPartition sg =
          SigmaPartition::singletons(prime_support(G.order()));
      Pi whole = all_blocks_of(sg);
      for (auto id : u->class_rep_ids()) {
        Subgroup h(u, id);
        if (is_s_permutable(h) != is_pi_permutable(h, whole)) {
          ok = false;
          label += "; permutability split on " + e.name;
        }
        ++checked;
      }
    }

    // (c) Hall subgroups match the order filter over the lattice
    for (auto const &e : corpus) {
      auto u = universe_of(e.group);
      Subgroup G = Subgroup::full(u);
      PrimeVec primes = prime_support(G.order());
      for (std::uint32_t mask = 1; mask < (1u << primes.size()); ++mask) {
        PrimeVec ps;
        for (std::size_t i = 0; i < primes.size(); ++i)
          if (mask & (1u << i))
            ps.push_back(primes[i]);
        std::uint64_t part = part_for_primes(G.order(), ps);
        std::vector<std::uint32_t> brute;
        for (std::uint32_t id = 0; id < u->subgroup_count(); ++id)
          if (u->subgroup_rec(id).order == part)
            brute.push_back(id);
        std::vector<std::uint32_t> lib;
        for (auto const &h : hall_subgroups(G, ps))
          lib.push_back(static_cast<std::uint32_t>(h.id()));
        if (lib != brute) {
          ok = false;
          label += "; hall split on " + e.name;
        }
        ++checked;
      }
    }

    // (d) the lattice equals an independent subset-closure enumeration
    for (auto const &e : corpus) {
      if (e.group.order() > 48)
        continue;
      auto u = universe_of(e.group);
      Subgroup G = Subgroup::full(u);
      std::set<std::vector<std::uint32_t>> independent =
          subgroups_by_closure(e.group);
      std::set<std::vector<std::uint32_t>> lattice;
      for (auto const &s : all_subgroups(G))
        lattice.insert(s.set().members());
      if (independent != lattice) {
        ok = false;
        label += "; lattice split on " + e.name;
      }
      ++checked;
    }
  } catch (Error const &e) {
    ok = false;
    label += std::string("; error: ") + e.what();
  }
  report(6, ok,
         "oracle equivalences over " + std::to_string(checked) +
             " comparisons" + label,
         seconds_since(t0));
}

// --- criterion 7: engine invariants under random sampling ---

void criterion_7() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string label;
  std::uint64_t instances = 0;
  try {
    std::vector<Subgroup> pool;
    std::vector<std::vector<std::uint32_t>> normal_ids;
    for (auto const &e : default_corpus()) {
      if (e.group.order() > 100)
        continue;
      auto u = universe_of(e.group);
      pool.push_back(Subgroup::full(u));
      std::vector<std::uint32_t> normals;
      for (std::uint32_t id = 0; id < u->subgroup_count(); ++id)
        if (u->subgroup_rec(id).normal)
          normals.push_back(id);
      normal_ids.push_back(std::move(normals));
    }

    Lcg rng(20260815);
    auto fail = [&](char const *what, Subgroup const &g) {
      if (ok)
        label += std::string("; first failure: ") + what + " on order " +
                 std::to_string(g.order());
      ok = false;
    };

    while (instances < 500) {
      std::size_t pick = rng.below(pool.size());
      Subgroup G = pool[pick];
      auto u = G.universe_ptr();
      Subgroup H(u, rng.below(u->subgroup_count()));
      Subgroup K(u, rng.below(u->subgroup_count()));

      if (G.order() % H.order() != 0)
        fail("Lagrange", G);

      std::uint64_t hk = product_set(H, K).count();
      if (hk * intersection(H, K).order() != H.order() * K.order())
        fail("product formula", G);

      auto small = chief_factor_orders(G, false);
      auto large = chief_factor_orders(G, true);
      std::sort(small.begin(), small.end());
      std::sort(large.begin(), large.end());
      if (small != large)
        fail("chief factor multiset", G);

      auto const &normals = normal_ids[pick];
      Subgroup N(u, normals[rng.below(normals.size())]);
      auto q = quotient(G, N);
      if (q->q_universe->size() != G.order() / N.order())
        fail("quotient order", G);
      if (q->image_of(H).order() !=
          product_set(H, N).count() / N.order())
        fail("image order", G);

      ++instances;
    }
  } catch (Error const &e) {
    ok = false;
    label += std::string("; error: ") + e.what();
  }
  report(7, ok,
         "engine invariants over " + std::to_string(instances) +
             " sampled instances" + label,
         seconds_since(t0));
}

// --- criterion 8: every seeded fault is detected ---

void criterion_8() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string caught;
  try {
    for (auto const &[name, fault] : detail::fault_registry()) {
      detail::FaultGuard guard(fault);
      VerifyConfig cfg;
      cfg.suites = {"thm_1_3_ii", "cor_1_6", "example_1_2_3"};
      VerifyResult r = run_verify(cfg);
      std::uint64_t found = 0;
      for (auto const &s : r.suites)
        found += s.violations.size();
      if (found == 0 || r.exit_code != 1) {
        ok = false;
        caught += "; undetected fault " + name;
      }
    }
  } catch (Error const &e) {
    ok = false;
    caught += std::string("; error: ") + e.what();
  }
  report(8, ok, "fault injection detected by the suites" + caught,
         seconds_since(t0));
}

} // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (failures)
    std::printf("acceptance: %d criterion(s) failed\n", failures);
  else
    std::printf("acceptance: all criteria passed\n");
  return failures ? 1 : 0;
}

#include "sigma/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"

#include "sigma/arith.hpp"
#include "sigma/embedding.hpp"
#include "sigma/errors.hpp"
#include "sigma/partition.hpp"
#include "sigma/perm.hpp"
#include "sigma/subgroup_ops.hpp"
#include "sigma/universe.hpp"

namespace sigma {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::uint64_t fnv1a(std::string const &s) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

// Splitmix-style generator: cheap, seedable, and stable across platforms,
// which keeps the equivariance sampling reproducible.
struct Lcg {
  std::uint64_t state;
  explicit Lcg(std::uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 11;
  }
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

bool proper(Subgroup const &h) { return !h.is_trivial() && !h.is_full(); }

// Generators joined with ", " so the string can sit inside an aux list,
// whose entries are ";"-separated.
std::string gens_commas(Subgroup const &s) {
  auto gens = s.generator_perms();
  if (gens.empty())
    return "()";
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i)
      out += ", ";
    out += gens[i].to_cycles();
  }
  return out;
}

struct AuxBuilder {
  std::string text;
  AuxBuilder &add(char const *name, Subgroup const &s) {
    if (!text.empty())
      text += "; ";
    text += name;
    text += '=';
    text += gens_commas(s);
    return *this;
  }
  AuxBuilder &add(std::string const &name, Subgroup const &s) {
    return add(name.c_str(), s);
  }
};

// --- per-group shared context ------------------------------------------

struct GroupCtx {
  CorpusEntry const *entry = nullptr;
  std::shared_ptr<Universe const> u;
  Subgroup G;
  PrimeVec primes;
  std::vector<SigmaPartition> sigmas; // empty when capped
  std::vector<Subgroup> reps;         // conjugacy class representatives
  bool capped = false;                // |pi(G)| over the partition cap
};

GroupCtx build_group_ctx(CorpusEntry const &entry, Limits const &limits) {
  GroupCtx ctx;
  ctx.entry = &entry;
  ctx.u = universe_of(entry.group);
  ctx.G = Subgroup::full(ctx.u);
  ctx.primes = prime_support(ctx.G.order());
  ctx.capped =
      ctx.primes.size() > static_cast<std::size_t>(limits.partition_primes_cap);
  if (!ctx.capped)
    ctx.sigmas = all_partitions(ctx.primes, limits);
  for (auto id : ctx.u->class_rep_ids())
    ctx.reps.emplace_back(ctx.u, id);
  return ctx;
}

// --- instance plumbing ---------------------------------------------------

struct InstanceArgs {
  std::string sigma;
  std::string pi;
  std::string subgroup;
  std::string aux;

  bool operator==(InstanceArgs const &o) const {
    return sigma == o.sigma && pi == o.pi && subgroup == o.subgroup &&
           aux == o.aux;
  }
};

struct EvalOutcome {
  bool nontrivial = true; // counts toward the floor when the hypothesis holds
  bool hypothesis = false;
  bool conclusion = true;
  std::string detail; // set when the conclusion fails
};

using InstanceEval = std::function<EvalOutcome(std::uint32_t)>; // conjugator

struct JobTally {
  std::uint64_t tested = 0;
  std::uint64_t vacuous = 0;
  std::uint64_t skips = 0;
  std::uint64_t equivariance = 0;
  std::vector<Violation> violations;
  std::vector<std::string> notes;
  std::map<std::string, std::uint64_t> counters;
};

struct ReplayFilter {
  InstanceArgs want;
  bool matched = false;
  EvalOutcome outcome;
};

constexpr std::uint64_t kInstanceBudget = 50000;   // per suite and group
constexpr std::size_t kViolationCapPerSuite = 50;  // applied at merge
constexpr std::uint64_t kLemma22OrderBound = 60;   // Hall-set suites
constexpr std::size_t kHallSetSampleCap = 3;       // complete Hall sets used

std::string build_replay(std::string const &suite, std::string const &group,
                         InstanceArgs const &args, DPropertyMode d_mode,
                         bool k_set_conjugates) {
  std::ostringstream s;
  s << "sigmaverify check --group '" << group << "'";
  if (!args.sigma.empty())
    s << " --sigma '" << args.sigma << "'";
  if (!args.pi.empty())
    s << " --pi '" << args.pi << "'";
  if (!args.subgroup.empty())
    s << " --subgroup '" << args.subgroup << "'";
  if (!args.aux.empty())
    s << " --aux '" << args.aux << "'";
  s << " --predicate " << suite;
  if (d_mode == DPropertyMode::EC)
    s << " --d-property EC";
  if (k_set_conjugates)
    s << " --k-set-conjugates";
  return s.str();
}

class SuiteJob {
public:
  SuiteJob(char const *suite, GroupCtx const &ctx, VerifyConfig const &config,
           ReplayFilter *filter)
      : suite_(suite), ctx_(&ctx), config_(&config), filter_(filter),
        rng_(config.seed ^ fnv1a(std::string(suite) + "/" + ctx.entry->name)) {}

  GroupCtx const &ctx() const { return *ctx_; }
  CorpusEntry const &entry() const { return *ctx_->entry; }
  VerifyConfig const &config() const { return *config_; }
  Subgroup const &G() const { return ctx_->G; }
  DPropertyMode d_mode() const { return config_->d_mode; }

  bool done() const { return stopped_ || (filter_ && filter_->matched); }

  // Counts the instance and records a violation when the hypothesis holds
  // but the conclusion fails.  Returns the outcome so callers can bump
  // counters; returns nothing when the instance was filtered or skipped.
  std::optional<EvalOutcome> instance(InstanceArgs const &args,
                                      InstanceEval const &eval) {
    if (done())
      return std::nullopt;
    if (filter_) {
      if (args == filter_->want) {
        filter_->outcome = eval(0);
        filter_->matched = true;
      }
      return std::nullopt;
    }
    if (tally_.tested >= kInstanceBudget) {
      skip("instance budget reached on " + entry().name);
      stopped_ = true;
      return std::nullopt;
    }
    EvalOutcome out = eval(0);
    ++tally_.tested;
    if (!out.hypothesis || !out.nontrivial)
      ++tally_.vacuous;
    if (out.hypothesis && !out.conclusion)
      violation(args, out.detail);
    return out;
  }

  // Reservoir-samples one instance per (suite, group); finish() re-runs it
  // with every subgroup argument conjugated by one random group element
  // and flags any verdict change.
  void equivariance_candidate(InstanceArgs const &args,
                              InstanceEval const &eval) {
    if (filter_)
      return;
    ++candidates_;
    if (rng_.below(candidates_) == 0) {
      sample_args_ = args;
      sample_ = eval;
    }
  }

  // Counts the instance and registers it for the equivariance spot-check.
  std::optional<EvalOutcome> offer(InstanceArgs const &args,
                                   InstanceEval const &eval) {
    auto out = instance(args, eval);
    equivariance_candidate(args, eval);
    return out;
  }

  void finish() {
    if (filter_ || !sample_ || ctx_->u->size() < 2)
      return;
    std::uint32_t x =
        static_cast<std::uint32_t>(1 + rng_.below(ctx_->u->size() - 1));
    EvalOutcome base = sample_(0);
    EvalOutcome moved = sample_(x);
    ++tally_.equivariance;
    if (base.hypothesis != moved.hypothesis ||
        (base.hypothesis && base.conclusion != moved.conclusion))
      violation(sample_args_,
                "equivariance spot-check: verdict changed under conjugation "
                "by element #" +
                    std::to_string(x));
  }

  void note(std::string const &text) {
    if (std::find(tally_.notes.begin(), tally_.notes.end(), text) ==
        tally_.notes.end())
      tally_.notes.push_back(text);
  }

  void counter(std::string const &name, std::uint64_t add) {
    if (!filter_)
      tally_.counters[name] += add;
  }

  void skip(std::string const &why) {
    ++tally_.skips;
    note(why);
  }

  JobTally take() { return std::move(tally_); }

private:
  void violation(InstanceArgs const &args, std::string const &detail) {
    Violation v;
    v.group = entry().provenance;
    v.sigma = args.sigma;
    v.pi = args.pi;
    v.subgroup = args.subgroup;
    v.aux = args.aux;
    v.detail = detail;
    v.replay = build_replay(suite_, entry().provenance, args, config_->d_mode,
                            config_->k_set_conjugates);
    tally_.violations.push_back(std::move(v));
  }

  char const *suite_;
  GroupCtx const *ctx_;
  VerifyConfig const *config_;
  ReplayFilter *filter_;
  Lcg rng_;
  JobTally tally_;
  bool stopped_ = false;
  std::uint64_t candidates_ = 0;
  InstanceArgs sample_args_;
  InstanceEval sample_;
};

// --- shared evaluator pieces ---------------------------------------------

std::vector<Pi> pi_subsets(SigmaPartition const &sg) {
  std::size_t t = sg.block_count();
  std::vector<Pi> out;
  for (unsigned mask = 1; mask < (1u << t); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < t; ++i)
      if (mask >> i & 1u)
        idx.push_back(i);
    out.emplace_back(sg, std::move(idx));
  }
  return out;
}

// True when the suite must stop because the group has too many primes to
// enumerate partitions (or prime subsets) over.
bool partition_capped(SuiteJob &job) {
  if (!job.ctx().capped)
    return false;
  job.skip("partition cap: skipped " + job.entry().name);
  return true;
}

// For every relevant block of pic there is a Hall subgroup of the full
// group that permutes with h (with all its conjugates when requested).
// Equivalently: some complete Hall pic-set is permutable with h.
bool some_hall_set_permutes(Subgroup const &h, Pi const &pic,
                            Subgroup const &G, bool with_conjugates) {
  for (auto const &list : hall_lists_per_block(G, pic)) {
    bool any = false;
    for (auto const &v : list) {
      if (with_conjugates ? permutes_with_all_conjugates(h, v, G)
                          : permutes(h, v)) {
        any = true;
        break;
      }
    }
    if (!any)
      return false;
  }
  return true;
}

std::shared_ptr<Quotient const> closure_over_core(Subgroup const &G,
                                                  Subgroup const &h) {
  return quotient(normal_closure(G, h), core(G, h));
}

// Shared by thm_1_3_ii and cor_1_11, which must agree wherever both apply.
bool closure_over_core_sigma_nilpotent(Subgroup const &G, Subgroup const &h,
                                       SigmaPartition const &sg) {
  auto q = closure_over_core(G, h);
  return is_sigma_nilpotent(Subgroup::full(q->q_universe), sg);
}

std::vector<std::size_t> ids_of(std::vector<Subgroup> const &v) {
  std::vector<std::size_t> out;
  out.reserve(v.size());
  for (auto const &s : v)
    out.push_back(s.id());
  return out;
}

// --- suites: theorem 1.3 -------------------------------------------------

void suite_thm_1_3_i(SuiteJob &job) {
  if (partition_capped(job))
    return;
  auto const &ctx = job.ctx();
  for (auto const &sg : ctx.sigmas) {
    Subgroup D = sigma_nilpotent_residual(ctx.G, sg);
    for (Pi const &pi : pi_subsets(sg)) {
      for (Subgroup const &H : ctx.reps) {
        if (job.done())
          return;
        InstanceArgs args{sg.to_literal(), pi.to_literal(), H.gens_literal(),
                          ""};
        Subgroup G = ctx.G;
        auto eval = [sg, pi, H, D, G](std::uint32_t cx) {
          Subgroup h = cx ? conjugate(H, cx) : H;
          EvalOutcome out;
          out.nontrivial = proper(h);
          out.hypothesis =
              is_pi_group(h, pi) && is_pi_permutable_over(h, pi, D);
          if (!out.hypothesis)
            return out;
          bool ssn = is_sigma_subnormal(h, G, sg);
          bool closure_pi = is_pi_group(normal_closure(G, h), pi);
          out.conclusion = ssn && closure_pi;
          if (!out.conclusion)
            out.detail = !ssn ? "subgroup is not sigma-subnormal"
                              : "normal closure is not a Pi-group";
          return out;
        };
        job.offer(args, eval);
      }
    }
  }
}

void suite_thm_1_3_ii(SuiteJob &job) {
  if (partition_capped(job))
    return;
  auto const &ctx = job.ctx();
  for (auto const &sg : ctx.sigmas) {
    for (Pi const &pi : pi_subsets(sg)) {
      bool const pi_is_all = pi.block_count() == sg.block_count();
      for (Subgroup const &H : ctx.reps) {
        if (job.done())
          return;
        InstanceArgs args{sg.to_literal(), pi.to_literal(), H.gens_literal(),
                          ""};
        Subgroup G = ctx.G;
        bool const kconj = job.config().k_set_conjugates;
        auto eval = [sg, pi, pi_is_all, H, G, kconj](std::uint32_t cx) {
          Subgroup h = cx ? conjugate(H, cx) : H;
          EvalOutcome out;
          out.nontrivial = proper(h);
          if (!is_pi_group(h, pi) || !is_pi_permutable(h, pi))
            return out;
          if (!pi_is_all &&
              !some_hall_set_permutes(h, pi.complement(), G, kconj))
            return out;
          out.hypothesis = true;
          bool qnilp = closure_over_core_sigma_nilpotent(G, h, sg);
          Subgroup n = normalizer(G, h);
          bool nperm = is_pi_permutable(n, pi);
          bool moreover = true;
          if (nperm) {
            auto okh = pi_permutable_blocks(h, pi, G);
            auto okn = pi_permutable_blocks(n, pi, G);
            for (std::size_t i = 0; i < okh.size(); ++i) {
              auto a = ids_of(okh[i]);
              auto b = ids_of(okn[i]);
              if (!std::includes(b.begin(), b.end(), a.begin(), a.end())) {
                moreover = false;
                break;
              }
            }
          }
          out.conclusion = qnilp && nperm && moreover;
          if (!out.conclusion)
            out.detail =
                !qnilp ? "closure over core is not sigma-nilpotent"
                : !nperm
                    ? "normalizer is not Pi-permutable"
                    : "a Hall set permutable with the subgroup is not "
                      "permutable with its normalizer";
          return out;
        };
        auto out = job.instance(args, eval);
        job.equivariance_candidate(args, eval);
        if (out && !pi_is_all && out->hypothesis)
          job.counter("k_clause_nonvacuous", 1);
      }
    }
  }
}

void suite_thm_1_3_iii(SuiteJob &job) {
  if (partition_capped(job))
    return;
  auto const &ctx = job.ctx();
  for (auto const &sg : ctx.sigmas) {
    for (Pi const &pi : pi_subsets(sg)) {
      if (pi.block_count() == sg.block_count())
        continue; // Pi' would be empty and the statement degenerate
      for (Subgroup const &H : ctx.reps) {
        if (job.done())
          return;
        InstanceArgs args{sg.to_literal(), pi.to_literal(), H.gens_literal(),
                          ""};
        Subgroup G = ctx.G;
        DPropertyMode mode = job.d_mode();
        auto eval = [sg, pi, H, G, mode](std::uint32_t cx) {
          Subgroup h = cx ? conjugate(H, cx) : H;
          Pi pic = pi.complement();
          EvalOutcome out;
          out.nontrivial = proper(h);
          out.hypothesis = is_pi_group(h, pi) && is_sylow_type(G, pic, mode) &&
                           is_pi_permutable(h, pic);
          if (!out.hypothesis)
            return out;
          Subgroup hg = normal_closure(G, h);
          bool found = false;
          for (auto const &v : hall_subgroups(hg, pic.primes()))
            if (is_sigma_nilpotent(v, sg)) {
              found = true;
              break;
            }
          out.conclusion = found;
          if (!found)
            out.detail =
                "normal closure has no sigma-nilpotent Hall Pi'-subgroup";
          return out;
        };
        job.offer(args, eval);
      }
    }
  }
}

// --- suites: corollaries of theorem 1.3 ----------------------------------

void suite_cor_1_4(SuiteJob &job) {
  auto const &ctx = job.ctx();
  SigmaPartition singles = SigmaPartition::singletons(ctx.primes);
  Pi all = Pi::all_blocks(singles);
  for (Subgroup const &H : ctx.reps) {
    if (job.done())
      return;
    InstanceArgs args{"", "", H.gens_literal(), ""};
    Subgroup G = ctx.G;
    auto eval = [singles, all, H, G](std::uint32_t cx) {
      Subgroup h = cx ? conjugate(H, cx) : H;
      EvalOutcome out;
      out.nontrivial = proper(h);
      bool sperm = is_s_permutable(h);
      // coherence: the dedicated predicate must agree with the partition
      // machinery specialized to singleton blocks
      if (sperm != is_pi_permutable(h, all)) {
        out.hypothesis = true;
        out.conclusion = false;
        out.detail = "S-permutability disagrees with the singleton-partition "
                     "evaluation";
        return out;
      }
      bool subn = is_subnormal(h, G);
      if (subn != is_sigma_subnormal(h, G, singles)) {
        out.hypothesis = true;
        out.conclusion = false;
        out.detail = "subnormality disagrees with singleton-partition "
                     "sigma-subnormality";
        return out;
      }
      out.hypothesis = sperm;
      if (out.hypothesis) {
        out.conclusion = subn;
        if (!subn)
          out.detail = "S-permutable subgroup is not subnormal";
      }
      return out;
    };
    job.offer(args, eval);
  }
}

// Shared by cor_1_5 and cor_1_7: pi-permutable pi-subgroup that permutes
// with a Sylow p-subgroup for every p outside pi.
void cor_15_17_common(SuiteJob &job, bool normalizer_conclusion) {
  if (partition_capped(job))
    return;
  auto const &ctx = job.ctx();
  SigmaPartition singles = SigmaPartition::singletons(ctx.primes);
  for (Pi const &pisel : pi_subsets(singles)) {
    PrimeVec pset = pisel.primes();
    PrimeVec rest = set_difference(ctx.primes, pset);
    for (Subgroup const &H : ctx.reps) {
      if (job.done())
        return;
      InstanceArgs args{singles.to_literal(), pisel.to_literal(),
                        H.gens_literal(), ""};
      Subgroup G = ctx.G;
      auto eval = [pisel, pset, rest, H, G,
                   normalizer_conclusion](std::uint32_t cx) {
        Subgroup h = cx ? conjugate(H, cx) : H;
        EvalOutcome out;
        out.nontrivial = proper(h);
        bool hyp = subset_of(prime_support(h.order()), pset) &&
                   is_pi_permutable(h, pisel);
        for (auto p : rest) {
          if (!hyp)
            break;
          bool any = false;
          for (auto const &syl : sylow_subgroups(G, p))
            if (permutes(h, syl)) {
              any = true;
              break;
            }
          hyp = any;
        }
        out.hypothesis = hyp;
        if (!hyp)
          return out;
        if (normalizer_conclusion) {
          out.conclusion = is_pi_permutable(normalizer(G, h), pisel);
          if (!out.conclusion)
            out.detail = "normalizer is not pi-permutable";
        } else {
          auto q = quotient(h, core(G, h));
          out.conclusion = is_nilpotent(Subgroup::full(q->q_universe));
          if (!out.conclusion)
            out.detail = "quotient over the core is not nilpotent";
        }
        return out;
      };
      job.offer(args, eval);
    }
  }
}

void suite_cor_1_5(SuiteJob &job) { cor_15_17_common(job, true); }
void suite_cor_1_7(SuiteJob &job) { cor_15_17_common(job, false); }

void suite_cor_1_6(SuiteJob &job) {
  auto const &ctx = job.ctx();
  for (Subgroup const &H : ctx.reps) {
    if (job.done())
      return;
    InstanceArgs args{"", "", H.gens_literal(), ""};
    Subgroup G = ctx.G;
    auto eval = [H, G](std::uint32_t cx) {
      Subgroup h = cx ? conjugate(H, cx) : H;
      EvalOutcome out;
      out.nontrivial = proper(h);
      out.hypothesis = is_s_permutable(h);
      if (!out.hypothesis)
        return out;
      out.conclusion = is_s_permutable(normalizer(G, h));
      if (!out.conclusion)
        out.detail = "normalizer is not S-permutable";
      return out;
    };
    job.offer(args, eval);
  }
}

void suite_cor_1_8(SuiteJob &job) {
  auto const &ctx = job.ctx();
  for (Subgroup const &H : ctx.reps) {
    if (job.done())
      return;
    InstanceArgs args{"", "", H.gens_literal(), ""};
    Subgroup G = ctx.G;
    auto eval = [H, G](std::uint32_t cx) {
      Subgroup h = cx ? conjugate(H, cx) : H;
      EvalOutcome out;
      out.nontrivial = proper(h);
      out.hypothesis = is_s_permutable(h);
      if (!out.hypothesis)
        return out;
      auto q = quotient(h, core(G, h));
      out.conclusion = is_nilpotent(Subgroup::full(q->q_universe));
      if (!out.conclusion)
        out.detail = "quotient over the core is not nilpotent";
      return out;
    };
    job.offer(args, eval);
  }
}

// Shared by cor_1_9 (pi against pi') and cor_1_10 (single prime).
void cor_19_110_common(SuiteJob &job, PrimeVec const &pset,
                       SigmaPartition const &sg2, Pi const &pisel) {
  auto const &ctx = job.ctx();
  PrimeVec psetc = set_difference(ctx.primes, pset);
  for (Subgroup const &H : ctx.reps) {
    if (job.done())
      return;
    InstanceArgs args{sg2.to_literal(), pisel.to_literal(), H.gens_literal(),
                      ""};
    Subgroup G = ctx.G;
    auto eval = [pset, psetc, H, G](std::uint32_t cx) {
      Subgroup h = cx ? conjugate(H, cx) : H;
      EvalOutcome out;
      out.nontrivial = proper(h);
      bool hyp = is_pi_separable(G, pset);
      if (hyp)
        for (auto const &v : hall_subgroups(G, pset))
          if (!permutes(h, v)) {
            hyp = false;
            break;
          }
      if (hyp)
        for (auto const &v : hall_subgroups(G, psetc))
          if (!permutes(h, v)) {
            hyp = false;
            break;
          }
      out.hypothesis = hyp;
      if (!hyp)
        return out;
      auto q = closure_over_core(G, h);
      out.conclusion = is_pi_decomposable(Subgroup::full(q->q_universe), pset);
      if (!out.conclusion)
        out.detail = "closure over core is not pi-decomposable";
      return out;
    };
    job.offer(args, eval);
  }
}

void suite_cor_1_9(SuiteJob &job) {
  if (partition_capped(job))
    return;
  auto const &ctx = job.ctx();
  if (ctx.primes.size() < 2)
    return; // no proper two-block split exists
  // pi and pi' give the same instance, so only keep the side holding the
  // smallest prime
  std::size_t t = ctx.primes.size();
  for (unsigned mask = 1; mask + 1 < (1u << t); ++mask) {
    if (!(mask & 1u))
      continue;
    PrimeVec pset;
    for (std::size_t i = 0; i < t; ++i)
      if (mask >> i & 1u)
        pset.push_back(ctx.primes[i]);
    SigmaPartition sg2 = SigmaPartition::two_block(pset, ctx.primes);
    Pi pisel(sg2, {sg2.block_index_of(pset.front())});
    cor_19_110_common(job, pset, sg2, pisel);
    if (job.done())
      return;
  }
}

void suite_cor_1_10(SuiteJob &job) {
  if (partition_capped(job))
    return;
  auto const &ctx = job.ctx();
  for (auto p : ctx.primes) {
    SigmaPartition sg2 = SigmaPartition::two_block({p}, ctx.primes);
    Pi pisel(sg2, {sg2.block_index_of(p)});
    cor_19_110_common(job, {p}, sg2, pisel);
    if (job.done())
      return;
  }
}

void suite_cor_1_11(SuiteJob &job) {
  if (partition_capped(job))
    return;
  auto const &ctx = job.ctx();
  for (auto const &sg : ctx.sigmas) {
    Pi all = Pi::all_blocks(sg);
    for (Subgroup const &H : ctx.reps) {
      if (job.done())
        return;
      InstanceArgs args{sg.to_literal(), all.to_literal(), H.gens_literal(),
                        ""};
      Subgroup G = ctx.G;
      auto eval = [sg, all, H, G](std::uint32_t cx) {
        Subgroup h = cx ? conjugate(H, cx) : H;
        EvalOutcome out;
        out.nontrivial = proper(h);
        out.hypothesis = is_pi_full(G, all) && is_pi_permutable(h, all);
        if (!out.hypothesis)
          return out;
        out.conclusion = closure_over_core_sigma_nilpotent(G, h, sg);
        if (!out.conclusion)
          out.detail = "closure over core is not sigma-nilpotent";
        return out;
      };
      job.offer(args, eval);
    }
  }
}

// Shared by cor_1_12 and cor_1_13: both conclude that the normal closure
// has a nilpotent pi-complement.
void cor_112_113_common(SuiteJob &job, bool semipermutable_hypothesis) {
  if (partition_capped(job))
    return;
  auto const &ctx = job.ctx();
  SigmaPartition singles = SigmaPartition::singletons(ctx.primes);
  std::size_t t = ctx.primes.size();
  for (unsigned mask = 1; mask < (1u << t); ++mask) {
    std::vector<std::size_t> idx;
    PrimeVec pset;
    for (std::size_t i = 0; i < t; ++i)
      if (mask >> i & 1u) {
        idx.push_back(i);
        pset.push_back(ctx.primes[i]);
      }
    Pi pisel(singles, idx);
    PrimeVec rest = set_difference(ctx.primes, pset);
    std::vector<std::size_t> cidx;
    for (std::size_t i = 0; i < t; ++i)
      if (!(mask >> i & 1u))
        cidx.push_back(i);
    Pi picomp(singles, cidx);
    for (Subgroup const &H : ctx.reps) {
      if (job.done())
        return;
      InstanceArgs args{singles.to_literal(), pisel.to_literal(),
                        H.gens_literal(), ""};
      Subgroup G = ctx.G;
      auto eval = [pset, rest, picomp, H, G,
                   semipermutable_hypothesis](std::uint32_t cx) {
        Subgroup h = cx ? conjugate(H, cx) : H;
        EvalOutcome out;
        out.nontrivial = proper(h);
        bool is_pi_sub = subset_of(prime_support(h.order()), pset);
        bool hyp = is_pi_sub;
        if (hyp && semipermutable_hypothesis)
          hyp = is_s_semipermutable(h);
        if (hyp && !semipermutable_hypothesis)
          for (auto p : rest) {
            for (auto const &syl : sylow_subgroups(G, p))
              if (!permutes(h, syl)) {
                hyp = false;
                break;
              }
            if (!hyp)
              break;
          }
        out.hypothesis = hyp;
        if (!hyp)
          return out;
        Subgroup hg = normal_closure(G, h);
        bool found = false;
        for (auto const &v : hall_subgroups(hg, rest))
          if (is_nilpotent(v)) {
            found = true;
            break;
          }
        out.conclusion = found;
        if (!found)
          out.detail = "normal closure has no nilpotent pi-complement";
        // bridging remark: an S-semipermutable subgroup is pi'-permutable
        // when pi is exactly the prime support of the subgroup
        if (semipermutable_hypothesis && out.conclusion &&
            prime_support(h.order()) == pset &&
            !is_pi_permutable(h, picomp)) {
          out.conclusion = false;
          out.detail = "S-semipermutable subgroup is not pi'-permutable";
        }
        return out;
      };
      job.offer(args, eval);
    }
  }
}

void suite_cor_1_12(SuiteJob &job) { cor_112_113_common(job, false); }
void suite_cor_1_13(SuiteJob &job) { cor_112_113_common(job, true); }

// --- suites: lemma 2.1 ----------------------------------------------------

void suite_lemma_2_1_1(SuiteJob &job) {
  if (partition_capped(job))
    return;
  auto const &ctx = job.ctx();
  for (auto const &sg : ctx.sigmas) {
    for (Subgroup const &A : ctx.reps) {
      if (job.done())
        return;
      bool a_ssn = is_sigma_subnormal(A, ctx.G, sg);
      for (std::size_t kid = 0; kid < ctx.u->subgroup_count(); ++kid) {
        if (job.done())
          return;
        Subgroup K(ctx.u, kid);
        InstanceArgs args{sg.to_literal(), "", A.gens_literal(),
                          AuxBuilder{}.add("K", K).text};
        Subgroup G = ctx.G;
        auto eval = [sg, A, K, G, a_ssn](std::uint32_t cx) {
          Subgroup a = cx ? conjugate(A, cx) : A;
          Subgroup k = cx ? conjugate(K, cx) : K;
          EvalOutcome out;
          out.nontrivial = proper(a);
          out.hypothesis = cx ? is_sigma_subnormal(a, G, sg) : a_ssn;
          if (!out.hypothesis)
            return out;
          out.conclusion = is_sigma_subnormal(intersection(a, k), k, sg);
          if (!out.conclusion)
            out.detail = "intersection is not sigma-subnormal in K";
          return out;
        };
        job.offer(args, eval);
      }
    }
  }
}

void suite_lemma_2_1_2(SuiteJob &job) {
  if (partition_capped(job))
    return;
  auto const &ctx = job.ctx();
  for (auto const &sg : ctx.sigmas) {
    for (Subgroup const &A : ctx.reps) {
      if (job.done())
        return;
      if (!is_sigma_subnormal(A, ctx.G, sg))
        continue; // standing hypothesis; skipped pairs stay out of scope
      for (auto kid : ctx.u->subgroups_below(A.id())) {
        if (job.done())
          return;
        Subgroup K(ctx.u, kid);
        InstanceArgs args{sg.to_literal(), "", K.gens_literal(),
                          AuxBuilder{}.add("A", A).text};
        Subgroup G = ctx.G;
        auto eval = [sg, A, K, G](std::uint32_t cx) {
          Subgroup a = cx ? conjugate(A, cx) : A;
          Subgroup k = cx ? conjugate(K, cx) : K;
          EvalOutcome out;
          out.nontrivial = proper(k);
          out.hypothesis =
              is_sigma_subnormal(a, G, sg) && is_sigma_subnormal(k, a, sg);
          if (!out.hypothesis)
            return out;
          out.conclusion = is_sigma_subnormal(k, G, sg);
          if (!out.conclusion)
            out.detail =
                "subgroup sigma-subnormal in A is not sigma-subnormal in G";
          return out;
        };
        job.offer(args, eval);
      }
    }
  }
}

void suite_lemma_2_1_3(SuiteJob &job) {
  if (partition_capped(job))
    return;
  auto const &ctx = job.ctx();
  for (auto const &sg : ctx.sigmas) {
    for (Subgroup const &A : ctx.reps) {
      if (job.done())
        return;
      if (!is_sigma_subnormal(A, ctx.G, sg))
        continue;
      for (std::size_t kid = 0; kid < ctx.u->subgroup_count(); ++kid) {
        if (job.done())
          return;
        Subgroup K(ctx.u, kid);
        InstanceArgs args{sg.to_literal(), "", A.gens_literal(),
                          AuxBuilder{}.add("K", K).text};
        Subgroup G = ctx.G;
        auto eval = [sg, A, K, G](std::uint32_t cx) {
          Subgroup a = cx ? conjugate(A, cx) : A;
          Subgroup k = cx ? conjugate(K, cx) : K;
          EvalOutcome out;
          out.nontrivial = proper(a);
          out.hypothesis =
              is_sigma_subnormal(a, G, sg) && is_sigma_subnormal(k, G, sg);
          if (!out.hypothesis)
            return out;
          bool meet = is_sigma_subnormal(intersection(a, k), G, sg);
          bool wedge = is_sigma_subnormal(join(a, k), G, sg);
          out.conclusion = meet && wedge;
          if (!out.conclusion)
            out.detail = !meet ? "intersection is not sigma-subnormal"
                               : "join is not sigma-subnormal";
          return out;
        };
        job.offer(args, eval);
      }
    }
  }
}

void suite_lemma_2_1_4(SuiteJob &job) {
  if (partition_capped(job))
    return;
  auto const &ctx = job.ctx();
  auto normals = normal_subgroups(ctx.G);
  for (auto const &sg : ctx.sigmas) {
    for (Subgroup const &A : ctx.reps) {
      if (job.done())
        return;
      if (!is_sigma_subnormal(A, ctx.G, sg))
        continue;
      for (Subgroup const &N : normals) {
        if (job.done())
          return;
        InstanceArgs args{sg.to_literal(), "", A.gens_literal(),
                          AuxBuilder{}.add("N", N).text};
        Subgroup G = ctx.G;
        auto eval = [sg, A, N, G](std::uint32_t cx) {
          Subgroup a = cx ? conjugate(A, cx) : A;
          EvalOutcome out;
          out.nontrivial = proper(a);
          out.hypothesis = is_sigma_subnormal(a, G, sg);
          if (!out.hypothesis)
            return out;
          auto q = quotient(G, N);
          Subgroup qa = q->image_of(a);
          out.conclusion =
              is_sigma_subnormal(qa, Subgroup::full(q->q_universe), sg);
          if (!out.conclusion)
            out.detail = "image is not sigma-subnormal in the quotient";
          return out;
        };
        job.offer(args, eval);
      }
    }
  }
}

void suite_lemma_2_1_5(SuiteJob &job) {
  if (partition_capped(job))
    return;
  auto const &ctx = job.ctx();
  auto normals = normal_subgroups(ctx.G);
  for (auto const &sg : ctx.sigmas) {
    for (Subgroup const &N : normals) {
      if (job.done())
        return;
      for (auto kid : ctx.u->subgroups_above(N.id())) {
        if (job.done())
          return;
        Subgroup K(ctx.u, kid);
        InstanceArgs args{sg.to_literal(), "", K.gens_literal(),
                          AuxBuilder{}.add("N", N).text};
        Subgroup G = ctx.G;
        auto eval = [sg, K, N, G](std::uint32_t cx) {
          Subgroup k = cx ? conjugate(K, cx) : K;
          EvalOutcome out;
          out.nontrivial = proper(k);
          auto q = quotient(G, N);
          out.hypothesis =
              is_sigma_subnormal(q->image_of(k), Subgroup::full(q->q_universe),
                                 sg);
          if (!out.hypothesis)
            return out;
          out.conclusion = is_sigma_subnormal(k, G, sg);
          if (!out.conclusion)
            out.detail = "preimage is not sigma-subnormal";
          return out;
        };
        job.offer(args, eval);
      }
    }
  }
}

void suite_lemma_2_1_6(SuiteJob &job) {
  if (partition_capped(job))
    return;
  auto const &ctx = job.ctx();
  for (auto const &sg : ctx.sigmas) {
    for (Subgroup const &A : ctx.reps) {
      if (job.done())
        return;
      if (!is_sigma_subnormal(A, ctx.G, sg) || !is_sigma_nilpotent(A, sg))
        continue;
      for (auto kid : ctx.u->subgroups_below(A.id())) {
        if (job.done())
          return;
        Subgroup K(ctx.u, kid);
        InstanceArgs args{sg.to_literal(), "", K.gens_literal(),
                          AuxBuilder{}.add("A", A).text};
        Subgroup G = ctx.G;
        auto eval = [sg, A, K, G](std::uint32_t cx) {
          Subgroup a = cx ? conjugate(A, cx) : A;
          Subgroup k = cx ? conjugate(K, cx) : K;
          EvalOutcome out;
          out.nontrivial = proper(k);
          out.hypothesis =
              is_sigma_subnormal(a, G, sg) && is_sigma_nilpotent(a, sg);
          if (!out.hypothesis)
            return out;
          out.conclusion = is_sigma_subnormal(k, G, sg);
          if (!out.conclusion)
            out.detail = "subgroup of a sigma-nilpotent sigma-subnormal "
                         "subgroup is not sigma-subnormal";
          return out;
        };
        job.offer(args, eval);
      }
    }
  }
}

void suite_lemma_2_1_7(SuiteJob &job) {
  if (partition_capped(job))
    return;
  auto const &ctx = job.ctx();
  for (auto const &sg : ctx.sigmas) {
    for (Pi const &pi : pi_subsets(sg)) {
      auto halls = hall_subgroups(ctx.G, pi.primes());
      for (Subgroup const &A : ctx.reps) {
        if (job.done())
          return;
        bool a_ssn = is_sigma_subnormal(A, ctx.G, sg);
        for (Subgroup const &Hh : halls) {
          if (job.done())
            return;
          if (Hh.is_trivial())
            continue; // the statement requires a non-trivial Hall subgroup
          InstanceArgs args{sg.to_literal(), pi.to_literal(), A.gens_literal(),
                            AuxBuilder{}.add("H", Hh).text};
          Subgroup G = ctx.G;
          auto eval = [sg, pi, A, Hh, G, a_ssn](std::uint32_t cx) {
            Subgroup a = cx ? conjugate(A, cx) : A;
            Subgroup hall = cx ? conjugate(Hh, cx) : Hh;
            EvalOutcome out;
            out.nontrivial = proper(a);
            out.hypothesis = (cx ? is_sigma_subnormal(a, G, sg) : a_ssn) &&
                             !is_pi_group(a, pi.complement());
            if (!out.hypothesis)
              return out;
            Subgroup meet = intersection(a, hall);
            bool nontriv = meet.order() > 1;
            bool hall_of_a =
                meet.order() == part_for_primes(a.order(), pi.primes());
            out.conclusion = nontriv && hall_of_a;
            if (!out.conclusion)
              out.detail = !nontriv
                               ? "intersection with the Hall subgroup is "
                                 "trivial"
                               : "intersection is not a Hall Pi-subgroup of "
                                 "the subgroup";
            return out;
          };
          job.offer(args, eval);
        }
      }
    }
  }
}

void suite_lemma_2_1_8(SuiteJob &job) {
  if (partition_capped(job))
    return;
  auto const &ctx = job.ctx();
  for (auto const &sg : ctx.sigmas) {
    for (Pi const &pi : pi_subsets(sg)) {
      for (Subgroup const &A : ctx.reps) {
        if (job.done())
          return;
        InstanceArgs args{sg.to_literal(), pi.to_literal(), A.gens_literal(),
                          ""};
        Subgroup G = ctx.G;
        auto eval = [sg, pi, A, G](std::uint32_t cx) {
          Subgroup a = cx ? conjugate(A, cx) : A;
          EvalOutcome out;
          out.nontrivial = proper(a);
          out.hypothesis = is_sigma_subnormal(a, G, sg) &&
                           pi.is_pi_number(G.order() / a.order());
          if (!out.hypothesis)
            return out;
          out.conclusion = o_pi_upper(a, pi) == o_pi_upper(G, pi);
          if (!out.conclusion)
            out.detail = "O^Pi of the subgroup differs from O^Pi of the group";
          return out;
        };
        job.offer(args, eval);
      }
    }
  }
}

void suite_lemma_2_1_9(SuiteJob &job) {
  if (partition_capped(job))
    return;
  auto const &ctx = job.ctx();
  for (auto const &sg : ctx.sigmas) {
    for (Pi const &pi : pi_subsets(sg)) {
      for (Subgroup const &A : ctx.reps) {
        if (job.done())
          return;
        InstanceArgs args{sg.to_literal(), pi.to_literal(), A.gens_literal(),
                          ""};
        Subgroup G = ctx.G;
        auto eval = [sg, pi, A, G](std::uint32_t cx) {
          Subgroup a = cx ? conjugate(A, cx) : A;
          EvalOutcome out;
          out.nontrivial = proper(a);
          out.hypothesis = is_sigma_subnormal(a, G, sg) &&
                           is_pi_full(G, pi) && is_pi_group(a, pi);
          if (!out.hypothesis)
            return out;
          out.conclusion = o_pi_lower(G, pi).contains(a);
          if (!out.conclusion)
            out.detail = "Pi-group is not inside O_Pi of the group";
          return out;
        };
        job.offer(args, eval);
      }
    }
  }
}

// --- suites: lemma 2.2 ----------------------------------------------------

// All four parts quantify over complete Hall Pi-sets, so they are kept to
// small groups; the sampled Hall sets keep the instance space finite.
bool lemma_2_2_in_scope(SuiteJob &job) {
  if (job.ctx().G.order() > kLemma22OrderBound) {
    job.note("restricted to groups of order <= " +
             std::to_string(kLemma22OrderBound));
    return false;
  }
  return !partition_capped(job);
}

std::vector<CompleteHallSet> sampled_hall_sets(SuiteJob &job,
                                               SigmaPartition const &sg,
                                               Pi const &pi) {
  auto sets = complete_hall_sets(job.ctx().G, pi, job.config().limits);
  if (sets.size() > kHallSetSampleCap) {
    sets.resize(kHallSetSampleCap);
    job.note("complete Hall set sample capped at " +
             std::to_string(kHallSetSampleCap) + " per block selection");
  }
  (void)sg;
  return sets;
}

std::string hall_set_aux(AuxBuilder builder,
                         std::vector<Subgroup> const &members) {
  for (std::size_t i = 0; i < members.size(); ++i)
    builder.add("S" + std::to_string(i + 1), members[i]);
  return builder.text;
}

// h permutes with every member conjugate under k.
bool hk_permutable(Subgroup const &h, std::vector<Subgroup> const &members,
                   Subgroup const &k) {
  for (auto const &m : members)
    if (!permutes_with_all_conjugates(h, m, k))
      return false;
  return true;
}

std::vector<Subgroup> conjugated_all(std::vector<Subgroup> const &v,
                                     std::uint32_t cx) {
  if (!cx)
    return v;
  std::vector<Subgroup> out;
  out.reserve(v.size());
  for (auto const &s : v)
    out.push_back(conjugate(s, cx));
  return out;
}

void suite_lemma_2_2_1(SuiteJob &job) {
  if (!lemma_2_2_in_scope(job))
    return;
  auto const &ctx = job.ctx();
  DPropertyMode mode = job.d_mode();
  for (auto const &sg : ctx.sigmas) {
    for (Pi const &pi : pi_subsets(sg)) {
      // the "in particular" clause: Pi-permutability descends to
      // intermediate groups under a Sylow-type or normality side condition
      for (Subgroup const &H : ctx.reps) {
        if (job.done())
          return;
        for (auto eid : ctx.u->subgroups_above(H.id())) {
          if (job.done())
            return;
          Subgroup E(ctx.u, eid);
          InstanceArgs args{sg.to_literal(), pi.to_literal(), H.gens_literal(),
                            AuxBuilder{}.add("E", E).text};
          Subgroup G = ctx.G;
          auto eval = [sg, pi, H, E, G, mode](std::uint32_t cx) {
            Subgroup h = cx ? conjugate(H, cx) : H;
            Subgroup e = cx ? conjugate(E, cx) : E;
            EvalOutcome out;
            out.nontrivial = proper(h) && proper(e);
            out.hypothesis =
                is_pi_permutable(h, pi) &&
                (is_sylow_type(G, pi, mode) || is_normal_in(e, G));
            if (!out.hypothesis)
              return out;
            out.conclusion = is_pi_permutable_in(h, e, pi);
            if (!out.conclusion)
              out.detail =
                  "subgroup is not Pi-permutable in the intermediate group";
            return out;
          };
          job.offer(args, eval);
        }
      }
      // the general clause, over sampled complete Hall sets and conjugator
      // subgroups
      for (auto const &hs : sampled_hall_sets(job, sg, pi)) {
        for (Subgroup const &K : ctx.reps) {
          for (Subgroup const &H : ctx.reps) {
            if (job.done())
              return;
            if (!hk_permutable(H, hs.members, K))
              continue; // standing hypothesis of the lemma
            for (auto eid : ctx.u->subgroups_above(H.id())) {
              if (job.done())
                return;
              Subgroup E(ctx.u, eid);
              InstanceArgs args{
                  sg.to_literal(), pi.to_literal(), H.gens_literal(),
                  hall_set_aux(AuxBuilder{}.add("K", K).add("E", E),
                               hs.members)};
              Subgroup G = ctx.G;
              auto members = hs.members;
              auto eval = [pi, H, K, E, members](std::uint32_t cx) {
                Subgroup h = cx ? conjugate(H, cx) : H;
                Subgroup k = cx ? conjugate(K, cx) : K;
                Subgroup e = cx ? conjugate(E, cx) : E;
                auto mem = conjugated_all(members, cx);
                EvalOutcome out;
                out.nontrivial = proper(h);
                out.hypothesis = hk_permutable(h, mem, k);
                if (!out.hypothesis)
                  return out;
                Subgroup ke = intersection(k, e);
                bool ok = true;
                for (auto const &m : mem)
                  if (!permutes_with_all_conjugates(h, intersection(m, e),
                                                    ke)) {
                    ok = false;
                    break;
                  }
                out.conclusion = ok;
                if (!ok)
                  out.detail = "subgroup does not permute with the cut-down "
                               "Hall set over K meet E";
                return out;
              };
              job.offer(args, eval);
            }
          }
        }
      }
    }
  }
}

void suite_lemma_2_2_2(SuiteJob &job) {
  if (!lemma_2_2_in_scope(job))
    return;
  auto const &ctx = job.ctx();
  auto normals = normal_subgroups(ctx.G);
  for (auto const &sg : ctx.sigmas) {
    for (Pi const &pi : pi_subsets(sg)) {
      for (auto const &hs : sampled_hall_sets(job, sg, pi)) {
        for (Subgroup const &K : ctx.reps) {
          for (Subgroup const &H : ctx.reps) {
            if (job.done())
              return;
            if (!hk_permutable(H, hs.members, K))
              continue;
            for (Subgroup const &N : normals) {
              if (job.done())
                return;
              InstanceArgs args{
                  sg.to_literal(), pi.to_literal(), H.gens_literal(),
                  hall_set_aux(AuxBuilder{}.add("K", K).add("N", N),
                               hs.members)};
              Subgroup G = ctx.G;
              auto members = hs.members;
              auto eval = [H, K, N, G, members](std::uint32_t cx) {
                Subgroup h = cx ? conjugate(H, cx) : H;
                Subgroup k = cx ? conjugate(K, cx) : K;
                auto mem = conjugated_all(members, cx);
                EvalOutcome out;
                out.nontrivial = proper(h);
                out.hypothesis = hk_permutable(h, mem, k);
                if (!out.hypothesis)
                  return out;
                auto q = quotient(G, N);
                Subgroup qh = q->image_of(h);
                Subgroup qk = q->image_of(k);
                bool ok = true;
                for (auto const &m : mem)
                  if (!permutes_with_all_conjugates(qh, q->image_of(m), qk)) {
                    ok = false;
                    break;
                  }
                out.conclusion = ok;
                if (!ok)
                  out.detail = "image does not permute with the image Hall "
                               "set over the image of K";
                return out;
              };
              job.offer(args, eval);
            }
          }
        }
      }
    }
  }
}

void suite_lemma_2_2_3(SuiteJob &job) {
  if (!lemma_2_2_in_scope(job))
    return;
  auto const &ctx = job.ctx();
  DPropertyMode mode = job.d_mode();
  auto normals = normal_subgroups(ctx.G);
  for (auto const &sg : ctx.sigmas) {
    for (Pi const &pi : pi_subsets(sg)) {
      for (Subgroup const &N : normals) {
        if (job.done())
          return;
        for (auto eid : ctx.u->subgroups_above(N.id())) {
          if (job.done())
            return;
          Subgroup E(ctx.u, eid);
          InstanceArgs args{sg.to_literal(), pi.to_literal(), E.gens_literal(),
                            AuxBuilder{}.add("N", N).text};
          Subgroup G = ctx.G;
          auto eval = [pi, E, N, G, mode](std::uint32_t cx) {
            Subgroup e = cx ? conjugate(E, cx) : E;
            EvalOutcome out;
            out.nontrivial = proper(e);
            auto q = quotient(G, N);
            out.hypothesis = is_sylow_type(G, pi, mode) &&
                             is_pi_permutable(q->image_of(e), pi);
            if (!out.hypothesis)
              return out;
            out.conclusion = is_pi_permutable(e, pi);
            if (!out.conclusion)
              out.detail = "preimage of a Pi-permutable subgroup is not "
                           "Pi-permutable";
            return out;
          };
          job.offer(args, eval);
        }
      }
    }
  }
}

void suite_lemma_2_2_4(SuiteJob &job) {
  if (!lemma_2_2_in_scope(job))
    return;
  auto const &ctx = job.ctx();
  for (auto const &sg : ctx.sigmas) {
    for (Pi const &pi : pi_subsets(sg)) {
      for (auto const &hs : sampled_hall_sets(job, sg, pi)) {
        for (Subgroup const &K : ctx.reps) {
          for (Subgroup const &H : ctx.reps) {
            if (job.done())
              return;
            InstanceArgs args{
                sg.to_literal(), pi.to_literal(), H.gens_literal(),
                hall_set_aux(AuxBuilder{}.add("K", K), hs.members)};
            auto members = hs.members;
            auto eval = [H, K, members](std::uint32_t cx) {
              Subgroup h = cx ? conjugate(H, cx) : H;
              Subgroup k = cx ? conjugate(K, cx) : K;
              auto mem = conjugated_all(members, cx);
              EvalOutcome out;
              out.nontrivial = proper(h) && proper(k);
              out.hypothesis =
                  hk_permutable(h, mem, k) && hk_permutable(k, mem, k);
              if (!out.hypothesis)
                return out;
              out.conclusion = hk_permutable(join(h, k), mem, k);
              if (!out.conclusion)
                out.detail = "join is not permutable with the Hall set over K";
              return out;
            };
            job.offer(args, eval);
          }
        }
      }
    }
  }
}

// --- suites: lemma 2.3, lemma 2.4 ----------------------------------------

void suite_lemma_2_3(SuiteJob &job) {
  if (partition_capped(job))
    return;
  auto const &ctx = job.ctx();
  Subgroup phi = frattini(ctx.G);
  auto normals = normal_subgroups(ctx.G);
  for (auto const &sg : ctx.sigmas) {
    for (Pi const &pi : pi_subsets(sg)) {
      for (Subgroup const &Hn : normals) {
        if (job.done())
          return;
        InstanceArgs args{sg.to_literal(), pi.to_literal(), Hn.gens_literal(),
                          ""};
        Subgroup G = ctx.G;
        auto u = ctx.u;
        auto eval = [pi, Hn, G, phi, u](std::uint32_t cx) {
          Subgroup h = cx ? conjugate(Hn, cx) : Hn;
          EvalOutcome out;
          out.nontrivial = proper(h);
          out.hypothesis =
              is_normal_in(h, G) &&
              pi.is_pi_number(h.order() / intersection(h, phi).order());
          if (!out.hypothesis)
            return out;
          std::uint64_t want = part_for_primes(h.order(), pi.primes());
          bool found = false;
          for (auto id : u->subgroups_below(h.id()))
            if (u->subgroup_rec(id).order == want &&
                u->subgroup_rec(id).normal) {
              found = true;
              break;
            }
          out.conclusion = found;
          if (!found)
            out.detail = "no normal Hall Pi-subgroup inside the normal "
                         "subgroup";
          return out;
        };
        job.offer(args, eval);
      }
    }
  }
}

void suite_lemma_2_4(SuiteJob &job) {
  if (partition_capped(job))
    return;
  auto const &ctx = job.ctx();
  std::size_t n = ctx.reps.size();
  for (auto const &sg : ctx.sigmas) {
    bool soluble = is_sigma_soluble(ctx.G, sg);
    // index block sets and Pi-closedness are class invariants, so
    // representative triples cover every triple of subgroups
    std::vector<std::vector<std::size_t>> isig(n);
    for (std::size_t i = 0; i < n; ++i)
      isig[i] = sg.sigma_of(ctx.G.order() / ctx.reps[i].order());
    auto blocks_disjoint = [](std::vector<std::size_t> const &a,
                              std::vector<std::size_t> const &b) {
      for (auto x : a)
        for (auto y : b)
          if (x == y)
            return false;
      return true;
    };
    for (Pi const &pi : pi_subsets(sg)) {
      std::vector<char> closed(n);
      for (std::size_t i = 0; i < n; ++i)
        closed[i] = is_pi_closed(ctx.reps[i], pi) ? 1 : 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
          for (std::size_t k = j; k < n; ++k) {
            if (job.done())
              return;
            Subgroup A = ctx.reps[i], B = ctx.reps[j], C = ctx.reps[k];
            InstanceArgs args{sg.to_literal(), pi.to_literal(),
                              A.gens_literal(),
                              AuxBuilder{}.add("B", B).add("C", C).text};
            Subgroup G = ctx.G;
            bool fast_hyp = soluble && closed[i] && closed[j] && closed[k] &&
                            blocks_disjoint(isig[i], isig[j]) &&
                            blocks_disjoint(isig[i], isig[k]) &&
                            blocks_disjoint(isig[j], isig[k]);
            auto eval = [sg, pi, A, B, C, G, fast_hyp](std::uint32_t cx) {
              Subgroup a = cx ? conjugate(A, cx) : A;
              Subgroup b = cx ? conjugate(B, cx) : B;
              Subgroup c = cx ? conjugate(C, cx) : C;
              EvalOutcome out;
              out.nontrivial = proper(a) && proper(b) && proper(c);
              if (cx) {
                out.hypothesis =
                    is_sigma_soluble(G, sg) && is_pi_closed(a, pi) &&
                    is_pi_closed(b, pi) && is_pi_closed(c, pi) &&
                    sg.sigma_coprime(G.order() / a.order(),
                                     G.order() / b.order()) &&
                    sg.sigma_coprime(G.order() / a.order(),
                                     G.order() / c.order()) &&
                    sg.sigma_coprime(G.order() / b.order(),
                                     G.order() / c.order());
              } else {
                out.hypothesis = fast_hyp;
              }
              if (!out.hypothesis)
                return out;
              out.conclusion = is_pi_closed(G, pi);
              if (!out.conclusion)
                out.detail = "group is not Pi-closed despite three Pi-closed "
                             "subgroups with sigma-coprime indices";
              return out;
            };
            job.offer(args, eval);
          }
    }
  }
}

// --- suites: proposition 2.5 through corollary 2.8 ------------------------

void suite_prop_2_5(SuiteJob &job) {
  if (partition_capped(job))
    return;
  auto const &ctx = job.ctx();
  for (auto const &sg : ctx.sigmas) {
    for (std::size_t bi = 0; bi < sg.block_count(); ++bi) {
      if (job.done())
        return;
      Pi pii(sg, {bi});
      InstanceArgs args{sg.to_literal(), pii.to_literal(), "", ""};
      Subgroup G = ctx.G;
      auto reps = ctx.reps;
      job.instance(args, [sg, pii, G, reps](std::uint32_t) {
        Pi pic = pii.complement();
        EvalOutcome out;
        bool hyp = is_sigma_soluble(G, sg) && !is_pi_closed(G, pic);
        if (hyp)
          for (auto const &m : reps) {
            if (m.is_full())
              continue;
            if (!is_pi_closed(m, pic)) {
              hyp = false;
              break;
            }
          }
        out.hypothesis = hyp;
        if (!hyp)
          return out;
        bool closed_i = is_pi_closed(G, pii);
        bool schmidt = is_schmidt(G);
        out.conclusion = closed_i && schmidt;
        if (!out.conclusion)
          out.detail = !closed_i ? "group is not closed for the block"
                                 : "group is not a Schmidt group";
        return out;
      });
    }
  }
}

void suite_cor_2_6(SuiteJob &job) {
  if (partition_capped(job))
    return;
  auto const &ctx = job.ctx();
  for (auto const &sg : ctx.sigmas) {
    if (job.done())
      return;
    InstanceArgs args{sg.to_literal(), "", "", ""};
    Subgroup G = ctx.G;
    job.instance(args, [sg, G](std::uint32_t) {
      EvalOutcome out;
      out.hypothesis =
          is_minimal_non_sigma_nilpotent(G, sg) && is_sigma_soluble(G, sg);
      if (!out.hypothesis)
        return out;
      out.conclusion = is_schmidt(G);
      if (!out.conclusion)
        out.detail = "minimal non-sigma-nilpotent soluble group is not a "
                     "Schmidt group";
      return out;
    });
  }
}

void suite_prop_2_7(SuiteJob &job) {
  if (partition_capped(job))
    return;
  auto const &ctx = job.ctx();
  DPropertyMode mode = job.d_mode();
  std::vector<std::size_t> rep_ids = ids_of(ctx.reps);
  for (auto const &sg : ctx.sigmas) {
    for (Pi const &pi : pi_subsets(sg)) {
      auto halls = hall_subgroups(ctx.G, pi.primes());
      for (Subgroup const &Hh : halls) {
        if (!std::binary_search(rep_ids.begin(), rep_ids.end(), Hh.id()))
          continue; // one representative per conjugacy class
        for (Subgroup const &K : ctx.reps) {
          if (job.done())
            return;
          InstanceArgs args{sg.to_literal(), pi.to_literal(),
                            Hh.gens_literal(), AuxBuilder{}.add("K", K).text};
          Subgroup G = ctx.G;
          auto u = ctx.u;
          auto eval = [sg, pi, Hh, K, G, u, mode](std::uint32_t cx) {
            Subgroup hall = cx ? conjugate(Hh, cx) : Hh;
            Subgroup k = cx ? conjugate(K, cx) : K;
            EvalOutcome out;
            out.nontrivial = !k.is_trivial();
            out.hypothesis = is_sylow_type(G, pi, mode) &&
                             is_sigma_nilpotent(hall, sg) &&
                             is_pi_group(k, pi) && is_sigma_soluble(k, sg);
            if (!out.hypothesis)
              return out;
            bool covered = false;
            auto cls = u->subgroup_rec(hall.id()).class_id;
            for (auto mid : u->class_members(cls))
              if (u->id_contains(mid, k.id())) {
                covered = true;
                break;
              }
            out.conclusion = covered;
            if (!covered)
              out.detail = "sigma-soluble Pi-subgroup lies in no conjugate of "
                           "the Hall subgroup";
            return out;
          };
          job.offer(args, eval);
        }
      }
    }
  }
}

void suite_cor_2_8(SuiteJob &job) {
  if (partition_capped(job))
    return;
  auto const &ctx = job.ctx();
  DPropertyMode mode = job.d_mode();
  auto series = chief_series(ctx.G);
  std::vector<std::shared_ptr<Quotient const>> factors;
  for (std::size_t i = 0; i + 1 < series.size(); ++i)
    factors.push_back(quotient(series[i + 1], series[i]));
  for (auto const &sg : ctx.sigmas) {
    for (Pi const &pi : pi_subsets(sg)) {
      if (job.done())
        return;
      InstanceArgs args{sg.to_literal(), pi.to_literal(), "", ""};
      Subgroup G = ctx.G;
      job.instance(args, [sg, pi, G, factors, mode](std::uint32_t) {
        EvalOutcome out;
        bool hyp = is_sylow_type(G, pi, mode);
        for (auto const &f : factors) {
          if (!hyp)
            break;
          bool found = false;
          for (auto const &v :
               hall_subgroups(Subgroup::full(f->q_universe), pi.primes()))
            if (is_sigma_nilpotent(v, sg)) {
              found = true;
              break;
            }
          hyp = found;
        }
        out.hypothesis = hyp;
        if (!hyp)
          return out;
        bool found = false;
        for (auto const &w : hall_subgroups(G, pi.primes()))
          if (is_sigma_soluble(w, sg)) {
            found = true;
            break;
          }
        out.conclusion = found;
        if (!found)
          out.detail = "group has no sigma-soluble Hall Pi-subgroup";
        return out;
      });
    }
  }
}

// --- suites: the two reference examples ------------------------------------

void suite_example_1_2_3(SuiteJob &job) {
  auto const &ctx = job.ctx();
  if (ctx.entry->name != "example_294" &&
      ctx.entry->provenance != "example_294()")
    return;
  SigmaPartition sg = SigmaPartition::parse("2,7|3");
  Pi all = Pi::all_blocks(sg);
  Subgroup G = ctx.G;
  auto u = ctx.u;

  auto syl7 = sylow_subgroups(G, 7);
  auto hall37 = hall_subgroups(G, PrimeVec{3, 7});

  // group-level facts; counted as one vacuous instance so that a failure
  // still surfaces as a violation
  job.instance({sg.to_literal(), all.to_literal(), "", ""},
               [sg, G, syl7, hall37](std::uint32_t) {
                 EvalOutcome out;
                 out.nontrivial = false;
                 out.hypothesis = true;
                 bool p_ok = syl7.size() == 1 && syl7.front().order() == 49;
                 bool pq_ok = hall37.size() == 1;
                 bool not_nilp = !is_sigma_nilpotent(G, sg);
                 out.conclusion = p_ok && pq_ok && not_nilp;
                 if (!out.conclusion)
                   out.detail = !p_ok ? "Sylow 7-subgroup is not the unique "
                                        "order-49 subgroup"
                                : !pq_ok
                                    ? "Hall {3,7}-subgroup is not unique"
                                    : "group is sigma-nilpotent for the "
                                      "example partition";
                 return out;
               });
  if (syl7.size() != 1 || hall37.size() != 1)
    return;
  Subgroup P = syl7.front();
  Subgroup PQ = hall37.front();

  for (auto lid : u->subgroups_below(P.id())) {
    if (job.done())
      return;
    Subgroup L(u, lid);
    if (L.is_trivial() || L == P || !is_normal_in(L, PQ))
      continue;
    InstanceArgs args{sg.to_literal(), all.to_literal(), L.gens_literal(), ""};
    auto eval = [sg, all, L, P, PQ, G](std::uint32_t cx) {
      Subgroup l = cx ? conjugate(L, cx) : L;
      Subgroup pq = cx ? conjugate(PQ, cx) : PQ;
      EvalOutcome out;
      out.hypothesis = true;
      bool perm = is_pi_permutable(l, all);
      bool not_sperm = !is_s_permutable(l);
      bool not_normal = !is_normal_in(l, G);
      bool some_sylow2_blocks = false;
      for (auto const &r : sylow_subgroups(G, 2))
        if (!permutes(l, r)) {
          some_sylow2_blocks = true;
          break;
        }
      bool inside_halls = true;
      for (auto const &v : hall_subgroups(G, PrimeVec{2, 7}))
        if (!v.contains(l)) {
          inside_halls = false;
          break;
        }
      bool sylow3_in_pq = true;
      for (auto const &s : sylow_subgroups(G, 3))
        if (!pq.contains(s)) {
          sylow3_in_pq = false;
          break;
        }
      out.conclusion = perm && not_sperm && not_normal &&
                       some_sylow2_blocks && inside_halls && sylow3_in_pq;
      if (!out.conclusion)
        out.detail = !perm          ? "L is not sigma-permutable"
                     : !not_sperm   ? "L is S-permutable"
                     : !not_normal  ? "L is normal in the group"
                     : !some_sylow2_blocks
                         ? "L permutes with every Sylow 2-subgroup"
                     : !inside_halls ? "L escapes a Hall {2,7}-subgroup"
                                     : "a Sylow 3-subgroup escapes PQ";
      return out;
    };
    job.offer(args, eval);
  }
}

void suite_example_42(SuiteJob &job) {
  auto const &ctx = job.ctx();
  if (ctx.entry->name != "example_42" &&
      ctx.entry->provenance != "example_42()")
    return;
  SigmaPartition sg = SigmaPartition::singletons(ctx.primes);
  Pi pi7 = Pi::parse(sg, "7");
  Subgroup G = ctx.G;
  for (Subgroup const &H : ctx.reps) {
    if (job.done())
      return;
    if (H.order() != 3)
      continue;
    InstanceArgs args{sg.to_literal(), pi7.to_literal(), H.gens_literal(), ""};
    auto eval = [sg, pi7, H, G](std::uint32_t cx) {
      Subgroup h = cx ? conjugate(H, cx) : H;
      EvalOutcome out;
      out.hypothesis = true;
      bool perm7 = is_pi_permutable(h, pi7);
      bool not_semi = !is_s_semipermutable(h);
      bool syl7_perm = true;
      for (auto const &p : sylow_subgroups(G, 7))
        if (!permutes(h, p)) {
          syl7_perm = false;
          break;
        }
      Subgroup hg = normal_closure(G, h);
      bool complement_ok = false;
      for (auto const &v : hall_subgroups(hg, PrimeVec{7}))
        if (is_nilpotent(v)) {
          complement_ok = true;
          break;
        }
      out.conclusion = perm7 && not_semi && syl7_perm && complement_ok;
      if (!out.conclusion)
        out.detail = !perm7      ? "order-3 subgroup is not pi'-permutable"
                     : !not_semi ? "order-3 subgroup is S-semipermutable"
                     : !syl7_perm
                         ? "order-3 subgroup misses a Sylow 7-subgroup"
                         : "closure lacks a nilpotent {2,3}-complement";
      return out;
    };
    job.offer(args, eval);
  }
}

// --- suite registry --------------------------------------------------------

struct SuiteDef {
  char const *id;
  std::uint64_t floor;
  void (*run)(SuiteJob &);
};

SuiteDef const kSuites[] = {
    {"thm_1_3_i", 10, suite_thm_1_3_i},
    {"thm_1_3_ii", 10, suite_thm_1_3_ii},
    {"thm_1_3_iii", 10, suite_thm_1_3_iii},
    {"cor_1_4", 25, suite_cor_1_4},
    {"cor_1_5", 10, suite_cor_1_5},
    {"cor_1_6", 25, suite_cor_1_6},
    {"cor_1_7", 10, suite_cor_1_7},
    {"cor_1_8", 25, suite_cor_1_8},
    {"cor_1_9", 10, suite_cor_1_9},
    {"cor_1_10", 10, suite_cor_1_10},
    {"cor_1_11", 10, suite_cor_1_11},
    {"cor_1_12", 10, suite_cor_1_12},
    {"cor_1_13", 25, suite_cor_1_13},
    {"lemma_2_1_1", 10, suite_lemma_2_1_1},
    {"lemma_2_1_2", 10, suite_lemma_2_1_2},
    {"lemma_2_1_3", 10, suite_lemma_2_1_3},
    {"lemma_2_1_4", 10, suite_lemma_2_1_4},
    {"lemma_2_1_5", 10, suite_lemma_2_1_5},
    {"lemma_2_1_6", 10, suite_lemma_2_1_6},
    {"lemma_2_1_7", 10, suite_lemma_2_1_7},
    {"lemma_2_1_8", 10, suite_lemma_2_1_8},
    {"lemma_2_1_9", 10, suite_lemma_2_1_9},
    {"lemma_2_2_1", 10, suite_lemma_2_2_1},
    {"lemma_2_2_2", 10, suite_lemma_2_2_2},
    {"lemma_2_2_3", 10, suite_lemma_2_2_3},
    {"lemma_2_2_4", 10, suite_lemma_2_2_4},
    {"lemma_2_3", 10, suite_lemma_2_3},
    {"lemma_2_4", 3, suite_lemma_2_4},
    {"prop_2_5", 3, suite_prop_2_5},
    {"cor_2_6", 10, suite_cor_2_6},
    {"prop_2_7", 10, suite_prop_2_7},
    {"cor_2_8", 10, suite_cor_2_8},
    {"example_1_2_3", 1, suite_example_1_2_3},
    {"example_42", 1, suite_example_42},
};

SuiteDef const *find_suite(std::string const &id) {
  for (auto const &def : kSuites)
    if (id == def.id)
      return &def;
  return nullptr;
}

} // namespace

std::vector<std::string> suite_ids() {
  std::vector<std::string> out;
  for (auto const &def : kSuites)
    out.push_back(def.id);
  return out;
}

std::vector<std::string>
resolve_suites(std::vector<std::string> const &requested) {
  std::vector<char> selected(std::size(kSuites), 0);
  auto mark_prefix = [&](std::string const &prefix) {
    bool any = false;
    for (std::size_t i = 0; i < std::size(kSuites); ++i) {
      std::string id = kSuites[i].id;
      if (id.rfind(prefix + "_", 0) == 0) {
        selected[i] = 1;
        any = true;
      }
    }
    return any;
  };
  auto effective = requested.empty()
                       ? std::vector<std::string>{"all"}
                       : requested;
  for (auto const &want : effective) {
    if (want == "all") {
      std::fill(selected.begin(), selected.end(), 1);
      continue;
    }
    if (want == "lemma_2_1" || want == "lemma_2_2") {
      mark_prefix(want);
      continue;
    }
    bool hit = false;
    for (std::size_t i = 0; i < std::size(kSuites); ++i)
      if (want == kSuites[i].id) {
        selected[i] = 1;
        hit = true;
        break;
      }
    if (!hit)
      throw DomainError("unknown suite id \"" + want + "\"");
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < std::size(kSuites); ++i)
    if (selected[i])
      out.push_back(kSuites[i].id);
  return out;
}

namespace {

JobTally run_one(SuiteDef const &def, GroupCtx const &ctx,
                 VerifyConfig const &config, double *elapsed_ms) {
  SuiteJob job(def.id, ctx, config, nullptr);
  auto t0 = Clock::now();
  try {
    def.run(job);
    job.finish();
  } catch (ResourceError const &e) {
    job.skip(std::string("resource cap: ") + e.what() + " (" +
             ctx.entry->name + ")");
  }
  if (elapsed_ms)
    *elapsed_ms = ms_since(t0);
  return job.take();
}

std::string status_name(SuiteStatus s) {
  switch (s) {
  case SuiteStatus::PASS:
    return "PASS";
  case SuiteStatus::WARN:
    return "WARN";
  default:
    return "FAIL";
  }
}

} // namespace

VerifyResult run_verify(VerifyConfig const &config) {
  auto ids = resolve_suites(config.suites);
  std::vector<SuiteDef const *> defs;
  for (auto const &id : ids)
    defs.push_back(find_suite(id));

  CorpusConfig cc;
  cc.max_order = static_cast<unsigned>(config.max_order);
  cc.limits = config.limits;
  auto corpus = config.corpus_dir.empty()
                    ? default_corpus(cc)
                    : corpus_from_directory(config.corpus_dir, cc);

  auto t0 = Clock::now();
  std::size_t const ng = corpus.size();
  std::size_t const ns = defs.size();
  std::vector<std::vector<JobTally>> slots(ng, std::vector<JobTally>(ns));
  std::vector<std::vector<double>> times(ng, std::vector<double>(ns, 0.0));

#ifdef _OPENMP
  int const requested_threads =
      config.threads ? static_cast<int>(config.threads) : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(requested_threads)
#endif
  for (std::ptrdiff_t gi = 0; gi < static_cast<std::ptrdiff_t>(ng); ++gi) {
    try {
      GroupCtx ctx = build_group_ctx(corpus[gi], config.limits);
      for (std::size_t si = 0; si < ns; ++si)
        slots[gi][si] = run_one(*defs[si], ctx, config, &times[gi][si]);
    } catch (Error const &e) {
      for (std::size_t si = 0; si < ns; ++si) {
        slots[gi][si].skips += 1;
        slots[gi][si].notes.push_back("group skipped: " + corpus[gi].name +
                                      " (" + e.what() + ")");
      }
    }
  }

  VerifyResult result;
  std::uint64_t total_skips = 0;
  bool any_fail = false;
  bool any_warn = false;
  for (std::size_t si = 0; si < ns; ++si) {
    SuiteReport rep;
    rep.id = ids[si];
    rep.nonvacuity_floor = defs[si]->floor;
    std::map<std::string, std::uint64_t> counters;
    std::uint64_t suppressed = 0;
    for (std::size_t gi = 0; gi < ng; ++gi) {
      JobTally &t = slots[gi][si];
      rep.instances_tested += t.tested;
      rep.instances_vacuous += t.vacuous;
      rep.resource_skips += t.skips;
      rep.equivariance_checks += t.equivariance;
      rep.wall_time_ms += times[gi][si];
      for (auto &v : t.violations) {
        if (rep.violations.size() < kViolationCapPerSuite)
          rep.violations.push_back(std::move(v));
        else
          ++suppressed;
      }
      for (auto &n : t.notes)
        if (std::find(rep.notes.begin(), rep.notes.end(), n) ==
            rep.notes.end())
          rep.notes.push_back(std::move(n));
      for (auto const &[k, v] : t.counters)
        counters[k] += v;
    }
    for (auto const &[k, v] : counters)
      rep.notes.push_back(k + "=" + std::to_string(v));
    if (suppressed)
      rep.notes.push_back("+" + std::to_string(suppressed) +
                          " more violations suppressed");
    std::uint64_t nonvacuous = rep.instances_tested - rep.instances_vacuous;
    if (!rep.violations.empty())
      rep.status = SuiteStatus::FAIL;
    else if (nonvacuous < rep.nonvacuity_floor)
      rep.status = SuiteStatus::WARN;
    else
      rep.status = SuiteStatus::PASS;
    any_fail = any_fail || rep.status == SuiteStatus::FAIL;
    any_warn = any_warn || rep.status == SuiteStatus::WARN;
    total_skips += rep.resource_skips;
    result.suites.push_back(std::move(rep));
  }

  for (auto const &entry : corpus)
    result.corpus.push_back(CorpusNote{entry.name, entry.provenance,
                                       entry.group.order(),
                                       entry.group.degree()});
  result.wall_time_ms = ms_since(t0);
  result.exit_code = any_fail                           ? 1
                     : total_skips > config.skip_budget ? 3
                     : any_warn                         ? 4
                                                        : 0;
  return result;
}

// --- report rendering -------------------------------------------------------

std::string report_json(VerifyResult const &result,
                        VerifyConfig const &config) {
  nlohmann::json root;
  nlohmann::json cfg;
  cfg["corpus"] = config.corpus_dir.empty() ? "builtin" : config.corpus_dir;
  cfg["d_property"] = config.d_mode == DPropertyMode::ECD ? "ECD" : "EC";
  cfg["k_set_conjugates"] = config.k_set_conjugates;
  cfg["max_order"] = config.max_order;
  cfg["seed"] = config.seed;
  cfg["skip_budget"] = config.skip_budget;
  nlohmann::json suite_names = nlohmann::json::array();
  for (auto const &s : result.suites)
    suite_names.push_back(s.id);
  cfg["suites"] = suite_names;
  root["config"] = cfg;

  nlohmann::json corpus = nlohmann::json::array();
  for (auto const &c : result.corpus) {
    nlohmann::json e;
    e["name"] = c.name;
    e["provenance"] = c.provenance;
    e["order"] = c.order;
    e["degree"] = c.degree;
    corpus.push_back(e);
  }
  root["corpus"] = corpus;

  nlohmann::json suites = nlohmann::json::array();
  for (auto const &s : result.suites) {
    nlohmann::json e;
    e["id"] = s.id;
    e["status"] = status_name(s.status);
    e["instances_tested"] = s.instances_tested;
    e["instances_vacuous"] = s.instances_vacuous;
    e["nonvacuity_floor"] = s.nonvacuity_floor;
    e["resource_skips"] = s.resource_skips;
    e["equivariance_checks"] = s.equivariance_checks;
    nlohmann::json vs = nlohmann::json::array();
    for (auto const &v : s.violations) {
      nlohmann::json w;
      w["group"] = v.group;
      if (!v.sigma.empty())
        w["sigma"] = v.sigma;
      if (!v.pi.empty())
        w["pi"] = v.pi;
      if (!v.subgroup.empty())
        w["subgroup"] = v.subgroup;
      if (!v.aux.empty())
        w["aux"] = v.aux;
      w["detail"] = v.detail;
      w["replay"] = v.replay;
      vs.push_back(w);
    }
    e["violations"] = vs;
    e["notes"] = s.notes;
    if (config.timings)
      e["wall_time_ms"] = s.wall_time_ms;
    suites.push_back(e);
  }
  root["suites"] = suites;
  root["exit_code"] = result.exit_code;
  if (config.timings)
    root["total_wall_time_ms"] = result.wall_time_ms;
  return root.dump(2) + "\n";
}

std::string report_text(VerifyResult const &result,
                        VerifyConfig const &config) {
  std::ostringstream out;
  out << "verification report\n";
  out << "corpus: " << result.corpus.size() << " groups ("
      << (config.corpus_dir.empty() ? "builtin" : config.corpus_dir)
      << "), max order " << config.max_order << "\n";
  out << "d-property mode: "
      << (config.d_mode == DPropertyMode::ECD ? "ECD" : "EC") << "\n\n";
  for (auto const &s : result.suites) {
    out << s.id << ": " << status_name(s.status)
        << "  tested=" << s.instances_tested
        << " vacuous=" << s.instances_vacuous
        << " floor=" << s.nonvacuity_floor << " skips=" << s.resource_skips
        << " equivariance=" << s.equivariance_checks;
    if (config.timings)
      out << " wall_ms=" << s.wall_time_ms;
    out << "\n";
    for (auto const &n : s.notes)
      out << "  note: " << n << "\n";
    std::size_t i = 0;
    for (auto const &v : s.violations) {
      out << "  violation " << ++i << ": group=" << v.group << "\n";
      if (!v.sigma.empty())
        out << "    sigma=" << v.sigma << "\n";
      if (!v.pi.empty())
        out << "    pi=" << v.pi << "\n";
      if (!v.subgroup.empty())
        out << "    subgroup=" << v.subgroup << "\n";
      if (!v.aux.empty())
        out << "    aux=" << v.aux << "\n";
      out << "    detail: " << v.detail << "\n";
      out << "    replay: " << v.replay << "\n";
    }
  }
  out << "\nexit: " << result.exit_code << "\n";
  if (config.timings)
    out << "total wall_ms: " << result.wall_time_ms << "\n";
  return out.str();
}

// --- single-instance checks -------------------------------------------------

namespace {

std::string trim(std::string const &s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos)
    return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_on(std::string const &text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Subgroup subgroup_from_text(std::shared_ptr<Universe const> const &u,
                            std::string const &text) {
  std::vector<Permutation> gens;
  for (auto const &part : split_on(text, ';'))
    for (auto const &piece : split_on(part, ',')) {
      std::string t = trim(piece);
      if (t.empty())
        continue;
      gens.push_back(Permutation::from_cycles(t, u->degree()));
    }
  if (gens.empty())
    throw ParseError("subgroup literal has no generators");
  return Subgroup::generated_by(u, gens);
}

std::vector<std::pair<std::string, Subgroup>>
parse_aux(std::shared_ptr<Universe const> const &u, std::string const &text) {
  std::vector<std::pair<std::string, Subgroup>> out;
  if (trim(text).empty())
    return out;
  for (auto const &entry : split_on(text, ';')) {
    std::string t = trim(entry);
    if (t.empty())
      continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ParseError("aux entries must look like name=(cycles)");
    std::string name = trim(t.substr(0, eq));
    if (name.empty())
      throw ParseError("aux entry has an empty name");
    out.emplace_back(name, subgroup_from_text(u, t.substr(eq + 1)));
  }
  return out;
}

std::string canonical_aux(
    std::vector<std::pair<std::string, Subgroup>> const &entries) {
  AuxBuilder b;
  for (auto const &[name, sub] : entries)
    b.add(name, sub);
  return b.text;
}

struct AtomicPredicate {
  char const *name;
  bool needs_sigma;
  bool needs_pi;
};

AtomicPredicate const kAtomic[] = {
    {"pi-permutable", true, true},
    {"s-permutable", false, false},
    {"s-semipermutable", false, false},
    {"sigma-subnormal", true, false},
    {"subnormal", false, false},
    {"normal", false, false},
    {"nilpotent", false, false},
    {"abelian", false, false},
    {"hall", true, true},
    {"sigma-nilpotent", true, false},
    {"sigma-soluble", true, false},
    {"pi-full", true, true},
    {"sylow-type", true, true},
    {"d-property", true, true},
    {"pi-closed", true, true},
    {"pi-decomposable", true, true},
    {"pi-separable", true, true},
    {"schmidt", false, false},
    {"minimal-non-sigma-nilpotent", true, false},
};

} // namespace

std::vector<std::string> atomic_predicates() {
  std::vector<std::string> out;
  for (auto const &p : kAtomic)
    out.push_back(p.name);
  return out;
}

CheckResult run_check(CheckRequest const &request) {
  if (request.predicate.empty())
    throw DomainError("check needs a predicate");

  PermGroup g = [&] {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (fs::is_regular_file(request.group, ec))
      return load_group(request.group, request.limits);
    return group_from_literal(request.group, request.limits);
  }();
  auto u = universe_of(g);
  Subgroup G = Subgroup::full(u);
  PrimeVec primes = prime_support(G.order());

  std::optional<SigmaPartition> sg;
  if (!trim(request.sigma).empty()) {
    sg = SigmaPartition::parse(request.sigma);
    if (!sg->covers(primes))
      throw DomainError(
          "partition does not cover every prime dividing the group order");
  }
  std::optional<Pi> pi;
  if (!trim(request.pi).empty()) {
    if (!sg)
      throw DomainError("--pi needs --sigma to interpret the blocks");
    pi = Pi::parse(*sg, request.pi);
  }
  bool const has_subgroup = !trim(request.subgroup).empty();
  Subgroup target = has_subgroup ? subgroup_from_text(u, request.subgroup) : G;
  auto aux = parse_aux(u, request.aux);

  // atomic predicates evaluate directly against the target subgroup
  for (auto const &p : kAtomic) {
    if (request.predicate != p.name)
      continue;
    if (p.needs_sigma && !sg)
      throw DomainError(std::string("predicate ") + p.name +
                        " needs --sigma");
    if (p.needs_pi && !pi)
      throw DomainError(std::string("predicate ") + p.name + " needs --pi");
    bool value = false;
    std::string name = p.name;
    if (name == "pi-permutable")
      value = is_pi_permutable(target, *pi);
    else if (name == "s-permutable")
      value = is_s_permutable(target);
    else if (name == "s-semipermutable")
      value = is_s_semipermutable(target);
    else if (name == "sigma-subnormal")
      value = is_sigma_subnormal(target, G, *sg);
    else if (name == "subnormal")
      value = is_subnormal(target, G);
    else if (name == "normal")
      value = is_normal_in(target, G);
    else if (name == "nilpotent")
      value = is_nilpotent(target);
    else if (name == "abelian")
      value = is_abelian(target);
    else if (name == "hall")
      value = target.order() == part_for_primes(G.order(), pi->primes());
    else if (name == "sigma-nilpotent")
      value = is_sigma_nilpotent(target, *sg);
    else if (name == "sigma-soluble")
      value = is_sigma_soluble(target, *sg);
    else if (name == "pi-full")
      value = is_pi_full(target, *pi);
    else if (name == "sylow-type")
      value = is_sylow_type(target, *pi, request.d_mode);
    else if (name == "d-property")
      value = is_d_property(target, pi->primes(), request.d_mode);
    else if (name == "pi-closed")
      value = is_pi_closed(target, *pi);
    else if (name == "pi-decomposable")
      value = is_pi_decomposable(target, pi->primes());
    else if (name == "pi-separable")
      value = is_pi_separable(target, pi->primes());
    else if (name == "schmidt")
      value = is_schmidt(target);
    else if (name == "minimal-non-sigma-nilpotent")
      value = is_minimal_non_sigma_nilpotent(target, *sg);
    CheckResult res;
    res.holds = value;
    res.detail = name + std::string(value ? " holds" : " does not hold") +
                 (has_subgroup ? " for the subgroup" : " for the group");
    return res;
  }

  SuiteDef const *def = find_suite(request.predicate);
  if (!def)
    throw DomainError("unknown predicate \"" + request.predicate + "\"");

  CorpusEntry entry{request.group, request.group, g, {}};
  GroupCtx ctx = build_group_ctx(entry, request.limits);

  VerifyConfig cfg;
  cfg.d_mode = request.d_mode;
  cfg.k_set_conjugates = request.k_set_conjugates;
  cfg.limits = request.limits;

  ReplayFilter filter;
  filter.want.sigma = sg ? sg->to_literal() : "";
  filter.want.pi = pi ? pi->to_literal() : "";
  filter.want.subgroup = has_subgroup ? target.gens_literal() : "";
  filter.want.aux = canonical_aux(aux);

  SuiteJob job(def->id, ctx, cfg, &filter);
  def->run(job);
  if (!filter.matched)
    throw DomainError("the given arguments do not identify an instance of "
                      "suite " +
                      request.predicate);
  EvalOutcome const &out = filter.outcome;
  CheckResult res;
  res.holds = !(out.hypothesis && !out.conclusion);
  if (!out.hypothesis)
    res.detail = "hypothesis does not hold; the instance is vacuous";
  else if (out.conclusion)
    res.detail = "hypothesis and conclusion both hold";
  else
    res.detail = "violation reproduced: " + out.detail;
  return res;
}

} // namespace sigma

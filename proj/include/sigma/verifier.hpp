#ifndef SIGMA_VERIFIER_HPP
#define SIGMA_VERIFIER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sigma/corpus.hpp"
#include "sigma/hall.hpp"
#include "sigma/limits.hpp"

namespace sigma {

// One failed instance.  The fields are exactly what `check` needs to
// replay the verdict: group provenance, partition literal, block
// selection, and generator strings, plus a ready-to-run command line.
struct Violation {
  std::string group;
  std::string sigma;    // partition literal, empty when the suite has none
  std::string pi;       // block selection literal, empty when unused
  std::string subgroup; // generators of the primary subgroup, "; "-joined
  std::string aux;      // secondary subgroups, "K=(0 1 2); N=(3 4),(5 6)"
  std::string detail;
  std::string replay;
};

enum class SuiteStatus { PASS, WARN, FAIL };

struct SuiteReport {
  std::string id;
  SuiteStatus status = SuiteStatus::PASS;
  std::uint64_t instances_tested = 0;
  std::uint64_t instances_vacuous = 0;
  std::uint64_t nonvacuity_floor = 0;
  std::uint64_t resource_skips = 0;
  std::uint64_t equivariance_checks = 0;
  std::vector<Violation> violations;
  std::vector<std::string> notes;
  double wall_time_ms = 0.0; // reported only when timings are requested
};

struct VerifyConfig {
  std::vector<std::string> suites; // empty means all
  std::uint64_t max_order = 200;
  std::string corpus_dir;          // empty means the built-in corpus
  DPropertyMode d_mode = DPropertyMode::ECD;
  bool timings = false;            // include wall times in reports
  unsigned threads = 0;            // 0 means the OpenMP default
  bool k_set_conjugates = false;   // strengthen the thm_1_3_ii side clause
  std::uint64_t seed = 20260815;   // equivariance spot-check sampling
  std::uint64_t skip_budget = 64;  // tolerated resource skips before exit 3
  Limits limits;
};

struct CorpusNote {
  std::string name;
  std::string provenance;
  std::uint64_t order = 0;
  unsigned degree = 0;
};

struct VerifyResult {
  std::vector<SuiteReport> suites;
  std::vector<CorpusNote> corpus;
  double wall_time_ms = 0.0;
  int exit_code = 0; // 0 pass, 1 violation, 3 skip budget, 4 vacuous only
};

// Concrete suite ids in report order.
std::vector<std::string> suite_ids();

// Expands the umbrella ids (all, lemma_2_1, lemma_2_2) and validates the
// rest, returning concrete ids in report order.  Unknown ids raise
// DomainError.
std::vector<std::string>
resolve_suites(std::vector<std::string> const &requested);

VerifyResult run_verify(VerifyConfig const &config);

// Deterministic renderings: byte-identical across reruns with an equal
// config as long as timings stay disabled.  The thread count is part of
// neither rendering.
std::string report_json(VerifyResult const &result, VerifyConfig const &config);
std::string report_text(VerifyResult const &result, VerifyConfig const &config);

// Single-instance evaluation.  `predicate` is either an atomic predicate
// (pi-permutable, s-permutable, ...) applied to the subgroup (or to the
// whole group when none is given), or a suite id, which replays the suite
// instance identified by the arguments and reports whether it passes.
struct CheckRequest {
  std::string group; // file path or constructor literal
  std::string sigma;
  std::string pi;
  std::string subgroup;
  std::string aux;
  std::string predicate;
  DPropertyMode d_mode = DPropertyMode::ECD;
  bool k_set_conjugates = false;
  Limits limits;
};

struct CheckResult {
  bool holds = false;
  std::string detail;
};

CheckResult run_check(CheckRequest const &request);

// Names accepted by the atomic side of `check`, for usage text.
std::vector<std::string> atomic_predicates();

} // namespace sigma

#endif

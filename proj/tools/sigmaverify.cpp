#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sigma/embedding.hpp"
#include "sigma/errors.hpp"
#include "sigma/verifier.hpp"

namespace {

int run_verify_command(sigma::VerifyConfig const &config,
                       std::string const &report_path,
                       std::string const &format) {
  sigma::VerifyResult result = sigma::run_verify(config);
  std::string rendered = format == "text"
                             ? sigma::report_text(result, config)
                             : sigma::report_json(result, config);
  std::cout << rendered;
  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::binary);
    if (!out)
      throw sigma::DomainError("cannot write report file " + report_path);
    out << rendered;
  }
  return result.exit_code;
}

int run_check_command(sigma::CheckRequest const &request) {
  sigma::CheckResult result = sigma::run_check(request);
  std::cout << (result.holds ? "OK" : "VIOLATION") << ": " << result.detail
            << "\n";
  return result.holds ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"sigma-partition theorem verifier"};
  app.require_subcommand(1);

  // verify ------------------------------------------------------------
  auto *verify = app.add_subcommand(
      "verify", "run verification suites over a corpus of groups");
  sigma::VerifyConfig config;
  std::string report_path;
  std::string format = "json";
  std::string d_property = "ECD";
  std::string fault;
  bool timings = false;
  bool no_timings = false;
  verify->add_option("--suite", config.suites,
                     "suite id, umbrella id, or \"all\" (repeatable)");
  verify->add_option("--max-order", config.max_order,
                     "largest group order taken from the corpus");
  verify->add_option("--corpus", config.corpus_dir,
                     "directory of group JSON files (default: builtin)");
  verify->add_option("--report", report_path, "also write the report here");
  verify->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--d-property", d_property,
                     "Hall-subgroup property mode")
      ->check(CLI::IsMember({"ECD", "EC"}));
  verify->add_option("--threads", config.threads,
                     "worker threads (0 = all available)");
  verify->add_option("--seed", config.seed, "equivariance sampling seed");
  verify->add_option("--skip-budget", config.skip_budget,
                     "resource skips tolerated before exit code 3");
  verify->add_flag("--k-set-conjugates", config.k_set_conjugates,
                   "Hall-set clauses also require conjugate permutability");
  verify->add_flag("--timings", timings,
                   "include wall times in the report (breaks byte-for-byte "
                   "reproducibility)");
  verify->add_flag("--no-timings", no_timings, "omit wall times (default)");
  verify->add_option("--fault", fault,
                     "activate a deliberately broken predicate variant "
                     "(testing aid)");

  // check -------------------------------------------------------------
  auto *check = app.add_subcommand(
      "check", "evaluate one predicate or replay one suite instance");
  sigma::CheckRequest request;
  std::string check_d_property = "ECD";
  std::string check_fault;
  check->add_option("--group", request.group,
                    "group file or constructor literal")
      ->required();
  check->add_option("--sigma", request.sigma,
                    "partition literal, e.g. \"2,7|3\"");
  check->add_option("--pi", request.pi, "block selection literal");
  check->add_option("--subgroup", request.subgroup,
                    "subgroup generators as cycles");
  check->add_option("--aux", request.aux,
                    "extra named subgroups, e.g. \"K=(0 1); N=(2 3)\"");
  check->add_option("--predicate", request.predicate,
                    "atomic predicate name or suite id")
      ->required();
  check->add_option("--d-property", check_d_property,
                    "Hall-subgroup property mode")
      ->check(CLI::IsMember({"ECD", "EC"}));
  check->add_flag("--k-set-conjugates", request.k_set_conjugates,
                  "Hall-set clauses also require conjugate permutability");
  check->add_option("--fault", check_fault,
                    "activate a deliberately broken predicate variant "
                    "(testing aid)");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    return app.exit(e) ? 2 : 0;
  }

  try {
    if (verify->parsed()) {
      config.d_mode = d_property == "EC" ? sigma::DPropertyMode::EC
                                         : sigma::DPropertyMode::ECD;
      config.timings = timings && !no_timings;
      std::optional<sigma::detail::FaultGuard> guard;
      if (!fault.empty())
        guard.emplace(sigma::detail::fault_by_name(fault));
      return run_verify_command(config, report_path, format);
    }
    request.d_mode = check_d_property == "EC" ? sigma::DPropertyMode::EC
                                              : sigma::DPropertyMode::ECD;
    std::optional<sigma::detail::FaultGuard> guard;
    if (!check_fault.empty())
      guard.emplace(sigma::detail::fault_by_name(check_fault));
    return run_check_command(request);
  } catch (sigma::ResourceError const &e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (sigma::ParseError const &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (sigma::DomainError const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (sigma::Error const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

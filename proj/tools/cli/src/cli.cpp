#include "pade_cli/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <thread>

#include "config.hpp"
#include "hyperlab/error.hpp"

namespace hyperlab::cli {

unsigned thread_budget() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("PADE_HYPERLAB_THREADS")) {
    const long v = std::strtol(cap, nullptr, 10);
    if (v > 0) n = static_cast<unsigned>(std::min(v, 256L));
  }
  return n;
}

std::vector<Json> parallel_trials(long count, const std::function<Json(long)>& fn) {
  std::vector<Json> results(static_cast<std::size_t>(std::max(0L, count)));
  std::vector<std::exception_ptr> errors(results.size());
  std::atomic<long> next{0};
  auto worker = [&] {
    for (long i = next++; i < count; i = next++) {
      try {
        results[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::min<long>(thread_budget(), std::max(1L, count));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

namespace {

int exit_code_for(ErrorCode code) {
  switch (classify(code)) {
    case ErrorClass::Degenerate: return Degenerate;
    case ErrorClass::Io: return Io;
    case ErrorClass::InvalidInput: return Invalid;
  }
  return Unexpected;
}

void emit(const Json& doc, const std::string& path, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file || !(file << text)) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Pade interpolation solver and identity checker", "pade"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();

  app.add_option("--seed", cfg.seed, "PRNG seed");
  app.add_option("--precision-bits", cfg.precision_bits, "Complex working precision")->check(CLI::Range(53L, 1L << 20));
  app.add_option("--rel-tol", cfg.rel_tol, "Relative tolerance for complex comparisons");
  app.add_option("--abs-floor", cfg.abs_floor, "Absolute floor for complex comparisons");
  app.add_option("--trials", cfg.trials, "Number of random trials")->check(CLI::PositiveNumber);
  app.add_option("--scalar", cfg.scalar, "Scalar backend")
      ->check(CLI::IsMember({"rational", "complex", "complex256"}));
  app.add_option("--out", cfg.output_path, "Write JSON here instead of stdout");

  std::function<Outcome()> action;

  std::string spec, solution, route = "brute", routes = "all";
  auto* solve = app.add_subcommand("solve", "Solve a problem by one route");
  solve->add_option("--spec", spec, "problem.json")->required();
  solve->add_option("--route", route, "brute|condensed|hg-k|hg-s|vwp-k|vwp-ft");
  solve->callback([&] { action = [&] { return pade_solve(cfg, spec, route); }; });

  auto* verify = app.add_subcommand("verify", "Check a solution against its problem");
  verify->add_option("--spec", spec, "problem.json")->required();
  verify->add_option("--solution", solution, "solution.json")->required();
  verify->callback([&] { action = [&] { return pade_verify(cfg, spec, solution); }; });

  auto* cross = app.add_subcommand("crosscheck", "Solve by several routes and compare");
  cross->add_option("--spec", spec, "problem.json")->required();
  cross->add_option("--routes", routes, "all, or a comma-separated route list");
  cross->callback([&] { action = [&] { return pade_crosscheck(cfg, spec, routes); }; });

  auto* validate = app.add_subcommand("validate", "Eager genericity check");
  validate->add_option("--spec", spec, "problem.json")->required();
  validate->callback([&] { action = [&] { return pade_validate(cfg, spec); }; });

  long m = 2, n = 2;
  auto* bench = app.add_subcommand("bench", "Time brute force against the condensed route");
  bench->add_option("--m", m)->check(CLI::NonNegativeNumber);
  bench->add_option("--n", n)->check(CLI::NonNegativeNumber);
  bench->callback([&] { action = [&] { return pade_bench(cfg, m, n); }; });

  auto* ids = app.add_subcommand("identities", "Randomized identity checks");
  ids->require_subcommand(1);
  long size = 5, split = 0, big_n = -1, dm = 3;
  std::string bracket = "rational";
  const auto brackets = CLI::IsMember({"rational", "trig", "elliptic"});

  auto* condense = ids->add_subcommand("condense", "Condensation identities");
  condense->add_option("--n", size)->check(CLI::Range(1L, 64L));
  condense->add_option("--r", split, "Split; 0 runs every valid split")->check(CLI::NonNegativeNumber);
  condense->callback([&] { action = [&] { return identities_condense(cfg, size, split); }; });

  auto* saal = ids->add_subcommand("saalschutz", "Balanced 3F2 summation");
  saal->add_option("--N", big_n, "Truncation; negative draws it per trial");
  saal->add_option("--bracket", bracket)->check(CLI::IsMember({"rational"}));
  saal->callback([&] { action = [&] { return identities_saalschutz(cfg, big_n); }; });

  auto* ft = ids->add_subcommand("frenkel-turaev", "Terminating 10V9 summation");
  ft->add_option("--N", big_n, "Truncation; negative draws it per trial");
  ft->add_option("--bracket", bracket)->check(brackets);
  ft->callback([&] { action = [&] { return identities_frenkel_turaev(cfg, bracket, big_n); }; });

  auto* riemann = ids->add_subcommand("riemann", "Three-term bracket relation");
  riemann->add_option("--bracket", bracket)->check(brackets);
  riemann->callback([&] { action = [&] { return identities_riemann(cfg, bracket); }; });

  auto* kr = ids->add_subcommand("krattenthaler", "Ratio determinant evaluations");
  kr->add_option("--m", dm)->check(CLI::Range(0L, 12L));
  kr->callback([&] { action = [&] { return identities_krattenthaler(cfg, dm); }; });

  auto* wa = ids->add_subcommand("warnaar", "Bracket ratio determinants");
  wa->add_option("--m", dm)->check(CLI::Range(0L, 12L));
  wa->add_option("--bracket", bracket)->check(brackets);
  wa->callback([&] { action = [&] { return identities_warnaar(cfg, bracket, dm); }; });

  auto* ab = ids->add_subcommand("abstract", "Factorized determinant and its bilinear recurrence");
  ab->add_option("--m", dm)->check(CLI::Range(0L, 12L));
  ab->add_option("--bracket", bracket)->check(brackets);
  ab->callback([&] { action = [&] { return identities_abstract(cfg, bracket, dm); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return Invalid;
  }

  try {
    Outcome result = action();
    emit(result.doc, cfg.output_path, out);
    return result.passed ? Ok : Invalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return Unexpected;
  }
}

}  // namespace hyperlab::cli

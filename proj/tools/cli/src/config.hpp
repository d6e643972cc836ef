#pragma once

#include <cstdint>
#include <exception>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "hyperlab/io/json_io.hpp"
#include "hyperlab/numerics/scalar.hpp"

namespace hyperlab::cli {

struct RunConfig {
  std::uint64_t seed = 1;
  long precision_bits = 256;
  double rel_tol = 1e-20;
  double abs_floor = 1e-40;
  long trials = 10;
  std::string scalar = "rational";
  std::string output_path;

  bool complex() const { return scalar == "complex" || scalar == "complex256"; }
  BigFloat::Precision precision() const { return static_cast<BigFloat::Precision>(precision_bits); }
  EqPolicy policy_for(bool exact) const {
    return exact ? EqPolicy::exact() : EqPolicy::relative(rel_tol, abs_floor);
  }
};

/// Result of one subcommand: the JSON document and whether every check held.
struct Outcome {
  Json doc;
  bool passed = true;
};

/// Worker ceiling: PADE_HYPERLAB_THREADS when set, else hardware concurrency.
unsigned thread_budget();

/// Runs fn(0..count-1) on up to thread_budget() threads. Results keep index
/// order; the lowest-index exception is rethrown.
std::vector<Json> parallel_trials(long count, const std::function<Json(long)>& fn);

Outcome identities_condense(const RunConfig& cfg, long n, long r);
Outcome identities_saalschutz(const RunConfig& cfg, long big_n);
Outcome identities_frenkel_turaev(const RunConfig& cfg, const std::string& bracket, long big_n);
Outcome identities_riemann(const RunConfig& cfg, const std::string& bracket);
Outcome identities_krattenthaler(const RunConfig& cfg, long m);
Outcome identities_warnaar(const RunConfig& cfg, const std::string& bracket, long m);
Outcome identities_abstract(const RunConfig& cfg, const std::string& bracket, long m);

Outcome pade_solve(const RunConfig& cfg, const std::string& spec, const std::string& route);
Outcome pade_verify(const RunConfig& cfg, const std::string& spec, const std::string& solution);
Outcome pade_crosscheck(const RunConfig& cfg, const std::string& spec, const std::string& routes);
Outcome pade_bench(const RunConfig& cfg, long m, long n);
Outcome pade_validate(const RunConfig& cfg, const std::string& spec);

}  // namespace hyperlab::cli

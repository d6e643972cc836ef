#include <chrono>
#include <sstream>

#include "config.hpp"
#include "hyperlab/error.hpp"
#include "hyperlab/linalg/determinant.hpp"
#include "hyperlab/numerics/random.hpp"
#include "hyperlab/pade/instances.hpp"
#include "hyperlab/pade/solve.hpp"

namespace hyperlab::cli {

namespace {

const Route kAllRoutes[] = {Route::BruteForce21, Route::Condensed22, Route::HG31,
                            Route::HG32,         Route::VWP41,       Route::VWP42};

AnyProblem load(const RunConfig& cfg, const std::string& path) {
  return problem_from_json(read_json_file(path), cfg.precision());
}

template <class T>
bool exact_scalars(const InterpolationProblem<T>&) {
  return std::is_same_v<T, Rational>;
}

template <class T>
bool applicable(const InterpolationProblem<T>& prob, Route route) {
  switch (route) {
    case Route::BruteForce21:
    case Route::Condensed22: return true;
    case Route::HG31:
    case Route::HG32:
      return std::holds_alternative<RationalHgFamily<T>>(prob.family()) && prob.on_progression();
    case Route::VWP41:
    case Route::VWP42: return std::holds_alternative<VwpFamily<T>>(prob.family()) && prob.on_progression();
  }
  return false;
}

template <class T>
std::vector<Route> select_routes(const InterpolationProblem<T>& prob, const std::string& list) {
  std::vector<Route> out;
  if (list == "all") {
    for (auto r : kAllRoutes) {
      if (applicable(prob, r)) out.push_back(r);
    }
    return out;
  }
  std::stringstream in(list);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (name.empty()) continue;
    const Route r = route_from_string(name);
    if (!applicable(prob, r)) {
      throw Error(ErrorCode::WrongFamily, "route '" + name + "' does not apply to this problem");
    }
    out.push_back(r);
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty route list");
  return out;
}

template <class T>
Outcome crosscheck(const RunConfig& cfg, const InterpolationProblem<T>& prob, const std::string& list) {
  const EqPolicy policy = cfg.policy_for(exact_scalars(prob));
  const auto routes = select_routes(prob, list);
  std::vector<PadeSolution<T>> sols;
  for (auto r : routes) sols.push_back(solve(prob, r));

  Outcome out;
  Json names = Json::array(), matrix = Json::array(), residuals = Json::object(), verified = Json::object();
  for (std::size_t i = 0; i < routes.size(); ++i) {
    const std::string name(to_string(routes[i]));
    names.push_back(name);
    Json row = Json::array();
    for (std::size_t k = 0; k < routes.size(); ++k) {
      const bool eq = i == k || solutions_proj_eq(sols[i], sols[k], policy);
      out.passed = out.passed && eq;
      row.push_back(eq);
    }
    matrix.push_back(std::move(row));
    const auto rep = verify_solution(prob, sols[i], policy, cfg.seed);
    residuals[name] = rep.max_residual;
    verified[name] = rep.passed;
    out.passed = out.passed && rep.passed;
  }
  out.doc = {{"routes", std::move(names)},
             {"proj_eq", std::move(matrix)},
             {"max_residual", std::move(residuals)},
             {"verified", std::move(verified)},
             {"all_agree", out.passed}};
  return out;
}

template <class T>
Json genericity_json(const InterpolationProblem<T>& prob) {
  Json failures = Json::array();
  for (const auto& f : genericity_failures(prob)) {
    failures.push_back({{"matrix", std::string(1, f.which)}, {"first_row", f.first}, {"size", f.size}});
  }
  return failures;
}

}  // namespace

Outcome pade_solve(const RunConfig& cfg, const std::string& spec, const std::string& route) {
  const Route r = route_from_string(route);
  return std::visit(
      [&](const auto& prob) {
        if (!applicable(prob, r)) {
          throw Error(ErrorCode::WrongFamily, "route '" + route + "' does not apply to this problem");
        }
        return Outcome{to_json(solve(prob, r)), true};
      },
      load(cfg, spec));
}

Outcome pade_verify(const RunConfig& cfg, const std::string& spec, const std::string& solution) {
  const Json sol_doc = read_json_file(solution);
  return std::visit(
      [&](const auto& prob) {
        const auto sol = solution_from_json(sol_doc, prob.proto());
        if (static_cast<long>(sol.p.size()) != prob.m() + 1 || static_cast<long>(sol.q.size()) != prob.n() + 1) {
          throw Error(ErrorCode::LengthMismatch, "solution degrees do not match the problem");
        }
        const auto rep = verify_solution(prob, sol, cfg.policy_for(exact_scalars(prob)), cfg.seed);
        return Outcome{to_json(rep), rep.passed};
      },
      load(cfg, spec));
}

Outcome pade_crosscheck(const RunConfig& cfg, const std::string& spec, const std::string& routes) {
  return std::visit([&](const auto& prob) { return crosscheck(cfg, prob, routes); }, load(cfg, spec));
}

Outcome pade_validate(const RunConfig& cfg, const std::string& spec) {
  return std::visit(
      [&](const auto& prob) {
        Json failures = genericity_json(prob);
        const bool generic = failures.empty();
        Json doc = {{"m", prob.m()},
                    {"n", prob.n()},
                    {"on_progression", prob.on_progression()},
                    {"generic", generic},
                    {"failures", std::move(failures)}};
        if (!generic) {
          const auto& f = doc["failures"][0];
          throw Error(ErrorCode::SingularCoreMinor,
                      "genericity minor of " + f["matrix"].get<std::string>() + " at row " +
                          std::to_string(f["first_row"].get<long>()) + " vanishes");
        }
        return Outcome{std::move(doc), true};
      },
      load(cfg, spec));
}

// Serial on purpose: timings and the per-thread determinant counters need it.
Outcome pade_bench(const RunConfig& cfg, long m, long n) {
  using Clock = std::chrono::steady_clock;
  const Rng root(cfg.seed);
  Json runs = Json::array();
  double brute_total = 0.0, condensed_total = 0.0;
  std::size_t brute_order = 0, condensed_order = 0;
  bool agree = true;
  for (long i = 0; i < cfg.trials; ++i) {
    Rng rng = root.fork(static_cast<std::uint64_t>(i));
    const auto prob = random_hg_problem(rng, m, n, WeightFamily::PlainST);

    reset_det_stats();
    auto t0 = Clock::now();
    const auto brute = solve_bruteforce(prob);
    const double tb = std::chrono::duration<double>(Clock::now() - t0).count();
    const auto sb = det_stats();

    reset_det_stats();
    t0 = Clock::now();
    const auto cond = solve_condensed(prob);
    const double tc = std::chrono::duration<double>(Clock::now() - t0).count();
    const auto sc = det_stats();

    const bool eq = solutions_proj_eq(brute, cond, EqPolicy::exact());
    agree = agree && eq;
    brute_total += tb;
    condensed_total += tc;
    brute_order = std::max(brute_order, sb.max_order);
    condensed_order = std::max(condensed_order, sc.max_order);
    runs.push_back({{"trial", i},
                    {"brute_seconds", tb},
                    {"condensed_seconds", tc},
                    {"brute_max_det_order", sb.max_order},
                    {"condensed_max_det_order", sc.max_order},
                    {"brute_det_calls", sb.calls},
                    {"condensed_det_calls", sc.calls},
                    {"proj_eq", eq}});
  }
  Json doc = {{"m", m},
              {"n", n},
              {"trials", cfg.trials},
              {"seed", cfg.seed},
              {"brute_seconds", brute_total},
              {"condensed_seconds", condensed_total},
              {"brute_max_det_order", brute_order},
              {"condensed_max_det_order", condensed_order},
              {"condensed_not_slower", condensed_total <= brute_total},
              {"runs", std::move(runs)}};
  return {std::move(doc), agree};
}

}  // namespace hyperlab::cli

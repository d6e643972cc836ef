#include <algorithm>

#include "config.hpp"
#include "hyperlab/condensation/condensation.hpp"
#include "hyperlab/detformulas/abstract_factorized.hpp"
#include "hyperlab/detformulas/krattenthaler.hpp"
#include "hyperlab/detformulas/warnaar.hpp"
#include "hyperlab/error.hpp"
#include "hyperlab/numerics/random.hpp"
#include "hyperlab/pade/instances.hpp"
#include "hyperlab/series/identities.hpp"

namespace hyperlab::cli {

namespace {

constexpr int kRedraws = 50;
constexpr double kRiemannTol = 1e-70;

Rational draw(Rng& rng, const Rational&) { return rng.rational(); }
Complex draw(Rng& rng, const Complex& like) { return random_parameter(rng, like.precision()); }

template <class T>
std::vector<T> draws(Rng& rng, long count, const T& like) {
  std::vector<T> out;
  for (long k = 0; k < count; ++k) out.push_back(draw(rng, like));
  return out;
}

BracketKind::Type bracket_type(const std::string& name) {
  if (name == "trig") return BracketKind::Type::Trigonometric;
  if (name == "elliptic") return BracketKind::Type::Elliptic;
  return BracketKind::Type::Rational;
}

// Non-rational brackets only exist over complex scalars.
bool use_complex(const RunConfig& cfg, const std::string& bracket) {
  return cfg.complex() || bracket_type(bracket) != BracketKind::Type::Rational;
}

// Retries fn on degenerate draws (poles, zero denominators). The report
// records how many draws were rejected.
template <class Fn>
Json with_redraws(Rng& rng, Fn fn) {
  for (int attempt = 0;; ++attempt) {
    try {
      Json j = fn(rng);
      if (attempt > 0) {
        for (auto& r : j) r["redraws"] = attempt;
      }
      return j;
    } catch (const Error& e) {
      if (classify(e.code()) != ErrorClass::Degenerate || attempt + 1 >= kRedraws) throw;
    }
  }
}

template <class T>
Json record(const IdentityReport<T>& r) {
  Json j = to_json(r);
  j["residual"] = magnitude(T(r.lhs - r.rhs));
  return j;
}

Outcome summarize(const std::string& name, const RunConfig& cfg, std::vector<Json> trials) {
  Json reports = Json::array();
  double max_residual = 0.0;
  bool all = true;
  for (auto& t : trials) {
    for (auto& r : t) {
      max_residual = std::max(max_residual, r.value("residual", 0.0));
      all = all && r.value("holds", true);
      reports.push_back(std::move(r));
    }
  }
  Outcome out;
  out.passed = all;
  out.doc = {{"identity", name},
             {"seed", cfg.seed},
             {"trials", cfg.trials},
             {"max_residual", max_residual},
             {"all_hold", all},
             {"reports", std::move(reports)}};
  return out;
}

Json tag(Json records, long trial) {
  for (auto& r : records) r["trial"] = trial;
  return records;
}

template <class T>
Json condense_trial(Rng& rng, long n, long r, const EqPolicy& policy, const T& like) {
  Matrix<T> x(n, n, like);
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) x(i, j) = draw(rng, like);
  }
  auto entry = [](const CondensationReport<T>& rep, long split) {
    Json j = {{"identity", std::string(to_string(rep.identity))},
              {"lhs", to_json(rep.lhs)},
              {"rhs", to_json(rep.rhs)},
              {"holds", rep.holds}};
    if (split > 0) j["r"] = split;
    return j;
  };
  Json out = Json::array();
  const long lo = r > 0 ? r : 1, hi = r > 0 ? r : n - 1;
  for (long s = lo; s <= hi; ++s) {
    out.push_back(entry(dodgson_check(x, s, policy), s));
    out.push_back(entry(moving_core_check(x, s, policy), s));
    try {
      out.push_back(entry(renormalized_check(x, s, policy), s));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SingularCoreMinor) throw;
      out.push_back({{"identity", "renormalized"}, {"r", s}, {"skipped", std::string(to_string(e.code()))}});
    }
  }
  if (n >= 3) {
    out.push_back(entry(jacobi_check(x, policy, BilinearForm::Jacobi), 0));
    out.push_back(entry(jacobi_check(x, policy, BilinearForm::LewisCarroll), 0));
  }
  return out;
}

template <class T>
Json saalschutz_trial(Rng& rng, long big_n, const EqPolicy& policy, const T& like) {
  return with_redraws(rng, [&](Rng& g) {
    const long N = big_n >= 0 ? big_n : g.uniform_int(0, 8);
    SaalschutzParams<T> p{draw(g, like), draw(g, like), draw(g, like), g.uniform_int(0, 3), g.uniform_int(0, 3)};
    Json j = record(saalschutz_check(N, p, policy));
    j["N"] = N;
    j["params"] = {{"c", to_json(p.c)}, {"d", to_json(p.d)}, {"u", to_json(p.u)}, {"i", p.i}, {"j", p.j}};
    return Json::array({j});
  });
}

template <class T>
Json frenkel_turaev_trial(Rng& rng, const BracketKind& kind, long big_n, const EqPolicy& policy, const T& like) {
  return with_redraws(rng, [&](Rng& g) {
    const long N = big_n >= 0 ? big_n : g.uniform_int(0, 5);
    T delta = from_int(1, like);
    if constexpr (std::is_same_v<T, Complex>) {
      delta = Complex(rational(1, 5), like.precision()) + g.complex(like.precision(), 400);
    } else {
      delta = g.nonzero_rational();
    }
    const auto a = draws(g, 4, like);
    Json j = record(frenkel_turaev_check(kind, delta, a[0], a[1], a[2], a[3], std::optional<T>{}, N, policy));
    j["N"] = N;
    j["delta"] = to_json(delta);
    j["a"] = to_json(a);
    return Json::array({j});
  });
}

template <class T>
Json riemann_trial(Rng& rng, const BracketKind& kind, const T& like) {
  const Bracket<T> bracket(kind, like);
  const auto v = draws(rng, 4, like);
  const auto terms = riemann_terms(bracket, v[0], v[1], v[2], v[3]);
  const T residual = terms[0] + terms[1] + terms[2];
  double max_term = 0.0;
  for (const auto& t : terms) max_term = std::max(max_term, magnitude(t));
  bool holds;
  if constexpr (std::is_same_v<T, Rational>) {
    holds = is_zero(residual);
  } else {
    holds = magnitude(residual) <= kRiemannTol * max_term;
  }
  return Json::array({{{"identity", "riemann"},
                       {"x", to_json(v[0])},
                       {"alpha", to_json(v[1])},
                       {"beta", to_json(v[2])},
                       {"gamma", to_json(v[3])},
                       {"residual", magnitude(residual)},
                       {"max_term", max_term},
                       {"holds", holds}}});
}

template <class T>
Json krattenthaler_trial(Rng& rng, long m, const EqPolicy& policy, const T& like) {
  return with_redraws(rng, [&](Rng& g) {
    Json out = Json::array();
    KrattenthalerData<T> data{draws(g, m + 1, like), draws(g, m, like), draws(g, m, like), draws(g, m, like),
                              draws(g, m, like)};
    const T lhs = krattenthaler_lhs(data), rhs = krattenthaler_rhs(data);
    out.push_back(record(IdentityReport<T>{"krattenthaler", lhs, rhs, scalar_eq(lhs, rhs, policy)}));

    const T a = draw(g, like), b = draw(g, like);
    const auto x = draws(g, m + 1, like);
    const T sl = shifted_ratio_det_lhs(a, b, x), sr = shifted_ratio_det_rhs(a, b, x);
    out.push_back(record(IdentityReport<T>{"shifted-ratio", sl, sr, scalar_eq(sl, sr, policy)}));

    using P = QRatioParams<T>;
    for (auto which : {P::Case::B, P::Case::C}) {
      for (auto form : {P::Form::General, P::Form::EqualBase}) {
        P q{which, form, draw(g, like), draw(g, like), draw(g, like), draw(g, like), draw(g, like),
            draws(g, m + 1, like)};
        out.push_back(record(q_ratio_det_check(q, policy)));
      }
    }
    return out;
  });
}

template <class T>
Json warnaar_trial(Rng& rng, const BracketKind& kind, long m, const EqPolicy& policy, const T& like) {
  const Bracket<T> bracket(kind, like);
  return with_redraws(rng, [&](Rng& g) {
    Json out = Json::array();
    out.push_back(record(warnaar_check(bracket, draws(g, m + 1, like), draws(g, m, like), draws(g, m, like), policy)));
    T delta = draw(g, like);
    if (is_zero(delta)) delta = from_int(1, like);
    out.push_back(record(warnaar_shifted_check(bracket, draw(g, like), draw(g, like), delta, draws(g, m + 1, like), policy)));
    return out;
  });
}

template <class T>
Json abstract_trial(Rng& rng, const BracketKind& kind, long m, const EqPolicy& policy, const T& like) {
  const Bracket<T> bracket(kind, like);
  return with_redraws(rng, [&](Rng& g) {
    Json out = Json::array();
    const long N = m + 1;
    auto check = [&](const FactorizedDetInput<T>& in, const std::string& source) {
      for (auto rep : {abstract_factorized_det(in, m, policy), tau_bilinear_check(in, m, policy)}) {
        Json j = record(rep);
        j["source"] = source;
        out.push_back(std::move(j));
      }
    };
    check(factorized_from_brackets(bracket, draws(g, N + 1, like), draws(g, N, like), draws(g, N, like), policy),
          "brackets");
    if (kind.type == BracketKind::Type::Rational) {
      KrattenthalerData<T> data{draws(g, N + 1, like), draws(g, N, like), draws(g, N, like), draws(g, N, like),
                                draws(g, N, like)};
      check(factorized_from_krattenthaler(data, policy), "linear-ratio");
    }
    return out;
  });
}

// Runs body(rng, like) per trial over the scalar backend chosen by the flags.
template <class Body>
std::vector<Json> trials(const RunConfig& cfg, bool complex, Body body) {
  const Rng root(cfg.seed);
  return parallel_trials(cfg.trials, [&](long i) {
    Rng rng = root.fork(static_cast<std::uint64_t>(i));
    Json records = complex ? body(rng, Complex(0L, cfg.precision()), cfg.policy_for(false))
                           : body(rng, Rational(0), cfg.policy_for(true));
    return tag(std::move(records), i);
  });
}

}  // namespace

Outcome identities_condense(const RunConfig& cfg, long n, long r) {
  if (r >= n) throw Error(ErrorCode::BadSplit, "split r=" + std::to_string(r) + " of n=" + std::to_string(n));
  auto results = trials(cfg, cfg.complex(), [&](Rng& rng, const auto& like, const EqPolicy& policy) {
    return condense_trial(rng, n, r, policy, like);
  });
  Outcome out;
  out.doc = Json::array();
  for (auto& t : results) {
    for (auto& rep : t) {
      out.passed = out.passed && rep.value("holds", true);
      out.doc.push_back(std::move(rep));
    }
  }
  return out;
}

Outcome identities_saalschutz(const RunConfig& cfg, long big_n) {
  return summarize("saalschutz", cfg, trials(cfg, cfg.complex(), [&](Rng& rng, const auto& like, const EqPolicy& p) {
                     return saalschutz_trial(rng, big_n, p, like);
                   }));
}

Outcome identities_frenkel_turaev(const RunConfig& cfg, const std::string& bracket, long big_n) {
  const auto kind = standard_bracket(bracket_type(bracket), cfg.precision());
  return summarize("frenkel-turaev", cfg,
                   trials(cfg, use_complex(cfg, bracket), [&](Rng& rng, const auto& like, const EqPolicy& p) {
                     return frenkel_turaev_trial(rng, kind, big_n, p, like);
                   }));
}

Outcome identities_riemann(const RunConfig& cfg, const std::string& bracket) {
  const auto kind = standard_bracket(bracket_type(bracket), cfg.precision());
  auto out = summarize("riemann", cfg, trials(cfg, use_complex(cfg, bracket), [&](Rng& rng, const auto& like,
                                                                                  const EqPolicy&) {
                         return riemann_trial(rng, kind, like);
                       }));
  out.doc["tolerance"] = kRiemannTol;
  return out;
}

Outcome identities_krattenthaler(const RunConfig& cfg, long m) {
  return summarize("krattenthaler", cfg, trials(cfg, cfg.complex(), [&](Rng& rng, const auto& like, const EqPolicy& p) {
                     return krattenthaler_trial(rng, m, p, like);
                   }));
}

Outcome identities_warnaar(const RunConfig& cfg, const std::string& bracket, long m) {
  const auto kind = standard_bracket(bracket_type(bracket), cfg.precision());
  return summarize("warnaar", cfg,
                   trials(cfg, use_complex(cfg, bracket), [&](Rng& rng, const auto& like, const EqPolicy& p) {
                     return warnaar_trial(rng, kind, m, p, like);
                   }));
}

Outcome identities_abstract(const RunConfig& cfg, const std::string& bracket, long m) {
  const auto kind = standard_bracket(bracket_type(bracket), cfg.precision());
  return summarize("abstract", cfg,
                   trials(cfg, use_complex(cfg, bracket), [&](Rng& rng, const auto& like, const EqPolicy& p) {
                     return abstract_trial(rng, kind, m, p, like);
                   }));
}

}  // namespace hyperlab::cli

#include "hyperlab/io/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace hyperlab {

Json to_json(const Rational& x) { return x.to_string(); }

Json to_json(const Complex& x) {
  return Json::array({x.real().to_string(), x.imag().to_string(), static_cast<long>(x.precision())});
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational(j.get<std::string>());
  throw Error(ErrorCode::ParseError, "expected a rational \"p/q\", got " + j.dump());
}

namespace {

BigFloat real_from_json(const Json& j, BigFloat::Precision precision) {
  if (j.is_string()) {
    const auto text = j.get<std::string>();
    if (text.find('/') != std::string::npos) return Complex(Rational(text), precision).real();
    return BigFloat(text, precision);
  }
  if (j.is_number_integer()) return BigFloat(j.get<long>(), precision);
  if (j.is_number()) return BigFloat(j.get<double>(), precision);
  throw Error(ErrorCode::ParseError, "expected a real number, got " + j.dump());
}

}  // namespace

Complex complex_from_json(const Json& j, BigFloat::Precision precision) {
  if (j.is_array()) {
    if (j.size() < 2 || j.size() > 3) throw Error(ErrorCode::ParseError, "complex must be [re, im(, prec)]");
    return Complex(real_from_json(j[0], precision), real_from_json(j[1], precision));
  }
  return Complex(real_from_json(j, precision));
}

template <class T>
Json to_json(const std::vector<T>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

template <class T>
std::vector<T> vector_from_json(const Json& j, const T& like) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an array, got " + j.dump());
  std::vector<T> out;
  for (const auto& x : j) out.push_back(scalar_from_json(x, like));
  return out;
}

template <class T>
Json to_json(const Matrix<T>& x) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < x.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < x.cols(); ++j) row.push_back(to_json(x(i, j)));
    entries.push_back(std::move(row));
  }
  return {{"rows", x.rows()}, {"cols", x.cols()}, {"entries", std::move(entries)}};
}

template <class T>
Json to_json(const IdentityReport<T>& r) {
  return {{"identity", r.identity}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}, {"holds", r.holds}};
}

BracketKind bracket_from_json(const Json& j, BigFloat::Precision precision) {
  const auto kind = j.value("kind", std::string("rational"));
  auto get = [&](const char* key) { return complex_from_json(j.at(key), precision); };
  BracketKind out;
  if (kind == "rational") {
    out = BracketKind::rational();
  } else if (kind == "trigonometric") {
    out = BracketKind::trigonometric(get("omega"));
  } else if (kind == "elliptic") {
    out = BracketKind::elliptic(get("omega1"), get("omega2"));
  } else {
    throw Error(ErrorCode::ParseError, "unknown bracket kind '" + kind + "'");
  }
  if (j.contains("c0") || j.contains("c1")) {
    const Complex zero(0L, precision);
    out = out.with_prefactor(j.contains("c0") ? get("c0") : zero, j.contains("c1") ? get("c1") : zero);
  }
  return out;
}

Json to_json(const BracketKind& kind) {
  Json out{{"kind", std::string(to_string(kind.type))}};
  if (kind.omega) out["omega"] = to_json(*kind.omega);
  if (kind.omega1) out["omega1"] = to_json(*kind.omega1);
  if (kind.omega2) out["omega2"] = to_json(*kind.omega2);
  if (kind.c0) out["c0"] = to_json(*kind.c0);
  if (kind.c1) out["c1"] = to_json(*kind.c1);
  return out;
}

namespace {

WeightFamily weight_family_from(const std::string& name) {
  for (auto f : {WeightFamily::PlainST, WeightFamily::SimplifiedST, WeightFamily::VwpE, WeightFamily::VwpESimplified}) {
    if (to_string(f) == name) return f;
  }
  throw Error(ErrorCode::ParseError, "unknown weight family '" + name + "'");
}

template <class T>
WeightSpec<T> weight_spec_from(const Json& j, const T& like) {
  const Json params = j.value("params", Json::object());
  const T one = from_int(1, like);
  auto list = [&](const char* key) {
    return params.contains(key) ? vector_from_json(params.at(key), like) : std::vector<T>{};
  };
  auto scalar = [&](const char* key) { return params.contains(key) ? scalar_from_json(params.at(key), like) : one; };
  return {weight_family_from(j.at("family").get<std::string>()), list("s"), list("t"), list("e"), scalar("z"),
          scalar("w")};
}

template <class T>
InterpolationProblem<T> problem_over(const Json& j, const T& like, BigFloat::Precision precision) {
  const std::string family = j.at("family").get<std::string>();
  const Json& params = j.at("params");
  auto param = [&](const char* key) { return scalar_from_json(params.at(key), like); };
  const long m = j.at("degrees").at("m").get<long>();
  const long n = j.at("degrees").at("n").get<long>();
  const Json& weights = j.at("weights");

  std::vector<T> lambda, mu;
  const bool explicit_weights = weights.contains("explicit");
  if (explicit_weights) {
    for (const auto& pair : weights.at("explicit")) {
      if (!pair.is_array() || pair.size() != 2) throw Error(ErrorCode::ParseError, "weights must be [lambda, mu] pairs");
      lambda.push_back(scalar_from_json(pair[0], like));
      mu.push_back(scalar_from_json(pair[1], like));
    }
  }

  auto build = [&]() -> InterpolationProblem<T> {
    if (family == "rational-hg") {
      if (explicit_weights) {
        return build_rational_hg_problem(param("a"), param("b"), param("c"), param("d"), param("u"), m, n, lambda, mu);
      }
      return build_rational_hg_problem(param("a"), param("b"), param("c"), param("d"), param("u"), m, n,
                                       weight_spec_from(weights, like));
    }
    if (family == "vwp") {
      const BracketKind kind = bracket_from_json(j.value("bracket", Json::object()), precision);
      if (explicit_weights) {
        return build_vwp_problem(kind, param("a"), param("b"), param("c"), param("d"), param("u"), param("delta"), m, n,
                                 lambda, mu);
      }
      return build_vwp_problem(kind, param("a"), param("b"), param("c"), param("d"), param("u"), param("delta"), m, n,
                               weight_spec_from(weights, like));
    }
    throw Error(ErrorCode::ParseError, "unknown family '" + family + "'");
  };
  auto prob = build();
  if (!j.contains("points")) return prob;
  auto points = vector_from_json(j.at("points"), like);
  auto f = [prob](long k, const T& x) { return prob.f(k, x); };
  auto g = [prob](long k, const T& x) { return prob.g(k, x); };
  return InterpolationProblem<T>(m, n, f, g, std::move(points), prob.lambda(), prob.mu(), prob.family(),
                                 prob.weight_spec());
}

}  // namespace

AnyProblem problem_from_json(const Json& j, BigFloat::Precision precision) {
  try {
    const std::string scalar = j.value("scalar", std::string("rational"));
    if (scalar == "rational") return problem_over(j, Rational(0), precision);
    if (scalar == "complex256" || scalar == "complex") return problem_over(j, Complex(0L, precision), precision);
    throw Error(ErrorCode::ParseError, "unknown scalar kind '" + scalar + "'");
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("problem document: ") + e.what());
  }
}

template <class T>
Json to_json(const PadeSolution<T>& sol) {
  return {{"route", std::string(to_string(sol.route))},
          {"p", to_json(sol.p)},
          {"q", to_json(sol.q)},
          {"raw_p", to_json(sol.raw_p)},
          {"raw_q", to_json(sol.raw_q)},
          {"p_prefactor", to_json(sol.p_prefactor)},
          {"q_prefactor", to_json(sol.q_prefactor)}};
}

Route route_from_string(const std::string& name) {
  for (auto r : {Route::BruteForce21, Route::Condensed22, Route::HG31, Route::HG32, Route::VWP41, Route::VWP42}) {
    if (to_string(r) == name) return r;
  }
  throw Error(ErrorCode::ParseError, "unknown route '" + name + "'");
}

template <class T>
PadeSolution<T> solution_from_json(const Json& j, const T& like) {
  try {
    const T one = from_int(1, like);
    auto p = vector_from_json(j.at("p"), like);
    auto q = vector_from_json(j.at("q"), like);
    const Route route = route_from_string(j.value("route", std::string("brute")));
    T pp = j.contains("p_prefactor") ? scalar_from_json(j.at("p_prefactor"), like) : one;
    T pq = j.contains("q_prefactor") ? scalar_from_json(j.at("q_prefactor"), like) : one;
    auto raw_p = j.contains("raw_p") ? vector_from_json(j.at("raw_p"), like) : p;
    auto raw_q = j.contains("raw_q") ? vector_from_json(j.at("raw_q"), like) : q;
    return {std::move(p), std::move(q), std::move(raw_p), std::move(raw_q), std::move(pp), std::move(pq), route};
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("solution document: ") + e.what());
  }
}

template <class T>
Json to_json(const VerificationReport<T>& r) {
  Json off = Json::array();
  for (const auto& v : r.off_node) off.push_back({{"x", to_json(v.x)}, {"P", to_json(v.P)}, {"Q", to_json(v.Q)}});
  return {{"residuals", to_json(r.residuals)},
          {"max_residual", r.max_residual},
          {"max_scale", r.max_scale},
          {"passed", r.passed},
          {"off_node", std::move(off)}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, "'" + path + "': " + e.what());
  }
}

void write_json(const Json& j, const std::string& path) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
}

#define HYPERLAB_INSTANTIATE(T)                                                 \
  template Json to_json(const std::vector<T>&);                                 \
  template std::vector<T> vector_from_json(const Json&, const T&);              \
  template Json to_json(const Matrix<T>&);                                      \
  template Json to_json(const IdentityReport<T>&);                             \
  template Json to_json(const PadeSolution<T>&);                                \
  template PadeSolution<T> solution_from_json(const Json&, const T&);           \
  template Json to_json(const VerificationReport<T>&);

HYPERLAB_INSTANTIATE(Rational)
HYPERLAB_INSTANTIATE(Complex)

#undef HYPERLAB_INSTANTIATE

}  // namespace hyperlab

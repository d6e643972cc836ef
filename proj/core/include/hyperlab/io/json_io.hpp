#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "hyperlab/identity_report.hpp"
#include "hyperlab/pade/solve.hpp"

namespace hyperlab {

using Json = nlohmann::json;

/// Rationals are written "p/q"; complex numbers ["re", "im", precision] with
/// round-trip decimal digits.
Json to_json(const Rational& x);
Json to_json(const Complex& x);

/// Accepts "p/q", "p" or an integer. Throws ParseError.
Rational rational_from_json(const Json& j);
/// Accepts ["re", "im"(, prec)], a rational string or a number. The value is
/// read at `precision` bits regardless of any stored precision.
Complex complex_from_json(const Json& j, BigFloat::Precision precision);

inline Rational scalar_from_json(const Json& j, const Rational&) { return rational_from_json(j); }
inline Complex scalar_from_json(const Json& j, const Complex& like) { return complex_from_json(j, like.precision()); }

template <class T>
Json to_json(const std::vector<T>& xs);

template <class T>
std::vector<T> vector_from_json(const Json& j, const T& like);

/// {"rows": r, "cols": c, "entries": [[...], ...]}.
template <class T>
Json to_json(const Matrix<T>& x);

template <class T>
Json to_json(const IdentityReport<T>& r);

/// A problem over either scalar kind.
using AnyProblem = std::variant<InterpolationProblem<Rational>, InterpolationProblem<Complex>>;

/// Parses the problem schema
///   {scalar, family, bracket, params, degrees, weights, points?}.
/// Malformed documents throw ParseError; invalid values throw the builder's
/// errors (PoleAtNode, DuplicatePoints, ZeroWeight, ...).
AnyProblem problem_from_json(const Json& j, BigFloat::Precision precision);

BracketKind bracket_from_json(const Json& j, BigFloat::Precision precision);
Json to_json(const BracketKind& kind);

template <class T>
Json to_json(const PadeSolution<T>& sol);

/// Reads p, q (and prefactors when present).
template <class T>
PadeSolution<T> solution_from_json(const Json& j, const T& like);

Route route_from_string(const std::string& name);

template <class T>
Json to_json(const VerificationReport<T>& r);

/// Reads and parses a JSON file; IoError when unreadable, ParseError when malformed.
Json read_json_file(const std::string& path);
/// Writes j (indented, trailing newline) to path, or stdout for "" / "-".
void write_json(const Json& j, const std::string& path);

}  // namespace hyperlab

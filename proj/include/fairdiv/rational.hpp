#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace fairdiv {

// Exact rational arithmetic everywhere; no floating point on any computation path.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Thrown on malformed textual input (JSON, fractions, CLI payloads).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when data is well-formed but violates a model invariant
// (bad normalization, overlapping bundles, out-of-range parameters...).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an exact computation would exceed the configured desk-scale limits.
struct SizeGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an algorithm output fails its own proved guarantee; always a bug signal.
struct GuaranteeError : std::logic_error {
  using std::logic_error::logic_error;
};

// Parses "p/q", "p", "-p/q" (optionally with surrounding spaces) into an exact
// rational in lowest terms. Rejects empty strings, zero denominators and any
// decimal notation.
Rational parse_rational(const std::string& text);

// Lowest-terms rendering: "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& value);

// A welfare ratio: finite exact rational, or infinite (zero-welfare denominator).
struct ExtendedRational {
  std::optional<Rational> finite;  // nullopt == infinite

  static ExtendedRational infinite() { return {std::nullopt}; }
  static ExtendedRational make(Rational v) { return {std::move(v)}; }
  bool is_infinite() const { return !finite.has_value(); }
};

std::string format_extended(const ExtendedRational& value);

}  // namespace fairdiv

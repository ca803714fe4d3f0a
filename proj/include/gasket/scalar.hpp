#ifndef GASKET_SCALAR_HPP
#define GASKET_SCALAR_HPP

#include <gmpxx.h>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>

#include "gasket/errors.hpp"

namespace gasket {

/// Exact scalar: arbitrary-precision rational, kept canonical (reduced,
/// positive denominator) by GMP. Construct through frac()/parse_rational()
/// rather than the raw two-argument mpq_class constructor, which does not
/// canonicalize.
using Rational = mpq_class;

inline Rational frac(long num, long den = 1) {
  if (den == 0) throw invalid_parameter("frac: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Accepts "p/q", plain integers, and decimal notation ("0.5" -> 1/2).
inline Rational parse_rational(const std::string& text) {
  std::string s = text;
  // strip surrounding whitespace
  const auto first = s.find_first_not_of(" \t\r\n");
  const auto last = s.find_last_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw malformed_input("parse_rational: empty string");
  s = s.substr(first, last - first + 1);

  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos)
      throw malformed_input("parse_rational: mixed decimal and fraction: " + s);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const std::size_t frac_digits = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw malformed_input("parse_rational: bad decimal: " + s);
    mpz_class num;
    if (num.set_str(digits, 10) != 0)
      throw malformed_input("parse_rational: bad decimal: " + s);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_digits);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0 ||
      mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw malformed_input("parse_rational: cannot parse: " + s);
  q.canonicalize();
  return q;
}

/// Canonical form: "p/q", with "/1" omitted for integers.
inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

/// Shortest decimal that round-trips a double.
inline std::string shortest_double_string(double x) {
  for (int prec = 1; prec <= 17; ++prec) {
    std::ostringstream os;
    os.precision(prec);
    os << x;
    double back = std::strtod(os.str().c_str(), nullptr);
    if (back == x) return os.str();
  }
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

/// Uniform interface over the two scalar modes. Exact mode ignores
/// tolerances; float mode compares within the given absolute tolerance.
template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static const char* mode_name() { return "exact"; }
  static Rational from_fraction(long p, long q = 1) { return frac(p, q); }
  static Rational parse(const std::string& s) { return parse_rational(s); }
  static std::string str(const Rational& x) { return rational_to_string(x); }
  static Rational abs(const Rational& x) { return ::abs(x); }
  static bool eq(const Rational& a, const Rational& b, double) { return a == b; }
  static bool is_zero(const Rational& x, double) { return sgn(x) == 0; }
  static bool is_positive(const Rational& x, double) { return sgn(x) > 0; }
  static bool is_negative(const Rational& x, double) { return sgn(x) < 0; }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static const char* mode_name() { return "float"; }
  static double from_fraction(long p, long q = 1) {
    return static_cast<double>(p) / static_cast<double>(q);
  }
  static double parse(const std::string& s) {
    // accept the exact-mode "p/q" notation too; plain decimals go through
    // strtod so round-tripping is exact (mpq_get_d truncates)
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
      const Rational q = parse_rational(s);
      return q.get_num().get_d() / q.get_den().get_d();
    }
    char* end = nullptr;
    const double x = std::strtod(s.c_str(), &end);
    if (end == s.c_str())
      throw malformed_input("cannot parse float scalar: " + s);
    return x;
  }
  static std::string str(double x) { return shortest_double_string(x); }
  static double abs(double x) { return std::fabs(x); }
  static bool eq(double a, double b, double tol) { return std::fabs(a - b) <= tol; }
  static bool is_zero(double x, double tol) { return std::fabs(x) <= tol; }
  static bool is_positive(double x, double tol) { return x > tol; }
  static bool is_negative(double x, double tol) { return x < -tol; }
};

/// Library-wide tolerance defaults (float mode only; exact mode ignores
/// them). All CLI-configurable.
struct Tolerances {
  double entry = 1e-10;     // entrywise matrix equality
  double residual = 1e-9;   // harmonic residual
  double sv_floor = 1e-12;  // singular-value degeneracy floor
  double level_set = 1e-10; // value-equality in level-set verifiers
};

}  // namespace gasket

#endif  // GASKET_SCALAR_HPP

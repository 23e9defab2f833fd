#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "wmc/errors.hpp"

namespace wmc {

using Integer = mpz_class;
using Rational = mpq_class;
using Complex = std::complex<double>;

/// Ordered by promotion: Integer < Rational < Complex.
enum class RingKind { Integer = 0, Rational = 1, Complex = 2 };

const char* ring_kind_name(RingKind kind);

/// Tolerance for comparisons in the floating (complex) ring.
inline constexpr double kComplexTolerance = 1e-9;

/// A scalar in one of the three commutative rings the counters work over.
///
/// Values are kept canonical: a rational with denominator one is stored as an
/// Integer. Complex values are never demoted, so a result computed in the
/// floating ring stays floating even when its imaginary part is zero.
/// Mixed arithmetic promotes to the larger ring; Integer / Integer yields a
/// Rational.
class RingValue {
 public:
  RingValue() : value_(Integer(0)) {}
  RingValue(int v) : value_(Integer(v)) {}  // NOLINT: implicit by design of literals
  RingValue(long v) : value_(Integer(v)) {}  // NOLINT
  RingValue(Integer v) : value_(std::move(v)) {}  // NOLINT
  RingValue(Rational v);  // NOLINT
  RingValue(Complex v) : value_(v) {}  // NOLINT

  /// Builds re + i*im; stays exact whenever im == 0.
  static RingValue from_parts(const Rational& re, const Rational& im);

  /// Parses an exact decimal literal (`-1`, `0.5`, `1.5e-3`) or a fraction
  /// (`1/3`). Throws std::invalid_argument on malformed text.
  static Rational parse_rational(std::string_view text);

  /// Parses the `<re> <im>` pair used by weight and label directives.
  static RingValue parse_parts(std::string_view re, std::string_view im);

  RingKind kind() const { return static_cast<RingKind>(value_.index()); }
  bool is_zero() const;
  bool is_one() const;
  bool is_integral() const { return kind() == RingKind::Integer; }

  /// Throw MalformedInstance when the value does not fit the requested ring.
  Integer as_integer() const;
  Rational as_rational() const;
  Complex as_complex() const;

  /// Human form: `7`, `-1/3`, or `re+imi` with 12 significant digits.
  std::string to_string() const;

  /// Exact `<re> <im>` form for file directives. Terminating rationals are
  /// written as decimals, other rationals as `p/q`, complex parts in the
  /// shortest decimal that round-trips the double.
  std::pair<std::string, std::string> to_parts() const;

  friend RingValue operator+(const RingValue& a, const RingValue& b);
  friend RingValue operator-(const RingValue& a, const RingValue& b);
  friend RingValue operator*(const RingValue& a, const RingValue& b);
  friend RingValue operator/(const RingValue& a, const RingValue& b);
  RingValue operator-() const;

  /// Exact equality of the represented numbers (Integer 1 == Complex 1+0i).
  friend bool operator==(const RingValue& a, const RingValue& b);

 private:
  std::variant<Integer, Rational, Complex> value_;
};

/// |a - b| <= rel_tol * max(1, |a|, |b|); exact equality for exact operands.
bool approx_equal(const RingValue& a, const RingValue& b, double rel_tol = kComplexTolerance);

std::string format_complex(const Complex& z);
std::string shortest_double(double x);

/// Per-type operations the search engine and oracles are templated over.
template <class T>
struct Ring;

template <>
struct Ring<Integer> {
  static constexpr RingKind kind = RingKind::Integer;
  static constexpr bool has_division = false;
  static Integer zero() { return Integer(0); }
  static Integer one() { return Integer(1); }
  static Integer from(const RingValue& v) { return v.as_integer(); }
  static RingValue to_value(const Integer& x) { return RingValue(x); }
  static bool is_zero(const Integer& x) { return sgn(x) == 0; }
  static bool is_one(const Integer& x) { return x == 1; }
  static bool is_negligible(const Integer& x) { return is_zero(x); }
  static Integer divide(const Integer&, const Integer&) {
    throw UnsupportedInstance("division is not available in the integer ring");
  }
};

template <>
struct Ring<Rational> {
  static constexpr RingKind kind = RingKind::Rational;
  static constexpr bool has_division = true;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from(const RingValue& v) { return v.as_rational(); }
  static RingValue to_value(const Rational& x) { return RingValue(x); }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static bool is_one(const Rational& x) { return x == 1; }
  static bool is_negligible(const Rational& x) { return is_zero(x); }
  static Rational divide(const Rational& a, const Rational& b) { return a / b; }
};

template <>
struct Ring<Complex> {
  static constexpr RingKind kind = RingKind::Complex;
  static constexpr bool has_division = true;
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex from(const RingValue& v) { return v.as_complex(); }
  static RingValue to_value(const Complex& x) { return RingValue(x); }
  static bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }
  static bool is_one(const Complex& x) { return x == Complex(1.0, 0.0); }
  // Guards divisions by 1 + w.
  static bool is_negligible(const Complex& x) { return std::abs(x) < 1e-12; }
  static Complex divide(const Complex& a, const Complex& b) { return a / b; }
};

}  // namespace wmc

#include "wmc/ring.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace wmc {

namespace {

Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// Removes factors of `p` from `x` and returns how many were removed.
unsigned long strip_factor(Integer& x, unsigned long p) {
  unsigned long count = 0;
  while (mpz_divisible_ui_p(x.get_mpz_t(), p)) {
    mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), p);
    ++count;
  }
  return count;
}

std::string rational_to_exact_text(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  Integer den = q.get_den();
  unsigned long twos = strip_factor(den, 2);
  unsigned long fives = strip_factor(den, 5);
  if (den != 1) return q.get_num().get_str() + "/" + q.get_den().get_str();

  unsigned long digits = std::max(twos, fives);
  Integer scaled = q.get_num() * pow10(digits) / q.get_den();
  bool negative = sgn(scaled) < 0;
  std::string body = Integer(abs(scaled)).get_str();
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  body.insert(body.size() - digits, ".");
  return negative ? "-" + body : body;
}

Complex to_complex(const std::variant<Integer, Rational, Complex>& v) {
  switch (v.index()) {
    case 0:
      return {std::get<0>(v).get_d(), 0.0};
    case 1:
      return {std::get<1>(v).get_d(), 0.0};
    default:
      return std::get<2>(v);
  }
}

}  // namespace

const char* ring_kind_name(RingKind kind) {
  switch (kind) {
    case RingKind::Integer:
      return "integer";
    case RingKind::Rational:
      return "rational";
    case RingKind::Complex:
      return "complex";
  }
  return "?";
}

RingValue::RingValue(Rational v) {
  v.canonicalize();
  if (v.get_den() == 1)
    value_ = Integer(v.get_num());
  else
    value_ = std::move(v);
}

RingValue RingValue::from_parts(const Rational& re, const Rational& im) {
  if (sgn(im) == 0) return RingValue(re);
  return RingValue(Complex(re.get_d(), im.get_d()));
}

Rational RingValue::parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  };
  if (text.empty()) return fail();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    bool neg = !num.empty() && (num[0] == '-' || num[0] == '+');
    if (!all_digits(neg ? num.substr(1) : num) || !all_digits(den)) return fail();
    Integer d(std::string(den), 10);
    if (d == 0) return fail();
    Integer n(std::string(neg ? num.substr(1) : num), 10);
    if (num[0] == '-') n = -n;
    return canonical(Rational(n, d));
  }

  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
  std::size_t mantissa_end = text.find_first_of("eE", pos);
  std::string_view mantissa =
      text.substr(pos, mantissa_end == std::string_view::npos ? std::string_view::npos : mantissa_end - pos);
  std::string_view int_part = mantissa;
  std::string_view frac_part;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    int_part = mantissa.substr(0, dot);
    frac_part = mantissa.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) return fail();
  if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
    return fail();

  long exponent = 0;
  if (mantissa_end != std::string_view::npos) {
    std::string_view exp_text = text.substr(mantissa_end + 1);
    if (!exp_text.empty() && exp_text[0] == '+') exp_text.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc() || ptr != exp_text.data() + exp_text.size()) return fail();
    if (exponent > 4096 || exponent < -4096) return fail();
  }

  std::string digits = std::string(int_part) + std::string(frac_part);
  Integer num(digits.empty() ? std::string("0") : digits, 10);
  exponent -= static_cast<long>(frac_part.size());
  Rational q(num);
  if (exponent > 0)
    q *= Rational(pow10(static_cast<unsigned long>(exponent)));
  else if (exponent < 0)
    q /= Rational(pow10(static_cast<unsigned long>(-exponent)));
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

namespace {

// Nearest double to a decimal literal; GMP's conversion truncates instead.
double nearest_double(std::string_view text, const Rational& exact) {
  if (!text.empty() && text[0] == '+') text.remove_prefix(1);
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
  if (ec == std::errc() && ptr == text.data() + text.size()) return x;
  return exact.get_d();
}

}  // namespace

RingValue RingValue::parse_parts(std::string_view re, std::string_view im) {
  Rational re_q = parse_rational(re);
  Rational im_q = parse_rational(im);
  if (sgn(im_q) == 0) return RingValue(re_q);
  return RingValue(Complex(nearest_double(re, re_q), nearest_double(im, im_q)));
}

bool RingValue::is_zero() const {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return Ring<T>::is_zero(x);
      },
      value_);
}

bool RingValue::is_one() const {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return Ring<T>::is_one(x);
      },
      value_);
}

Integer RingValue::as_integer() const {
  if (kind() != RingKind::Integer) throw MalformedInstance("value " + to_string() + " is not an integer");
  return std::get<Integer>(value_);
}

Rational RingValue::as_rational() const {
  switch (kind()) {
    case RingKind::Integer:
      return Rational(std::get<Integer>(value_));
    case RingKind::Rational:
      return std::get<Rational>(value_);
    default:
      throw MalformedInstance("value " + to_string() + " is not real-rational");
  }
}

Complex RingValue::as_complex() const { return to_complex(value_); }

std::string RingValue::to_string() const {
  switch (kind()) {
    case RingKind::Integer:
      return std::get<Integer>(value_).get_str();
    case RingKind::Rational:
      return std::get<Rational>(value_).get_str();
    default:
      return format_complex(std::get<Complex>(value_));
  }
}

std::pair<std::string, std::string> RingValue::to_parts() const {
  if (kind() == RingKind::Complex) {
    const Complex& z = std::get<Complex>(value_);
    return {shortest_double(z.real()), shortest_double(z.imag())};
  }
  return {rational_to_exact_text(as_rational()), "0"};
}

RingValue operator+(const RingValue& a, const RingValue& b) {
  RingKind k = std::max(a.kind(), b.kind());
  if (k == RingKind::Integer) return RingValue(Integer(std::get<Integer>(a.value_) + std::get<Integer>(b.value_)));
  if (k == RingKind::Rational) return RingValue(Rational(a.as_rational() + b.as_rational()));
  return RingValue(a.as_complex() + b.as_complex());
}

RingValue operator-(const RingValue& a, const RingValue& b) { return a + (-b); }

RingValue operator*(const RingValue& a, const RingValue& b) {
  RingKind k = std::max(a.kind(), b.kind());
  if (k == RingKind::Integer) return RingValue(Integer(std::get<Integer>(a.value_) * std::get<Integer>(b.value_)));
  if (k == RingKind::Rational) return RingValue(Rational(a.as_rational() * b.as_rational()));
  return RingValue(a.as_complex() * b.as_complex());
}

RingValue operator/(const RingValue& a, const RingValue& b) {
  if (b.is_zero()) throw std::domain_error("division by zero ring value");
  if (std::max(a.kind(), b.kind()) == RingKind::Complex) return RingValue(a.as_complex() / b.as_complex());
  return RingValue(Rational(a.as_rational() / b.as_rational()));
}

RingValue RingValue::operator-() const {
  return std::visit([](const auto& x) { return RingValue(std::decay_t<decltype(x)>(-x)); }, value_);
}

bool operator==(const RingValue& a, const RingValue& b) {
  RingKind k = std::max(a.kind(), b.kind());
  if (k == RingKind::Complex) return a.as_complex() == b.as_complex();
  if (k == RingKind::Integer) return std::get<Integer>(a.value_) == std::get<Integer>(b.value_);
  return a.as_rational() == b.as_rational();
}

bool approx_equal(const RingValue& a, const RingValue& b, double rel_tol) {
  if (a.kind() != RingKind::Complex && b.kind() != RingKind::Complex) return a == b;
  Complex x = a.as_complex();
  Complex y = b.as_complex();
  double scale = std::max({1.0, std::abs(x), std::abs(y)});
  return std::abs(x - y) <= rel_tol * scale;
}

std::string shortest_double(double x) {
  if (x == 0.0) return "0";
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

std::string format_complex(const Complex& z) {
  // -0 prints as 0 so equal values always render identically.
  double re = z.real() == 0.0 ? 0.0 : z.real();
  double im = z.imag() == 0.0 ? 0.0 : z.imag();
  std::array<char, 96> buf{};
  std::snprintf(buf.data(), buf.size(), "%.12g%+.12gi", re, im);
  return buf.data();
}

}  // namespace wmc

#pragma once

// Exact arithmetic in K = Q(w), w = (1 + i*sqrt(7)) / 2, and on vectors of K^3.

#include <array>
#include <complex>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace klein {

using Rational = mpq_class;

/// n / d in lowest terms. mpq_class(n, d) alone does not reduce.
Rational ratio(long n, long d);
/// Canonical text of a rational: "p" when the denominator is 1, else "p/q".
std::string rational_str(const Rational& r);
Rational parse_rational(std::string_view text);
/// Three-way comparison of two rationals.
std::strong_ordering compare(const Rational& a, const Rational& b);

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in K") {}
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// x + y*w with w^2 = w - 2. Immutable value type.
class QNum {
 public:
  QNum() = default;
  QNum(long x) : x_(x), y_(0) {}  // NOLINT: implicit from integers is intended
  QNum(Rational x, Rational y) : x_(std::move(x)), y_(std::move(y)) {}

  static QNum w() { return {0, 1}; }
  static QNum w_bar() { return {1, -1}; }
  /// i*sqrt(7) = 2w - 1.
  static QNum i_sqrt7() { return {-1, 2}; }

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }

  bool is_zero() const { return sgn(x_) == 0 && sgn(y_) == 0; }
  /// Both coefficients are integers, i.e. the value lies in Z[w].
  bool is_integral() const;

  QNum conj() const { return {x_ + y_, -y_}; }
  /// x^2 + xy + 2y^2.
  Rational norm() const { return x_ * x_ + x_ * y_ + 2 * y_ * y_; }
  QNum inv() const;

  std::complex<double> embed() const;

  QNum operator-() const { return {-x_, -y_}; }
  friend QNum operator+(const QNum& a, const QNum& b) { return {a.x_ + b.x_, a.y_ + b.y_}; }
  friend QNum operator-(const QNum& a, const QNum& b) { return {a.x_ - b.x_, a.y_ - b.y_}; }
  friend QNum operator*(const QNum& a, const QNum& b);
  friend QNum operator/(const QNum& a, const QNum& b) { return a * b.inv(); }
  QNum& operator+=(const QNum& o) { return *this = *this + o; }
  QNum& operator-=(const QNum& o) { return *this = *this - o; }
  QNum& operator*=(const QNum& o) { return *this = *this * o; }

  friend bool operator==(const QNum& a, const QNum& b) { return a.x_ == b.x_ && a.y_ == b.y_; }
  /// Lexicographic on (x, y); a total order used only for canonical choices.
  friend std::strong_ordering operator<=>(const QNum& a, const QNum& b);

  /// "x+y*w", e.g. "1/2-1/2*w". Both parts are always printed.
  std::string str() const;
  /// Accepts the canonical form and the obvious shorthands ("w", "-w", "3", "1/2*w", "2-w").
  static QNum parse(std::string_view text);

 private:
  Rational x_{0};
  Rational y_{0};
};

struct CVec3 {
  std::array<QNum, 3> v{};

  QNum& operator[](std::size_t i) { return v[i]; }
  const QNum& operator[](std::size_t i) const { return v[i]; }

  friend CVec3 operator+(const CVec3& a, const CVec3& b);
  friend CVec3 operator-(const CVec3& a, const CVec3& b);
  friend CVec3 operator*(const QNum& s, const CVec3& a);
  CVec3 operator-() const { return QNum(-1) * *this; }
  friend bool operator==(const CVec3&, const CVec3&) = default;
  friend std::strong_ordering operator<=>(const CVec3& a, const CVec3& b);

  bool is_zero() const { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }
  std::string str() const;
};

/// (x, y) = 1/2 * sum conj(x_i) y_i.
QNum hermitian(const CVec3& x, const CVec3& y);

}  // namespace klein

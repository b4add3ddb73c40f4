#include "klein/qnum.hpp"

#include <cctype>
#include <cmath>
#include <regex>
#include <vector>

namespace klein {

Rational ratio(long n, long d) {
  if (d == 0) throw DivisionByZero();
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string rational_str(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  static const std::regex pattern(R"([+-]?\d+(/\d+)?)");
  std::string s(text);
  if (!std::regex_match(s, pattern)) throw ParseError("not a rational: '" + s + "'");
  if (s.front() == '+') s.erase(0, 1);
  Rational r(s, 10);
  if (r.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

std::strong_ordering compare(const Rational& a, const Rational& b) {
  int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool QNum::is_integral() const { return x_.get_den() == 1 && y_.get_den() == 1; }

QNum QNum::inv() const {
  if (is_zero()) throw DivisionByZero();
  Rational n = norm();
  QNum c = conj();
  return {c.x_ / n, c.y_ / n};
}

std::complex<double> QNum::embed() const {
  static const double half_sqrt7 = std::sqrt(7.0) / 2.0;
  double x = x_.get_d();
  double y = y_.get_d();
  return {x + 0.5 * y, y * half_sqrt7};
}

QNum operator*(const QNum& a, const QNum& b) {
  // (a + b w)(c + d w) = ac - 2bd + (ad + bc + bd) w
  Rational bd = a.y_ * b.y_;
  return {a.x_ * b.x_ - 2 * bd, a.x_ * b.y_ + a.y_ * b.x_ + bd};
}

std::strong_ordering operator<=>(const QNum& a, const QNum& b) {
  if (auto c = compare(a.x_, b.x_); c != 0) return c;
  return compare(a.y_, b.y_);
}

std::string QNum::str() const {
  std::string out = rational_str(x_);
  if (sgn(y_) < 0) {
    out += "-" + rational_str(-y_);
  } else {
    out += "+" + rational_str(y_);
  }
  return out + "*w";
}

QNum QNum::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty element of K");

  // Split into signed terms; a sign directly after '/' or at the start belongs to the term.
  std::vector<std::string> terms;
  std::size_t start = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/') {
      terms.push_back(s.substr(start, i - start));
      start = i;
    }
  }
  terms.push_back(s.substr(start));

  Rational x = 0, y = 0;
  bool seen_x = false, seen_y = false;
  for (const auto& term : terms) {
    if (term.empty() || term == "+" || term == "-") throw ParseError("malformed element of K: '" + s + "'");
    if (term.back() == 'w') {
      if (seen_y) throw ParseError("repeated w term: '" + s + "'");
      seen_y = true;
      std::string coeff = term.substr(0, term.size() - 1);
      if (coeff.empty() || coeff == "+") {
        y = 1;
      } else if (coeff == "-") {
        y = -1;
      } else {
        if (coeff.back() != '*') throw ParseError("expected '*w': '" + s + "'");
        coeff.pop_back();
        y = parse_rational(coeff);
      }
    } else {
      if (seen_x) throw ParseError("repeated constant term: '" + s + "'");
      seen_x = true;
      x = parse_rational(term);
    }
  }
  return {x, y};
}

CVec3 operator+(const CVec3& a, const CVec3& b) { return {{a[0] + b[0], a[1] + b[1], a[2] + b[2]}}; }
CVec3 operator-(const CVec3& a, const CVec3& b) { return {{a[0] - b[0], a[1] - b[1], a[2] - b[2]}}; }
CVec3 operator*(const QNum& s, const CVec3& a) { return {{s * a[0], s * a[1], s * a[2]}}; }

std::strong_ordering operator<=>(const CVec3& a, const CVec3& b) {
  for (std::size_t i = 0; i < 3; ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string CVec3::str() const { return "(" + v[0].str() + ", " + v[1].str() + ", " + v[2].str() + ")"; }

QNum hermitian(const CVec3& x, const CVec3& y) {
  QNum s;
  for (std::size_t i = 0; i < 3; ++i) s += x[i].conj() * y[i];
  return QNum(ratio(1, 2), 0) * s;
}

}  // namespace klein

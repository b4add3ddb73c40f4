#include "klein/quartic.hpp"

#include <stdexcept>

#include "klein/group.hpp"

namespace klein {

namespace {

// Homogeneous polynomial of degree <= 4 stored densely by exponent triple.
using Poly = std::array<std::array<std::array<QNum, 5>, 5>, 5>;

Poly times_linear(const Poly& p, const std::array<QNum, 3>& l) {
  Poly out{};
  for (int a = 0; a < 5; ++a)
    for (int b = 0; a + b < 5; ++b)
      for (int c = 0; a + b + c < 5; ++c) {
        const QNum& x = p[a][b][c];
        if (x.is_zero()) continue;
        if (a < 4 && !l[0].is_zero()) out[a + 1][b][c] += x * l[0];
        if (b < 4 && !l[1].is_zero()) out[a][b + 1][c] += x * l[1];
        if (c < 4 && !l[2].is_zero()) out[a][b][c + 1] += x * l[2];
      }
  return out;
}

}  // namespace

const std::array<Exponent, 15>& quartic_monomials() {
  static const std::array<Exponent, 15> m = [] {
    std::array<Exponent, 15> out{};
    std::size_t k = 0;
    // degrevlex: smaller power of the last variable first, then of the middle one.
    for (int c = 0; c <= 4; ++c)
      for (int b = 0; b + c <= 4; ++b) out[k++] = {4 - b - c, b, c};
    return out;
  }();
  return m;
}

std::size_t monomial_index(const Exponent& e) {
  const auto& m = quartic_monomials();
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] == e) return i;
  throw std::invalid_argument("not a degree-4 exponent");
}

QNum QuarticForm::eval(const CVec3& v) const {
  QNum sum;
  const auto& m = quartic_monomials();
  for (std::size_t i = 0; i < 15; ++i) {
    if (coeff[i].is_zero()) continue;
    QNum t = coeff[i];
    for (std::size_t j = 0; j < 3; ++j)
      for (int k = 0; k < m[i][j]; ++k) t *= v[j];
    sum += t;
  }
  return sum;
}

std::string QuarticForm::str() const {
  static const char* var[3] = {"x", "y", "z"};
  std::string out;
  const auto& m = quartic_monomials();
  for (std::size_t i = 0; i < 15; ++i) {
    if (coeff[i].is_zero()) continue;
    std::string mono;
    for (std::size_t j = 0; j < 3; ++j) {
      if (m[i][j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var[j];
      if (m[i][j] > 1) mono += "^" + std::to_string(m[i][j]);
    }
    if (!out.empty()) out += " + ";
    if (coeff[i] == QNum(1)) out += mono;
    else out += "(" + coeff[i].str() + ")*" + mono;
  }
  return out.empty() ? "0" : out;
}

QuarticForm klein_quartic() {
  QuarticForm f;
  f[{4, 0, 0}] = 1;
  f[{0, 4, 0}] = 1;
  f[{0, 0, 4}] = 1;
  const QNum mixed = QNum(-3) * QNum::w_bar();
  f[{2, 2, 0}] = mixed;
  f[{2, 0, 2}] = mixed;
  f[{0, 2, 2}] = mixed;
  return f;
}

QuarticForm act(const Mat3& m, const QuarticForm& f) {
  // x_i -> sum_j m(i, j) x_j
  std::array<std::array<QNum, 3>, 3> rows;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) rows[i][j] = m(i, j);
  Poly acc{};
  const auto& mons = quartic_monomials();
  for (std::size_t k = 0; k < 15; ++k) {
    if (f.coeff[k].is_zero()) continue;
    Poly p{};
    p[0][0][0] = f.coeff[k];
    for (std::size_t i = 0; i < 3; ++i)
      for (int e = 0; e < mons[k][i]; ++e) p = times_linear(p, rows[i]);
    for (const auto& e : mons) acc[e[0]][e[1]][e[2]] += p[e[0]][e[1]][e[2]];
  }
  QuarticForm out;
  for (std::size_t k = 0; k < 15; ++k) out.coeff[k] = acc[mons[k][0]][mons[k][1]][mons[k][2]];
  return out;
}

bool verify_quartic_invariance() {
  const auto f = klein_quartic();
  for (const auto& e : Group::instance().elements())
    if (act(e.mat, f) != f) return false;
  return true;
}

}  // namespace klein

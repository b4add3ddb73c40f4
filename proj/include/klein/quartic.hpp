#pragma once

// Ternary quartic forms over K and the linear substitution action of 3x3 matrices.

#include <array>
#include <string>

#include "klein/linalg.hpp"

namespace klein {

using Exponent = std::array<int, 3>;

/// The 15 exponent triples of degree 4 in degrevlex order (x > y > z).
const std::array<Exponent, 15>& quartic_monomials();
/// Position of a degree-4 exponent triple in quartic_monomials().
std::size_t monomial_index(const Exponent& e);

struct QuarticForm {
  std::array<QNum, 15> coeff{};

  QNum& operator[](const Exponent& e) { return coeff[monomial_index(e)]; }
  const QNum& operator[](const Exponent& e) const { return coeff[monomial_index(e)]; }
  friend bool operator==(const QuarticForm&, const QuarticForm&) = default;

  /// Value at a point of K^3.
  QNum eval(const CVec3& v) const;
  /// Nonzero terms in monomial order, e.g. "x^4 + (-3+3*w)*x^2*y^2".
  std::string str() const;
};

/// x^4 + y^4 + z^4 - 3 wbar (x^2 y^2 + x^2 z^2 + y^2 z^2).
QuarticForm klein_quartic();

/// F o m, i.e. v -> F(m v), by exact expansion. act(m n, F) = act(n, act(m, F)).
QuarticForm act(const Mat3& m, const QuarticForm& f);

/// The Klein quartic is fixed by every element of G.
bool verify_quartic_invariance();

}  // namespace klein

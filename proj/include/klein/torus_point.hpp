#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "klein/linalg.hpp"

namespace klein {

/// A torsion point of C^3 / Lambda, stored in epsilon coordinates modulo Z^6 as
/// numerators over the smallest common denominator. Numerators lie in [0, den).
class TorusPoint {
 public:
  TorusPoint() { num_.fill(0); }
  explicit TorusPoint(std::span<const Rational> eps_coords);
  static TorusPoint from_numerators(const std::array<std::int64_t, 6>& num, std::int64_t den);
  static TorusPoint from_vector(const CVec3& v) { return TorusPoint(to_eps_coords(v)); }

  std::int64_t denominator() const { return den_; }
  const std::array<std::int64_t, 6>& numerators() const { return num_; }
  RatVec6 coords() const;
  /// A representative in K^3.
  CVec3 to_vector() const { return from_eps_coords(coords()); }
  bool is_zero() const { return den_ == 1; }

  TorusPoint operator+(const TorusPoint& o) const;
  TorusPoint operator-(const TorusPoint& o) const;
  TorusPoint operator-() const;
  TorusPoint times(std::int64_t k) const;
  /// Image under a lattice automorphism given in the epsilon basis.
  TorusPoint apply(const IntMat6& m) const;
  /// True iff m * u == u mod Z^6.
  bool fixed_by(const IntMat6& m) const;

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
  /// Lexicographic on the coordinate values in [0, 1).
  friend std::strong_ordering operator<=>(const TorusPoint& a, const TorusPoint& b);

  /// "[n1/d1,n2/d2,...]" with each coordinate in lowest terms.
  std::string str() const;
  static TorusPoint parse(std::string_view text);

 private:
  void normalize();

  std::array<std::int64_t, 6> num_{};
  std::int64_t den_ = 1;
};

struct TorusPointHash {
  std::size_t operator()(const TorusPoint& p) const noexcept;
};

}  // namespace klein

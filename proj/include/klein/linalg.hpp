#pragma once

// Exact linear algebra over K and Z: 3x3 matrices over K, the epsilon basis of
// the lattice, and Hermite / Smith normal forms of small integer matrices.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "klein/qnum.hpp"

namespace klein {

using RatVec6 = std::array<Rational, 6>;

class NonIntegral : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// int64 arithmetic that throws std::overflow_error instead of wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

struct Mat3 {
  std::array<std::array<QNum, 3>, 3> a{};

  static Mat3 identity();
  static Mat3 scalar(const QNum& s);
  /// Row-major, nine entries.
  static Mat3 from_rows(std::span<const QNum> entries);

  QNum& operator()(std::size_t i, std::size_t j) { return a[i][j]; }
  const QNum& operator()(std::size_t i, std::size_t j) const { return a[i][j]; }

  friend Mat3 operator*(const Mat3& x, const Mat3& y);
  friend CVec3 operator*(const Mat3& m, const CVec3& v);
  friend Mat3 operator+(const Mat3& x, const Mat3& y);
  friend Mat3 operator-(const Mat3& x, const Mat3& y);
  Mat3 operator-() const;
  friend bool operator==(const Mat3&, const Mat3&) = default;

  QNum det() const;
  QNum trace() const { return a[0][0] + a[1][1] + a[2][2]; }
  Mat3 conj_transpose() const;
  CVec3 column(std::size_t j) const { return {{a[0][j], a[1][j], a[2][j]}}; }
  bool is_unitary() const { return conj_transpose() * *this == identity(); }
  /// "[[a, b, c], [d, e, f], [g, h, i]]" with QNum entries.
  std::string str() const;
  /// Inverse of str(); brackets and spaces are optional, nine comma-separated entries.
  static Mat3 parse(std::string_view text);
};

/// Dense integer matrix, row-major. Lattice bases are stored one vector per row.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), d_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }

  std::vector<std::int64_t> row(std::size_t i) const;
  IntMatrix transpose() const;
  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend IntMatrix operator-(const IntMatrix& x, const IntMatrix& y);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row i += k * row j
  void add_row_multiple(std::size_t i, std::size_t j, std::int64_t k);
  void add_col_multiple(std::size_t i, std::size_t j, std::int64_t k);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> d_;
};

/// Exact determinant of a square integer matrix (fraction-free elimination).
std::int64_t determinant(const IntMatrix& m);

/// The 6x6 integer matrix of a lattice automorphism in the epsilon basis.
struct IntMat6 {
  std::array<std::int64_t, 36> e{};

  static IntMat6 identity();
  std::int64_t operator()(std::size_t i, std::size_t j) const { return e[i * 6 + j]; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return e[i * 6 + j]; }
  friend IntMat6 operator*(const IntMat6& x, const IntMat6& y);
  friend IntMat6 operator-(const IntMat6& x, const IntMat6& y);
  friend bool operator==(const IntMat6&, const IntMat6&) = default;
  friend auto operator<=>(const IntMat6&, const IntMat6&) = default;
  IntMatrix to_matrix() const;
};

struct IntMat6Hash {
  std::size_t operator()(const IntMat6& m) const noexcept;
};

/// Dense rational matrix used for basis changes and projections.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), d_(rows * cols) {}
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }
  friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;
  std::vector<Rational> apply(std::span<const Rational> v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> d_;
};

std::optional<RatMatrix> inverse(const RatMatrix& m);
/// Solves m * x = b; nullopt when inconsistent. Free variables are set to zero.
std::optional<std::vector<Rational>> solve(const RatMatrix& m, std::span<const Rational> b);

/// Change of basis between K^3 (charted as the six rational coefficients
/// (x1, y1, x2, y2, x3, y3)) and the epsilon basis of the lattice,
/// (w e1, w e2, w e3, wbar e1, wbar e2, wbar e3) with e1 = (0, w, w),
/// e2 = (0, 0, 2), e3 = (1, 1, wbar).
struct BasisMap {
  RatMatrix forward;  // columns: epsilon_j in chart coordinates
  RatMatrix inverse;
};

const BasisMap& eps_basis();
/// The basic roots e1, e2, e3.
const std::array<CVec3, 3>& basic_roots();
/// epsilon_1 .. epsilon_6 as vectors of K^3.
const std::array<CVec3, 6>& eps_vectors();

RatVec6 to_eps_coords(const CVec3& v);
CVec3 from_eps_coords(std::span<const Rational> c);

/// Matrix of m in the epsilon basis. Throws NonIntegral when m does not preserve the lattice.
IntMat6 mat3_to_int6(const Mat3& m);

struct SmithForm {
  IntMatrix u;  // rows x rows, unimodular
  IntMatrix d;  // rows x cols, diagonal, d_i | d_{i+1}, d_i >= 0
  IntMatrix v;  // cols x cols, unimodular
  std::vector<std::int64_t> diagonal() const;
  std::size_t rank() const;
};

/// U * A * V = D.
SmithForm smith_normal_form(const IntMatrix& a);

/// Row-style Hermite normal form of the lattice spanned by the rows: echelon,
/// positive pivots, entries above each pivot reduced into [0, pivot). Zero rows dropped.
IntMatrix hnf_row_lattice(const IntMatrix& rows);

/// Basis (as rows, in HNF) of {x in Z^n : a * x = 0}. This lattice is saturated.
IntMatrix integer_kernel(const IntMatrix& a);

/// A sublattice of Z^n kept in canonical HNF.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(const IntMatrix& generators);

  const IntMatrix& basis() const { return hnf_; }
  std::size_t rank() const { return hnf_.rows(); }
  std::size_t dim() const { return hnf_.cols(); }
  bool contains(std::span<const std::int64_t> v) const;
  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  IntMatrix hnf_;
};

/// K-basis of ker(m), reduced echelon form over K. Empty when m is invertible.
std::vector<CVec3> kernel_K(const Mat3& m);

}  // namespace klein

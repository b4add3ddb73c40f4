#include "klein/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace klein {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in addition");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in multiplication");
  return r;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Quotient rounded to nearest, so the remainder has absolute value at most |b| / 2.
std::int64_t nearest_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = floor_div(a, b);
  const std::int64_t r = a - q * b;
  if (2 * std::llabs(r) > std::llabs(b)) ++q;
  return q;
}

std::int64_t to_int64(const Rational& r) {
  if (r.get_den() != 1 || !r.get_num().fits_slong_p()) throw NonIntegral("not a machine integer: " + rational_str(r));
  return r.get_num().get_si();
}

}  // namespace

// ---------------------------------------------------------------- Mat3

Mat3 Mat3::identity() { return scalar(1); }

Mat3 Mat3::scalar(const QNum& s) {
  Mat3 m;
  for (std::size_t i = 0; i < 3; ++i) m.a[i][i] = s;
  return m;
}

Mat3 Mat3::from_rows(std::span<const QNum> entries) {
  if (entries.size() != 9) throw std::invalid_argument("Mat3 needs nine entries");
  Mat3 m;
  for (std::size_t i = 0; i < 9; ++i) m.a[i / 3][i % 3] = entries[i];
  return m;
}

Mat3 operator*(const Mat3& x, const Mat3& y) {
  Mat3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      r.a[i][j] = x.a[i][0] * y.a[0][j] + x.a[i][1] * y.a[1][j] + x.a[i][2] * y.a[2][j];
  return r;
}

CVec3 operator*(const Mat3& m, const CVec3& v) {
  CVec3 r;
  for (std::size_t i = 0; i < 3; ++i) r[i] = m.a[i][0] * v[0] + m.a[i][1] * v[1] + m.a[i][2] * v[2];
  return r;
}

Mat3 operator+(const Mat3& x, const Mat3& y) {
  Mat3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r.a[i][j] = x.a[i][j] + y.a[i][j];
  return r;
}

Mat3 operator-(const Mat3& x, const Mat3& y) {
  Mat3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r.a[i][j] = x.a[i][j] - y.a[i][j];
  return r;
}

Mat3 Mat3::operator-() const { return Mat3::scalar(-1) * *this; }

QNum Mat3::det() const {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Mat3 Mat3::conj_transpose() const {
  Mat3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r.a[i][j] = a[j][i].conj();
  return r;
}

std::string Mat3::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < 3; ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < 3; ++j) s += (j ? ", " : "") + a[i][j].str();
    s += "]";
  }
  return s + "]";
}

Mat3 Mat3::parse(std::string_view text) {
  std::string flat;
  for (char ch : text)
    if (ch != '[' && ch != ']' && !std::isspace(static_cast<unsigned char>(ch))) flat.push_back(ch);
  std::vector<QNum> entries;
  std::size_t start = 0;
  for (;;) {
    const auto comma = flat.find(',', start);
    entries.push_back(QNum::parse(std::string_view(flat).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (entries.size() != 9) throw ParseError("a 3x3 matrix needs nine entries, got " + std::to_string(entries.size()));
  return from_rows(entries);
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged integer matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::int64_t> IntMatrix::row(std::size_t i) const {
  return {d_.begin() + static_cast<std::ptrdiff_t>(i * cols_), d_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols() != y.rows()) throw std::invalid_argument("IntMatrix shape mismatch");
  IntMatrix r(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k) {
      std::int64_t xik = x(i, k);
      if (xik == 0) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) r(i, j) = checked_add(r(i, j), checked_mul(xik, y(k, j)));
    }
  return r;
}

IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("IntMatrix shape mismatch");
  IntMatrix r(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = checked_sub(x(i, j), y(i, j));
  return r;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, std::int64_t k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = checked_add((*this)(i, c), checked_mul(k, (*this)(j, c)));
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, std::int64_t k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) = checked_add((*this)(r, i), checked_mul(k, (*this)(r, j)));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = checked_sub(0, (*this)(i, c));
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) = checked_sub(0, (*this)(r, j));
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

std::int64_t determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<__int128> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
    prev = a[k * n + k];
  }
  __int128 d = sign * a[n * n - 1];
  if (d > INT64_MAX || d < INT64_MIN) throw std::overflow_error("determinant exceeds int64");
  return static_cast<std::int64_t>(d);
}

// ---------------------------------------------------------------- IntMat6

IntMat6 IntMat6::identity() {
  IntMat6 m;
  for (std::size_t i = 0; i < 6; ++i) m(i, i) = 1;
  return m;
}

IntMat6 operator*(const IntMat6& x, const IntMat6& y) {
  IntMat6 r;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t k = 0; k < 6; ++k) {
      std::int64_t xik = x(i, k);
      if (xik == 0) continue;
      for (std::size_t j = 0; j < 6; ++j) r(i, j) += xik * y(k, j);
    }
  return r;
}

IntMat6 operator-(const IntMat6& x, const IntMat6& y) {
  IntMat6 r;
  for (std::size_t i = 0; i < 36; ++i) r.e[i] = x.e[i] - y.e[i];
  return r;
}

IntMatrix IntMat6::to_matrix() const {
  IntMatrix m(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) m(i, j) = (*this)(i, j);
  return m;
}

std::size_t IntMat6Hash::operator()(const IntMat6& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : m.e) h = (h ^ static_cast<std::size_t>(v + 1024)) * 1099511628211ull;
  return h;
}

// ---------------------------------------------------------------- RatMatrix

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
  if (x.cols() != y.rows()) throw std::invalid_argument("RatMatrix shape mismatch");
  RatMatrix r(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k) {
      if (sgn(x(i, k)) == 0) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) r(i, j) += x(i, k) * y(k, j);
    }
  return r;
}

std::vector<Rational> RatMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("RatMatrix::apply shape mismatch");
  std::vector<Rational> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
    Rational piv = m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) /= piv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) return std::nullopt;
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  if (rref(aug, n).size() != n) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<std::vector<Rational>> solve(const RatMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
  const std::size_t n = m.cols();
  RatMatrix aug(m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  auto pivots = rref(aug, n);
  for (std::size_t i = pivots.size(); i < m.rows(); ++i)
    if (sgn(aug(i, n)) != 0) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, n);
  return x;
}

// ---------------------------------------------------------------- epsilon basis

const std::array<CVec3, 3>& basic_roots() {
  static const std::array<CVec3, 3> roots = {
      CVec3{{QNum(0), QNum::w(), QNum::w()}},
      CVec3{{QNum(0), QNum(0), QNum(2)}},
      CVec3{{QNum(1), QNum(1), QNum::w_bar()}},
  };
  return roots;
}

const std::array<CVec3, 6>& eps_vectors() {
  static const std::array<CVec3, 6> eps = [] {
    const auto& e = basic_roots();
    return std::array<CVec3, 6>{QNum::w() * e[0],     QNum::w() * e[1],     QNum::w() * e[2],
                                QNum::w_bar() * e[0], QNum::w_bar() * e[1], QNum::w_bar() * e[2]};
  }();
  return eps;
}

namespace {

std::array<Rational, 6> chart(const CVec3& v) { return {v[0].x(), v[0].y(), v[1].x(), v[1].y(), v[2].x(), v[2].y()}; }

}  // namespace

const BasisMap& eps_basis() {
  static const BasisMap map = [] {
    BasisMap b;
    b.forward = RatMatrix(6, 6);
    const auto& eps = eps_vectors();
    for (std::size_t j = 0; j < 6; ++j) {
      auto c = chart(eps[j]);
      for (std::size_t i = 0; i < 6; ++i) b.forward(i, j) = c[i];
    }
    auto inv = inverse(b.forward);
    if (!inv) throw std::logic_error("epsilon vectors are not a Q-basis");
    b.inverse = *inv;
    return b;
  }();
  return map;
}

RatVec6 to_eps_coords(const CVec3& v) {
  auto c = chart(v);
  auto r = eps_basis().inverse.apply(c);
  RatVec6 out;
  std::copy(r.begin(), r.end(), out.begin());
  return out;
}

CVec3 from_eps_coords(std::span<const Rational> c) {
  if (c.size() != 6) throw std::invalid_argument("epsilon coordinates need six entries");
  auto r = eps_basis().forward.apply(c);
  return CVec3{{QNum(r[0], r[1]), QNum(r[2], r[3]), QNum(r[4], r[5])}};
}

IntMat6 mat3_to_int6(const Mat3& m) {
  IntMat6 out;
  const auto& eps = eps_vectors();
  for (std::size_t j = 0; j < 6; ++j) {
    RatVec6 col = to_eps_coords(m * eps[j]);
    for (std::size_t i = 0; i < 6; ++i) {
      if (col[i].get_den() != 1)
        throw NonIntegral("matrix does not preserve the lattice: entry (" + std::to_string(i) + "," + std::to_string(j) +
                          ") = " + rational_str(col[i]));
      out(i, j) = to_int64(col[i]);
    }
  }
  return out;
}

// ---------------------------------------------------------------- Smith / Hermite

std::vector<std::int64_t> SmithForm::diagonal() const {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (auto x : diagonal()) r += (x != 0);
  return r;
}

SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t m = input.rows(), n = input.cols();
  IntMatrix a = input;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    bool exhausted = false;
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = m, pc = n;
      std::int64_t best = 0;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          std::int64_t x = std::llabs(a(i, j));
          if (x != 0 && (best == 0 || x < best)) {
            best = x;
            pr = i;
            pc = j;
          }
        }
      if (best == 0) {
        exhausted = true;
        break;
      }
      a.swap_rows(t, pr);
      u.swap_rows(t, pr);
      a.swap_cols(t, pc);
      v.swap_cols(t, pc);
      if (a(t, t) < 0) {
        a.negate_row(t);
        u.negate_row(t);
      }
      const std::int64_t p = a(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        std::int64_t q = nearest_div(a(i, t), p);
        a.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        clean = clean && a(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        std::int64_t q = nearest_div(a(t, j), p);
        a.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        clean = clean && a(t, j) == 0;
      }
      if (!clean) continue;
      // Divisibility: fold an offending row into the pivot row and go again.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % p != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      a.add_row_multiple(t, bad, 1);
      u.add_row_multiple(t, bad, 1);
    }
    if (exhausted) break;
  }
  return {std::move(u), std::move(a), std::move(v)};
}

IntMatrix hnf_row_lattice(const IntMatrix& rows) {
  IntMatrix h = rows;
  const std::size_t m = h.rows(), n = h.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (;;) {
      std::size_t p = m;
      std::int64_t best = 0;
      for (std::size_t i = r; i < m; ++i) {
        std::int64_t x = std::llabs(h(i, c));
        if (x != 0 && (best == 0 || x < best)) {
          best = x;
          p = i;
        }
      }
      if (p == m) break;
      h.swap_rows(r, p);
      if (h(r, c) < 0) h.negate_row(r);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        h.add_row_multiple(i, r, -floor_div(h(i, c), h(r, c)));
        clean = clean && h(i, c) == 0;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;
    for (std::size_t i = 0; i < r; ++i) h.add_row_multiple(i, r, -floor_div(h(i, c), h(r, c)));
    ++r;
  }
  IntMatrix out(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = h(i, j);
  return out;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  const std::size_t rank = s.rank(), n = a.cols();
  IntMatrix basis(n - rank, n);
  for (std::size_t k = rank; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) basis(k - rank, i) = s.v(i, k);
  return hnf_row_lattice(basis);
}

Lattice::Lattice(const IntMatrix& generators) : hnf_(hnf_row_lattice(generators)) {}

bool Lattice::contains(std::span<const std::int64_t> v) const {
  if (v.size() != hnf_.cols()) throw std::invalid_argument("Lattice::contains dimension mismatch");
  std::vector<std::int64_t> w(v.begin(), v.end());
  for (std::size_t i = 0; i < hnf_.rows(); ++i) {
    std::size_t p = 0;
    while (hnf_(i, p) == 0) ++p;
    if (w[p] % hnf_(i, p) != 0) return false;
    std::int64_t q = w[p] / hnf_(i, p);
    for (std::size_t j = p; j < w.size(); ++j) w[j] = checked_sub(w[j], checked_mul(q, hnf_(i, j)));
  }
  return std::all_of(w.begin(), w.end(), [](std::int64_t x) { return x == 0; });
}

std::vector<CVec3> kernel_K(const Mat3& input) {
  Mat3 m = input;
  std::array<int, 3> pivot_col{-1, -1, -1};
  std::size_t r = 0;
  for (std::size_t c = 0; c < 3 && r < 3; ++c) {
    std::size_t p = r;
    while (p < 3 && m(p, c).is_zero()) ++p;
    if (p == 3) continue;
    std::swap(m.a[r], m.a[p]);
    QNum inv = m(r, c).inv();
    for (std::size_t j = 0; j < 3; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < 3; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      QNum f = m(i, c);
      for (std::size_t j = 0; j < 3; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_col[r] = static_cast<int>(c);
    ++r;
  }
  std::vector<CVec3> basis;
  for (std::size_t free = 0; free < 3; ++free) {
    bool is_pivot = false;
    for (std::size_t i = 0; i < r; ++i) is_pivot = is_pivot || pivot_col[i] == static_cast<int>(free);
    if (is_pivot) continue;
    CVec3 v;
    v[free] = 1;
    for (std::size_t i = 0; i < r; ++i) v[static_cast<std::size_t>(pivot_col[i])] = -m(i, free);
    basis.push_back(v);
  }
  return basis;
}

}  // namespace klein

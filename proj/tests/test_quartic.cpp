#include <doctest.h>

#include "klein/group.hpp"
#include "klein/quartic.hpp"

using namespace klein;

TEST_CASE("monomials") {
  const auto& m = quartic_monomials();
  CHECK(m.front() == Exponent{4, 0, 0});
  CHECK(m.back() == Exponent{0, 0, 4});
  for (std::size_t i = 0; i < m.size(); ++i) {
    CHECK(m[i][0] + m[i][1] + m[i][2] == 4);
    CHECK(monomial_index(m[i]) == i);
  }
}

TEST_CASE("klein quartic") {
  const auto f = klein_quartic();
  CHECK(f[{4, 0, 0}] == QNum(1));
  CHECK(f[{2, 2, 0}] == QNum(-3) * QNum::w_bar());
  CHECK(f[{1, 1, 2}].is_zero());
  CHECK(f.eval(CVec3{{1, 0, 0}}) == QNum(1));
  CHECK(f.eval(CVec3{{1, 1, 1}}) == QNum(3) - QNum(9) * QNum::w_bar());
}

TEST_CASE("invariance") {
  const auto f = klein_quartic();
  CHECK(act(Mat3::identity(), f) == f);
  CHECK(act(-Mat3::identity(), f) == f);
  for (const auto& g : generator_matrices()) CHECK(act(g, f) == f);
  CHECK(verify_quartic_invariance());
  Mat3 d = Mat3::identity();
  d(0, 0) = QNum::w() / QNum::w_bar();
  CHECK_FALSE(act(d, f) == f);
}

TEST_CASE("right action") {
  const auto f = klein_quartic();
  Mat3 m = Mat3::identity(), n = Mat3::identity();
  m(0, 1) = QNum::w();
  m(2, 0) = 3;
  n(1, 2) = QNum(-1, 2);
  n(0, 0) = 2;
  CHECK(act(m * n, f) == act(n, act(m, f)));
  const CVec3 v{{1, QNum::w(), 2}};
  CHECK(act(m, f).eval(v) == f.eval(m * v));
}

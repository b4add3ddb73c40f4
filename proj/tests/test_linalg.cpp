#include <doctest.h>

#include <random>

#include "klein/group.hpp"
#include "klein/linalg.hpp"

using namespace klein;

namespace {

IntMatrix scalar6(std::int64_t s) {
  IntMatrix m(6, 6);
  for (std::size_t i = 0; i < 6; ++i) m(i, i) = s;
  return m;
}

std::int64_t diag_product(const SmithForm& s) {
  std::int64_t p = 1;
  for (auto d : s.diagonal()) p *= d;
  return p;
}

}  // namespace

TEST_CASE("epsilon coordinates") {
  const auto& e = basic_roots();
  const RatVec6 e1 = to_eps_coords(e[0]);
  CHECK(e1 == RatVec6{1, 0, 0, 1, 0, 0});
  CHECK(to_eps_coords(eps_vectors()[2]) == RatVec6{0, 0, 1, 0, 0, 0});
  // eta1 as a vector of C^3: (i sqrt7 / 7, (7 + i sqrt7) / 14, 1 - 2 i sqrt7 / 7).
  const QNum s = QNum::i_sqrt7();
  const CVec3 eta1{{s * QNum(ratio(1, 7), 0), (QNum(7) + s) * QNum(ratio(1, 14), 0), QNum(1) - s * QNum(ratio(2, 7), 0)}};
  CHECK(to_eps_coords(eta1) == RatVec6{ratio(-1, 7), ratio(-1, 7), ratio(1, 7), ratio(1, 7), ratio(1, 7), ratio(-1, 7)});
  CHECK(eps_basis().forward * eps_basis().inverse == RatMatrix::identity(6));
  for (const auto& v : eps_vectors()) CHECK(from_eps_coords(to_eps_coords(v)) == v);
}

TEST_CASE("integer matrices of group elements") {
  const auto& G = Group::instance();
  CHECK(mat3_to_int6(Mat3::identity()) == IntMat6::identity());
  IntMat6 minus;
  for (std::size_t i = 0; i < 6; ++i) minus(i, i) = -1;
  CHECK(mat3_to_int6(-Mat3::identity()) == minus);
  CHECK(determinant(G[G.named("g7")].int6.to_matrix()) == 1);
  CHECK(determinant(G[G.named("r1")].int6.to_matrix()) == 1);
  CHECK_THROWS_AS(mat3_to_int6(Mat3::scalar(QNum(ratio(1, 2), 0))), NonIntegral);
}

TEST_CASE("Smith normal form examples") {
  const auto& G = Group::instance();
  SmithForm two = smith_normal_form(scalar6(2));
  CHECK(two.diagonal() == std::vector<std::int64_t>(6, 2));
  SmithForm m1 = smith_normal_form(G[G.minus_one()].int6.to_matrix() - IntMatrix::identity(6));
  CHECK(m1.diagonal() == std::vector<std::int64_t>(6, 2));
  CHECK(diag_product(m1) == 64);
  SmithForm g7 = smith_normal_form(G[G.named("g7")].int6.to_matrix() - IntMatrix::identity(6));
  CHECK(diag_product(g7) == 7);
  CHECK(g7.u * (G[G.named("g7")].int6.to_matrix() - IntMatrix::identity(6)) * g7.v == g7.d);
}

TEST_CASE("Hermite normal form and lattices") {
  CHECK(hnf_row_lattice(IntMatrix::identity(6)) == IntMatrix::identity(6));
  CHECK(hnf_row_lattice(scalar6(2)) == scalar6(2));
  const IntMatrix a = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 3);
  const IntMatrix h = hnf_row_lattice(a);
  CHECK(hnf_row_lattice(h) == h);
  CHECK(std::abs(determinant(a)) == std::abs(determinant(h)));
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t p = 0;
    while (h(i, p) == 0) ++p;
    CHECK(h(i, p) > 0);
    for (std::size_t k = 0; k < i; ++k) CHECK((h(k, p) >= 0 && h(k, p) < h(i, p)));
  }
  const Lattice lat(a);
  CHECK(lat.contains(std::vector<std::int64_t>{2, 4, 4}));
  CHECK_FALSE(lat.contains(std::vector<std::int64_t>{1, 0, 0}));
  const IntMatrix k = integer_kernel(IntMatrix::from_rows({{1, 2, 3}}, 3));
  CHECK(k.rows() == 2);
  for (std::size_t i = 0; i < k.rows(); ++i) CHECK(k(i, 0) + 2 * k(i, 1) + 3 * k(i, 2) == 0);
}

TEST_CASE("SNF contracts on random matrices") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dim(1, 5), entry(-5, 5);
  for (int t = 0; t < 300; ++t) {
    IntMatrix a(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
    const SmithForm s = smith_normal_form(a);
    CHECK(s.u * a * s.v == s.d);
    CHECK(std::abs(determinant(s.u)) == 1);
    CHECK(std::abs(determinant(s.v)) == 1);
    const auto d = s.diagonal();
    for (std::size_t i = 0; i + 1 < s.rank(); ++i) CHECK(d[i + 1] % d[i] == 0);
    CHECK(hnf_row_lattice(a).rows() == s.rank());
  }
}

TEST_CASE("kernels over K") {
  const auto& G = Group::instance();
  CHECK(kernel_K(G[G.named("r2")].mat - Mat3::identity()).size() == 2);
  const auto axis = kernel_K(G[G.named("rho2")].mat - Mat3::identity());
  REQUIRE(axis.size() == 1);
  CHECK(axis[0][0].is_zero());
  CHECK(axis[0][1].is_zero());
  CHECK(kernel_K(G[G.named("g7")].mat - Mat3::identity()).empty());
}

TEST_CASE("checked arithmetic and matrix text") {
  CHECK_THROWS_AS(checked_mul(std::int64_t{1} << 40, std::int64_t{1} << 40), std::overflow_error);
  const auto& G = Group::instance();
  for (auto g : {G.named("r3"), G.named("g7"), G.named("h4p")}) CHECK(Mat3::parse(G[g].mat.str()) == G[g].mat);
  CHECK(Mat3::parse("[[1,0,0],[0,0,1],[0,1,0]]") == G[G.named("r1")].mat);
  CHECK_THROWS_AS(Mat3::parse("[[1,0],[0,1]]"), ParseError);
}

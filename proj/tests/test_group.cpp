#include <doctest.h>

#include <map>
#include <set>

#include "klein/group.hpp"

using namespace klein;

namespace {

const Group& G() { return Group::instance(); }

QNum q(long x, long y = 0) { return QNum(x, y); }
const QNum w = QNum::w();
const QNum wb = QNum::w_bar();

Mat3 half(std::initializer_list<QNum> entries) {
  std::vector<QNum> v(entries);
  for (auto& x : v) x *= QNum(ratio(1, 2), 0);
  return Mat3::from_rows(v);
}

Mat3 mat(std::initializer_list<QNum> entries) {
  std::vector<QNum> v(entries);
  return Mat3::from_rows(v);
}

Mat3 power(const Mat3& m, int k) {
  Mat3 p = Mat3::identity();
  for (int i = 0; i < k; ++i) p = p * m;
  return p;
}

int matrix_order(const Mat3& m) {
  Mat3 p = m;
  int k = 1;
  while (!(p == Mat3::identity())) {
    p = p * m;
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("generators match the displayed matrices") {
  const Mat3 r1 = mat({1, 0, 0, 0, 0, 1, 0, 1, 0});
  const Mat3 r2 = mat({1, 0, 0, 0, 1, 0, 0, 0, -1});
  const Mat3 r3 = half({1, -1, -w, -1, 1, -w, -wb, -wb, 0});
  CHECK(G()[G().named("r1")].mat == r1);
  CHECK(G()[G().named("r2")].mat == r2);
  CHECK(G()[G().named("r3")].mat == r3);
  CHECK(r3 * r1 == half({1, -w, -1, -1, -w, 1, -wb, 0, -wb}));
  CHECK(r1 * r2 == mat({1, 0, 0, 0, 0, -1, 0, 1, 0}));
  const Mat3 cox = r1 * r2 * r3;
  CHECK(cox == half({1, -1, -w, wb, wb, 0, -1, 1, -w}));
  CHECK(power(cox, 7) == -Mat3::identity());
  CHECK(matrix_order(cox) == 14);
  CHECK(G()[G().named("g7")].mat == half({-1, 1, w, -wb, -wb, 0, 1, -1, w}));
  CHECK(matrix_order(r3 * r1) == 3);
  CHECK(matrix_order(r1 * r2) == 4);
  CHECK_FALSE(power(r1 * r2, 2) == Mat3::identity());
}

TEST_CASE("reflections from roots") {
  CHECK(reflection_matrix(CVec3{{q(0), q(0), q(2)}}) == G()[G().named("r2")].mat);
  const auto gr = generator_roots();
  const auto gm = generator_matrices();
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(hermitian(gr[i], gr[i]) == q(2));
    CHECK(reflection_matrix(gr[i]) == gm[i]);
  }
  // The basic root e1 = (0,w,w) gives the signed swap, not r1.
  CHECK(reflection_matrix(basic_roots()[0]) == mat({1, 0, 0, 0, 0, -1, 0, -1, 0}));
  const auto rs = roots();
  CHECK(rs.size() == 42);
  for (const auto& e : rs) CHECK(hermitian(e, e) == q(2));
  CHECK(positive_roots().size() == 21);
}

TEST_CASE("group order and element invariants") {
  CHECK(G().size() == 336);
  CHECK(G().members(Ambient::H).size() == 168);
  CHECK(G().reflections().size() == 21);
  CHECK(G().antireflections().size() == 21);
  CHECK(G().verify_presentation());
  std::set<int> orders;
  for (std::size_t i = 0; i < G().size(); ++i) {
    const auto& e = G()[static_cast<ElementId>(i)];
    CHECK(e.mat.is_unitary());
    CHECK(determinant(e.int6.to_matrix()) == 1);
    CHECK(matrix_order(e.mat) == e.order);
    CHECK((e.det == q(1) || e.det == q(-1)));
    CHECK(G().in_H(static_cast<ElementId>(i)) == (e.det == q(1)));
    orders.insert(e.order);
    // The BFS word reproduces the element.
    Mat3 p = Mat3::identity();
    for (int k : e.word) p = p * generator_matrices()[static_cast<std::size_t>(k - 1)];
    CHECK(p == e.mat);
  }
  CHECK(orders == std::set<int>{1, 2, 3, 4, 6, 7, 14});
}

TEST_CASE("multiplication table agrees with matrix products") {
  for (ElementId a = 0; a < 336; a += 7)
    for (ElementId b = 0; b < 336; b += 5) CHECK(G()[G().mul(a, b)].mat == G()[a].mat * G()[b].mat);
  for (ElementId a = 0; a < 336; ++a) CHECK(G().mul(a, G().inverse(a)) == G().identity());
}

TEST_CASE("named elements") {
  std::map<std::string, int> order = {{"e", 1},   {"m1", 2},  {"r1", 2}, {"r2", 2}, {"r3", 2},
                                      {"rho1", 2}, {"rho2", 2}, {"rho3", 2}, {"g7", 7}, {"h3", 3},
                                      {"h4", 4},  {"h4p", 4}, {"c", 6},  {"c3", 3}};
  for (const auto& n : Group::names()) CHECK(G()[G().named(n)].order == order.at(n));
  CHECK(G()[G().named("h4")].mat == mat({1, 0, 0, 0, 0, -1, 0, 1, 0}));
  CHECK(G()[G().named("h4p")].mat == mat({-1, 0, 0, 0, 0, 1, 0, -1, 0}));
  CHECK(G()[G().named("c")].mat == mat({0, 0, -1, -1, 0, 0, 0, -1, 0}));
  CHECK(G().named("c3") == G().power(G().named("c"), 4));
  const ElementId g7 = G().named("g7"), h3 = G().named("h3");
  CHECK(G().conjugate(g7, h3) == G().power(g7, 2));
  CHECK_THROWS_AS(G().named("nope"), UnknownName);
}

TEST_CASE("conjugacy classes") {
  const auto hc = conjugacy_classes(Ambient::H);
  REQUIRE(hc.size() == 6);
  std::vector<int> orders;
  std::vector<std::size_t> sizes;
  for (const auto& c : hc) {
    orders.push_back(c.order);
    sizes.push_back(c.members.size());
  }
  CHECK(orders == std::vector<int>{1, 2, 3, 4, 7, 7});
  // The order-4 class has 42 elements: 168 - 1 - 21 - 56 - 48.
  CHECK(sizes == std::vector<std::size_t>{1, 21, 56, 42, 24, 24});
  const auto gc = conjugacy_classes(Ambient::G);
  CHECK(gc.size() == 12);
  std::size_t total = 0;
  for (const auto& c : gc) {
    total += c.members.size();
    CHECK(c.centralizer_order * c.members.size() == 336);
  }
  CHECK(total == 336);
}

TEST_CASE("subgroup recognition") {
  CHECK(recognize_subgroup(cyclic_subgroup(G().named("g7"))) == "C7");
  CHECK(recognize_subgroup(normalizer(cyclic_subgroup(G().named("g7")), Ambient::H)) == "7:3");
  CHECK(normalizer(cyclic_subgroup(G().named("rho1")), Ambient::H).count() == 8);
  CHECK(normalizer(G().ambient_set(Ambient::G), Ambient::G) == G().ambient_set(Ambient::G));
  // Signed permutation matrices of determinant 1.
  ElementSet mono;
  for (ElementId g = 0; g < 336; ++g) {
    const auto& m = G()[g].mat;
    int nonzero = 0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) nonzero += !m(i, j).is_zero();
    if (nonzero == 3 && G()[g].det == q(1)) mono.set(static_cast<std::size_t>(g));
  }
  CHECK(mono.count() == 24);
  CHECK(recognize_subgroup(mono) == "S4");
  CHECK(recognize_subgroup(G().ambient_set(Ambient::H)) == "H168");
  CHECK(recognize_subgroup(G().ambient_set(Ambient::G)) == "G336");
  const std::array<ElementId, 1> r1{G().named("r1")};
  CHECK(recognize_subgroup(closure(r1)) == "C2-refl");
}

TEST_CASE("subgroup lattice of H") {
  const auto lat = subgroup_lattice_of_H();
  REQUIRE(lat.classes.size() == 15);
  const std::vector<std::pair<int, int>> want = {{168, 1}, {24, 7}, {24, 7}, {21, 8}, {12, 7}, {12, 7}, {8, 21}, {7, 8},
                                                 {6, 28},  {4, 7},  {4, 7},  {4, 21}, {3, 28}, {2, 21}, {1, 1}};
  for (std::size_t i = 0; i < 15; ++i) {
    CHECK(lat.classes[i].order == want[i].first);
    CHECK(lat.classes[i].length == want[i].second);
  }
  CHECK(lat.classes[3].maximal_subgroups == std::vector<std::pair<int, int>>{{8, 1}, {13, 7}});
  CHECK(lat.classes[14].minimal_overgroups == std::vector<std::pair<int, int>>{{8, 8}, {13, 28}, {14, 21}});
  // Every subgroup order divides 168 and the lengths add up to the number of subgroups.
  std::size_t n = 0;
  for (const auto& c : lat.classes) {
    CHECK(168 % c.order == 0);
    n += static_cast<std::size_t>(c.length);
  }
  CHECK(n == lat.subgroups.size());
}

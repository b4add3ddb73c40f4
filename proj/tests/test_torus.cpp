#include <doctest.h>

#include <random>
#include <set>

#include "klein/group.hpp"
#include "klein/torus.hpp"

using namespace klein;

namespace {
const Group& G() { return Group::instance(); }
}  // namespace

TEST_CASE("lattice membership") {
  const QNum w = QNum::w(), wb = QNum::w_bar();
  CHECK(lattice_contains(CVec3{{0, w, w}}));
  CHECK(lattice_contains(CVec3{{2, 0, 0}}));
  CHECK(lattice_contains(CVec3{{1, 1, wb}}));
  CHECK_FALSE(lattice_contains(CVec3{{1, 0, 0}}));
  CHECK_FALSE(lattice_contains(CVec3{{w, 0, 0}}));
  for (const auto& e : roots()) CHECK(lattice_contains(e));

  // The two membership tests agree on random vectors with small denominators.
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-6, 6);
  for (int t = 0; t < 500; ++t) {
    CVec3 v;
    for (auto& x : v.v) x = QNum(ratio(num(rng), 2), ratio(num(rng), 2));
    CHECK(lattice_contains(v) == lattice_contains_congruence(v));
  }
}

TEST_CASE("torus points") {
  const TorusPoint a = xi(5), b = eta(3);
  CHECK((a + a).is_zero());
  CHECK(b.times(7).is_zero());
  CHECK(b - b == TorusPoint());
  CHECK(TorusPoint::parse(b.str()) == b);
  CHECK(parse_point("eta3") == b);
  CHECK(TorusPoint::from_vector(b.to_vector()) == b);
  CHECK_THROWS(parse_point("nowhere"));
}

TEST_CASE("fixed point counts of elliptic elements") {
  CHECK(fixed_point_count(G().named("m1")) == 64);
  CHECK(fixed_point_count(G().named("h4p")) == 16);
  CHECK(fixed_point_count(G().named("c")) == 4);
  CHECK(fixed_point_count(G().named("g7")) == 7);
  CHECK_THROWS_AS(fixed_point_count(G().named("r1")), ParabolicElement);
  for (ElementId g = 0; g < 336; ++g) {
    if (det_minus_identity(G()[g].mat).is_zero()) continue;
    const auto pts = enumerate_fixed_points(g);
    CHECK(static_cast<std::int64_t>(pts.size()) == fixed_point_count(g));
    for (const auto& u : pts) CHECK(u.fixed_by(G()[g].int6));
  }
}

TEST_CASE("named fixed point sets") {
  std::set<TorusPoint> xis, betas, omegas, etas;
  for (int k = 0; k < 64; ++k) xis.insert(xi(k));
  for (int b = 0; b < 16; ++b) betas.insert(beta(b));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) omegas.insert(omega(i, j));
  for (int i = 0; i < 7; ++i) etas.insert(eta(i));
  auto as_set = [](const std::vector<TorusPoint>& v) { return std::set<TorusPoint>(v.begin(), v.end()); };
  CHECK(as_set(enumerate_fixed_points(G().named("m1"))) == xis);
  CHECK(as_set(enumerate_fixed_points(G().named("h4p"))) == betas);
  CHECK(as_set(enumerate_fixed_points(G().named("c"))) == omegas);
  CHECK(as_set(enumerate_fixed_points(G().named("g7"))) == etas);
  CHECK(xis.size() == 64);
  CHECK(betas.size() == 16);
}

TEST_CASE("omega points") {
  CHECK(omega(0, 0).is_zero());
  for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 0}, std::pair{1, 1}}) {
    CHECK_FALSE(omega(i, j).is_zero());
    CHECK(omega(i, j).times(2).is_zero());
  }
}

TEST_CASE("parabolic fixed loci") {
  const auto r2 = fixed_locus(G().named("r2"));
  CHECK(r2.kind == LocusKind::Parabolic);
  CHECK(r2.dimension() == 2);
  CHECK(r2.component_count == 1);
  const auto rho2 = fixed_locus(G().named("rho2"));
  CHECK(rho2.dimension() == 1);
  CHECK(rho2.component_count == 4);
  CHECK(rho2.index == 4);
  CHECK(fixed_locus(G().negate(G().named("c"))).component_count == 1);
  CHECK(fixed_locus(G().named("h4")).component_count == 1);
  CHECK_THROWS_AS(fixed_locus_structure(G().identity()), IdentityElement);
  CHECK_THROWS_AS(fixed_locus_structure(G().named("g7")), EllipticElement);
}

TEST_CASE("kappa translates") {
  const auto rho2 = fixed_locus(G().named("rho2"));
  CHECK(kappa(0).is_zero());
  CHECK(kappa(3) == kappa(1) + kappa(2));
  std::set<std::size_t> comps;
  for (int i = 0; i < 4; ++i) {
    CHECK(kappa(i).fixed_by(G()[G().named("rho2")].int6));
    const auto c = component_of(rho2, kappa(i));
    REQUIRE(c.has_value());
    comps.insert(*c);
  }
  CHECK(comps.size() == 4);
  CHECK_FALSE(kappa(2).fixed_by(G()[G().named("rho1")].int6));
  CHECK_FALSE(component_of(rho2, eta(1)).has_value());
}

TEST_CASE("registry") {
  for (const auto& n : registry_names()) {
    const TorusPoint u = registry_point(n);
    const auto back = registry_name(u);
    REQUIRE(back.has_value());
    CHECK(registry_point(*back) == u);
  }
  CHECK(registry_name(TorusPoint()) == std::optional<std::string>("0"));
  CHECK(registry_name(omega(1, 0)) == std::optional<std::string>("omega10"));
}

TEST_CASE("torsion solutions") {
  const auto two = IntMatrix::from_rows({{2, 0}, {0, 2}}, 2);
  CHECK(torsion_solutions(two).size() == 4);
  const auto skew = IntMatrix::from_rows({{1, 1}, {-1, 2}}, 2);
  CHECK(torsion_solutions(skew).size() == 3);
}

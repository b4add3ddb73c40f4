#include <doctest.h>

#include <algorithm>

#include "klein/orbits.hpp"

using namespace klein;

namespace {
const Group& G() { return Group::instance(); }
}  // namespace

TEST_CASE("stabilizers and orbits of registry points") {
  for (const auto& n : registry_names()) {
    const TorusPoint u = registry_point(n);
    for (Ambient a : {Ambient::G, Ambient::H}) {
      const Subgroup s = stabilizer(u, a);
      const auto o = orbit(u, a);
      CHECK(static_cast<std::size_t>(s.order) * o.size() == (a == Ambient::G ? 336u : 168u));
      CHECK(std::is_sorted(o.begin(), o.end()));
      CHECK(std::binary_search(o.begin(), o.end(), u));
      CHECK(orbit_key(u, a) == o.front());
    }
  }
}

TEST_CASE("stabilizer labels") {
  CHECK(stabilizer(omega(1, 0), Ambient::G).label == "±S4");
  CHECK(stabilizer(omega(1, 0), Ambient::H).label == "S4");
  CHECK(stabilizer(beta(0b1000), Ambient::G).label == "±D8");
  CHECK(stabilizer(beta(0b0101), Ambient::G).label == "D′8");
  CHECK(stabilizer(beta(0b0011), Ambient::G).label == "C4");
  CHECK(stabilizer(eta(1), Ambient::G).label == "C7");
  CHECK(stabilizer(omega(0, 1), Ambient::G).label == "±S3");
  CHECK(stabilizer(TorusPoint(), Ambient::G).order == 336);
}

TEST_CASE("reflection generation") {
  CHECK(reflection_generated(G().ambient_set(Ambient::G)));
  CHECK(reflection_generated(stabilizer(omega(1, 0), Ambient::G).elements));
  CHECK(reflection_generated(stabilizer(beta(0b1000), Ambient::G).elements));
  CHECK_FALSE(reflection_generated(stabilizer(beta(0b0101), Ambient::G).elements));
  CHECK_FALSE(reflection_generated(stabilizer(omega(0, 1), Ambient::G).elements));
  CHECK_FALSE(reflection_generated(stabilizer(beta(0b0011), Ambient::G).elements));
  CHECK(reflection_generated(ElementSet().set(0)));
}

TEST_CASE("weights") {
  CHECK(canonical_weights(7, {2, 4, 1}) == Weights{7, {1, 2, 4}});
  CHECK(canonical_weights(7, {3, 5, 6}) == Weights{7, {1, 2, 4}});
  CHECK(canonical_weights(2, {1, 0, 1}) == Weights{2, {0, 1, 1}});
  CHECK(Weights{7, {1, 2, 4}}.str() == "1/7(1,2,4)");

  const auto p = singularity_weights(stabilizer(eta(1), Ambient::G).elements);
  CHECK(p.kind == ImageKind::Cyclic);
  CHECK(p.weights == Weights{7, {1, 2, 4}});
  const auto q = singularity_weights(stabilizer(beta(0b0011), Ambient::G).elements);
  CHECK(q.kind == ImageKind::Cyclic);
  CHECK(q.weights == Weights{4, {1, 2, 3}});
  CHECK(singularity_weights(stabilizer(omega(1, 0), Ambient::G).elements).kind == ImageKind::Smooth);

  // Eigenvalue weights of g7 as seventh roots of unity.
  auto e = eigen_weights(G().named("g7"));
  std::sort(e.begin(), e.end());
  CHECK(canonical_weights(7, e) == Weights{7, {1, 2, 4}});
}

TEST_CASE("reduced weights of non-cyclic germs") {
  for (const TorusPoint& u : {beta(0b0101), omega(0, 1)}) {
    const auto s = singularity_weights(stabilizer(u, Ambient::G).elements);
    CHECK(s.kind == ImageKind::NonCyclic);
    REQUIRE(s.reduced.has_value());
    CHECK(*s.reduced == Weights{2, {0, 1, 1}});
    CHECK(local_type(s) == std::optional<Weights>(Weights{2, {0, 1, 1}}));
  }
  // Reflection-generated: the quotient group is trivial and the germ is smooth.
  CHECK(reduced_weights(stabilizer(omega(1, 0), Ambient::G).elements) == std::optional<Weights>(Weights{1, {0, 0, 0}}));
  CHECK_FALSE(reduced_weights(stabilizer(eta(1), Ambient::G).elements).has_value());
}

TEST_CASE("special curves") {
  const ElementId rho2 = G().named("rho2");
  const auto curves = curves_of(rho2);
  CHECK(curves.size() == 4);
  for (const auto& c : curves) CHECK(c.contains(c.translate));
  const auto k1 = curve_through(rho2, kappa(1));
  const auto exact = generic_curve_stabilizer_exact(k1.translate, k1.direction, Ambient::G);
  const auto sampled = generic_curve_stabilizer(k1.translate, k1.direction, Ambient::G, 11);
  CHECK(exact.elements == sampled.elements);
  CHECK(exact.label == "2²");
  CHECK(curve_setwise_stabilizer(k1, Ambient::G).elements.test(static_cast<std::size_t>(rho2)));
  CHECK(same_curve_orbit(k1, k1, Ambient::G));
  const auto diss = dissident_points(k1, exact.elements, Ambient::G);
  for (const auto& u : diss) CHECK(stabilizer(u, Ambient::G).order > exact.order);
}

TEST_CASE("order-7 doubling") {
  const auto d = doubling_check();
  CHECK(d.vector_identity);
  CHECK(d.torus_identity);
  CHECK(d.multiples);
  CHECK(d.h_orbits);
  CHECK(d.minus_one_swaps);
}

TEST_CASE("loci") {
  CHECK(parse_locus("T7") == Locus::T7);
  CHECK_THROWS(parse_locus("T5"));
  CHECK(special_points(7, std::nullopt).size() == 48);
  CHECK(classify_locus(Locus::T7, Ambient::G).size() == 1);
  CHECK(classify_locus(Locus::T7, Ambient::H).size() == 2);
  CHECK(classify_locus(Locus::T2, Ambient::G).size() == 4);
  const auto cols = beta_table();
  REQUIRE(cols.size() == 5);
  std::size_t points = 0;
  for (const auto& c : cols) points += c.points.size();
  CHECK(points == 15);
}

TEST_CASE("singularity report of J/G") {
  const auto x = singularity_report(Ambient::G, 0);
  REQUIRE(x.isolated.size() == 1);
  CHECK(x.isolated[0].image.weights == Weights{7, {1, 2, 4}});
  REQUIRE(x.curves.size() == 1);
  CHECK(x.curves[0].generic_image.weights == Weights{2, {0, 1, 1}});
  CHECK(x.curves[0].matches_exact);
  CHECK(x.q_on_l);
  // Only the C4 point changes the local type along the curve.
  REQUIRE(x.curves[0].type_changes.size() == 1);
  const auto& q = x.curves[0].dissident[x.curves[0].type_changes[0]];
  CHECK(q.image.weights == Weights{4, {1, 2, 3}});
  CHECK(x.special_orbits.size() == 11);
}

TEST_CASE("singularity report of J/H") {
  const auto y = singularity_report(Ambient::H, 0);
  REQUIRE(y.isolated.size() == 2);
  for (const auto& s : y.isolated) CHECK(s.image.weights == Weights{7, {1, 2, 4}});
}

#include <doctest.h>

#include "klein/group.hpp"
#include "klein/torus.hpp"

using namespace klein;

namespace {

const Group& G() { return Group::instance(); }

ElementIndex make_index() {
  ElementIndex idx;
  const auto t = G().int6_table();
  for (std::size_t i = 0; i < t.size(); ++i) idx.emplace(t[i], static_cast<ElementId>(i));
  return idx;
}

}  // namespace

TEST_CASE("cayley table: parallel equals serial") {
  const auto idx = make_index();
  const auto par = kernels::cayley_table(G().int6_table(), idx);
  CHECK(par == kernels::cayley_table_serial(G().int6_table(), idx));
  CHECK(par.size() == 336u * 336u);
  CHECK(std::find(par.begin(), par.end(), -1) == par.end());
}

TEST_CASE("stabilizer mask: parallel equals serial") {
  const ElementSet all = G().ambient_set(Ambient::G);
  const ElementSet h = G().ambient_set(Ambient::H);
  for (const auto& n : registry_names()) {
    const TorusPoint u = registry_point(n);
    CHECK(kernels::stabilizer_mask(G().int6_table(), all, u) ==
          kernels::stabilizer_mask_serial(G().int6_table(), all, u));
    CHECK(kernels::stabilizer_mask(G().int6_table(), h, u) == kernels::stabilizer_mask_serial(G().int6_table(), h, u));
  }
}

TEST_CASE("orbit partition: parallel equals serial") {
  std::vector<TorusPoint> pts;
  for (int k = 0; k < 64; ++k) pts.push_back(xi(k));
  for (Ambient a : {Ambient::G, Ambient::H}) {
    const auto par = kernels::orbit_partition(G().int6_table(), G().ambient_set(a), pts);
    CHECK(par == kernels::orbit_partition_serial(G().int6_table(), G().ambient_set(a), pts));
    CHECK(*std::max_element(par.begin(), par.end()) + 1 == 5);  // 0 plus four orbits of half-periods
  }
}

TEST_CASE("fixed point census: parallel equals serial") {
  const auto par = kernels::fixed_point_census(G());
  CHECK(par == kernels::fixed_point_census_serial(G()));
  CHECK(par[static_cast<std::size_t>(G().named("m1"))].size() == 64);
  CHECK(par[static_cast<std::size_t>(G().named("r1"))].empty());
}

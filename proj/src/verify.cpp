#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "klein/quartic.hpp"
#include "klein/report.hpp"

namespace klein {

namespace {

const Group& grp() { return Group::instance(); }

template <class T>
std::string join(const std::vector<T>& v, std::string_view sep = ",") {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? std::string(sep) : "") << v[i];
  return out.str();
}

std::string yes(bool b) { return b ? "yes" : "no"; }

VerifyOutcome outcome(std::string name, bool ok, std::string expected, std::string actual, std::string reference) {
  return {std::move(name), ok ? VerifyStatus::Pass : VerifyStatus::Fail, std::move(expected), std::move(actual),
          std::move(reference)};
}

std::string point_label(const TorusPoint& u) { return registry_name(u).value_or(u.str()); }

// ---------------------------------------------------------------- criteria

VerifyOutcome check_group() {
  const auto& G = grp();
  const auto h = G.members(Ambient::H).size();
  const auto rs = roots();
  const bool squares = std::all_of(rs.begin(), rs.end(), [](const CVec3& e) { return hermitian(e, e) == QNum(2); });
  const bool pres = G.verify_presentation();
  std::ostringstream act;
  act << "|G|=" << G.size() << " |H|=" << h << " reflections=" << G.reflections().size()
      << " antireflections=" << G.antireflections().size() << " roots=" << rs.size()
      << " all of square 2=" << yes(squares) << " presentation=" << yes(pres);
  const bool ok = G.size() == 336 && h == 168 && G.reflections().size() == 21 && G.antireflections().size() == 21 &&
                  rs.size() == 42 && squares && pres;
  return outcome("1 group construction", ok,
                 "|G|=336 |H|=168 reflections=21 antireflections=21 roots=42 all of square 2=yes presentation=yes",
                 act.str(), "generators r1, r2, r3 and the seven relations");
}

VerifyOutcome check_orders() {
  const auto& G = grp();
  std::set<int> orders;
  for (const auto& e : G.elements()) orders.insert(e.order);
  const std::array<ElementId, 3> w{G.named("r1"), G.named("r2"), G.named("r3")};
  const ElementId p = G.word_product(w);
  ElementId seventh = G.identity();
  for (int i = 0; i < 7; ++i) seventh = G.mul(seventh, p);
  const std::vector<int> got(orders.begin(), orders.end());
  const bool ok = got == std::vector<int>{1, 2, 3, 4, 6, 7, 14} && seventh == G.minus_one();
  return outcome("2 order spectrum", ok, "orders {1,2,3,4,6,7,14}; (r1r2r3)^7 = -id",
                 "orders {" + join(got) + "}; (r1r2r3)^7 = " + (seventh == G.minus_one() ? "-id" : "other"),
                 "element orders of G");
}

VerifyOutcome check_classes() {
  const auto hc = conjugacy_classes(Ambient::H);
  std::vector<int> orders;
  std::vector<std::size_t> sizes;
  for (const auto& c : hc) {
    orders.push_back(c.order);
    sizes.push_back(c.members.size());
  }
  const auto gc = conjugacy_classes(Ambient::G);
  // +- pairing: c and -c have equal sizes.
  bool paired = gc.size() == 12;
  const auto& G = grp();
  for (const auto& c : gc) {
    const ElementId neg = G.negate(c.representative);
    bool found = false;
    for (const auto& d : gc)
      if (std::find(d.members.begin(), d.members.end(), neg) != d.members.end())
        found = d.members.size() == c.members.size() && &d != &c;
    paired = paired && found;
  }
  VerifyOutcome o;
  o.name = "3 conjugacy classes";
  o.expected = "H: 6 classes, orders 1,2,3,4,7,7, sizes 1,21,56,42,24,24; G: 12 classes in +- pairs";
  o.actual = "H: " + std::to_string(hc.size()) + " classes, orders " + join(orders) + ", sizes " + join(sizes) +
             "; G: " + std::to_string(gc.size()) + " classes" + (paired ? " in +- pairs" : " not paired");
  o.reference = "class table of H; the reference table lists 24 for the order-4 class, the element count "
                "of order 4 in H and the class equation give 42";
  const bool ok = orders == std::vector<int>{1, 2, 3, 4, 7, 7} &&
                  sizes == std::vector<std::size_t>{1, 21, 56, 42, 24, 24} && paired;
  o.status = ok ? VerifyStatus::Discrepancy : VerifyStatus::Fail;
  return o;
}

VerifyOutcome check_determinants() {
  const auto& G = grp();
  const std::vector<std::pair<std::string, ElementId>> els = {{"m1", G.named("m1")},
                                                              {"h4p", G.named("h4p")},
                                                              {"c", G.named("c")},
                                                              {"g7", G.named("g7")},
                                                              {"-g7", G.negate(G.named("g7"))}};
  const std::vector<QNum> want = {QNum(-8), QNum(-4), QNum(-2), QNum::i_sqrt7(), QNum(-1)};
  const std::vector<std::int64_t> counts = {64, 16, 4, 7, 1};
  bool ok = true;
  std::vector<std::string> act, exp;
  for (std::size_t i = 0; i < els.size(); ++i) {
    const QNum d = det_minus_identity(G[els[i].second].mat);
    const auto n = fixed_point_count(els[i].second);
    ok = ok && d == want[i] && n == counts[i];
    act.push_back(els[i].first + ":" + d.str() + "/" + std::to_string(n));
    exp.push_back(els[i].first + ":" + want[i].str() + "/" + std::to_string(counts[i]));
  }
  return outcome("4 fixed point counts", ok, join(exp, " "), join(act, " "), "det(g - id) and |det6(g - id)|");
}

VerifyOutcome check_fixed_sets() {
  const auto& G = grp();
  auto sorted = [](std::vector<TorusPoint> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  std::vector<TorusPoint> xis, betas, omegas, etas;
  for (int k = 0; k < 64; ++k) xis.push_back(xi(k));
  for (int b = 0; b < 16; ++b) betas.push_back(beta(b));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) omegas.push_back(omega(i, j));
  for (int i = 0; i < 7; ++i) etas.push_back(eta(i));
  const bool a = enumerate_fixed_points(G.named("m1")) == sorted(xis);
  const bool b = enumerate_fixed_points(G.named("h4p")) == sorted(betas);
  const bool c = enumerate_fixed_points(G.named("c")) == sorted(omegas);
  const bool d = enumerate_fixed_points(G.named("g7")) == sorted(etas);
  return outcome("5 fixed point sets", a && b && c && d, "m1: 64 xi; h4p: 16 beta; c: 4 omega; g7: 7 eta",
                 "m1 " + yes(a) + "; h4p " + yes(b) + "; c " + yes(c) + "; g7 " + yes(d),
                 "half-periods, beta, omega and eta points");
}

VerifyOutcome check_parabolic() {
  const auto& G = grp();
  const auto r2 = fixed_locus(G.named("r2"));
  const auto rho2 = fixed_locus(G.named("rho2"));
  const auto mc = fixed_locus(G.negate(G.named("c")));
  const auto h4 = fixed_locus(G.named("h4"));
  std::ostringstream act;
  act << "components r2=" << r2.component_count << " rho2=" << rho2.component_count << " -c=" << mc.component_count
      << " h4=" << h4.component_count << "; dimensions r2=" << r2.dimension() << " rho2=" << rho2.dimension()
      << " -c=" << mc.dimension() << " h4=" << h4.dimension();
  const bool ok = r2.component_count == 1 && rho2.component_count == 4 && mc.component_count == 1 &&
                  h4.component_count == 1 && r2.dimension() == 2 && rho2.dimension() == 1 && mc.dimension() == 1 &&
                  h4.dimension() == 1;
  return outcome("6 parabolic fixed loci", ok,
                 "components r2=1 rho2=4 -c=1 h4=1; dimensions r2=2 rho2=1 -c=1 h4=1", act.str(),
                 "fixed loci of parabolic elements");
}

VerifyOutcome check_t7() {
  const auto& G = grp();
  const auto pts = special_points(7, std::nullopt);
  const auto g_rec = classify_locus(Locus::T7, Ambient::G);
  const auto h_rec = classify_locus(Locus::T7, Ambient::H);
  std::vector<std::size_t> h_sizes;
  for (const auto& r : h_rec) h_sizes.push_back(r.orbit_size);
  const auto dbl = doubling_check();
  const auto norm = normalizer(cyclic_subgroup(G.named("g7")), Ambient::H).count();
  const auto st = stabilizer(eta(1), Ambient::H).order;
  std::ostringstream act;
  act << "points=" << pts.size() << " G-orbits=" << g_rec.size() << " H-orbit sizes=" << join(h_sizes)
      << " h3 eta1 = 2 eta1: " << yes(dbl.torus_identity) << " |N_H(<g7>)|=" << norm << " |H_eta1|=" << st;
  const bool ok = pts.size() == 48 && g_rec.size() == 1 && h_sizes == std::vector<std::size_t>{24, 24} &&
                  dbl.torus_identity && norm == 21 && st == 7;
  return outcome("7 order-7 points", ok,
                 "points=48 G-orbits=1 H-orbit sizes=24,24 h3 eta1 = 2 eta1: yes |N_H(<g7>)|=21 |H_eta1|=7",
                 act.str(), "fixed points of elements of order 7");
}

VerifyOutcome check_beta() {
  const auto cols = beta_table();
  std::vector<std::string> act;
  bool ok = cols.size() == 5;
  const std::vector<std::tuple<std::string, std::size_t, int, bool>> want = {
      {"±S4", 2, 2, true}, {"S′4", 4, 2, true}, {"±D8", 1, 1, true}, {"D′8", 4, 2, true}, {"C4", 4, 1, false}};
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const auto& c = cols[i];
    act.push_back(c.label + " x" + std::to_string(c.points.size()) + " [" + std::to_string(c.image_count) + "] " +
                  (c.reflection_generated ? "refl-gen" : "not refl-gen"));
    if (i < want.size()) {
      const auto& [label, n, img, rg] = want[i];
      ok = ok && c.label == label && c.points.size() == n && c.image_count == img && c.reflection_generated == rg;
    }
  }
  return outcome("8 beta table", ok,
                 "±S4 x2 [2] refl-gen; S′4 x4 [2] refl-gen; ±D8 x1 [1] refl-gen; D′8 x4 [2] refl-gen; C4 x4 [1] not refl-gen",
                 join(act, "; "), "stabilizers of the 15 nonzero beta points");
}

VerifyOutcome check_t2() {
  const auto recs = classify_locus(Locus::T2, Ambient::G);
  std::vector<std::pair<std::size_t, std::string>> got;
  bool smooth = true;
  std::vector<std::string> act;
  for (const auto& r : recs) {
    got.emplace_back(r.orbit_size, r.stabilizer.label);
    smooth = smooth && r.image.kind == ImageKind::Smooth;
    act.push_back(std::to_string(r.orbit_size) + " " + r.stabilizer.label + " " + r.image.str());
  }
  std::sort(got.begin(), got.end());
  const std::vector<std::pair<std::size_t, std::string>> want = {{7, "±S4"}, {7, "±S4"}, {21, "±D8"}, {28, "±S3"}};
  return outcome("9 half-period orbits", got == want && smooth,
                 "7 ±S4 smooth; 7 ±S4 smooth; 21 ±D8 smooth; 28 ±S3 smooth", join(act, "; "),
                 "G-orbits of the 63 nonzero half-periods");
}

VerifyOutcome check_lattice() {
  const auto lat = subgroup_lattice_of_H();
  struct Row {
    int order, length;
    std::vector<std::pair<int, int>> below, above;
  };
  // (order, length, maximal subgroups, minimal overgroups); a count of 1 is implied.
  const std::vector<Row> want = {
      {168, 1, {{2, 7}, {3, 7}, {4, 8}}, {}},
      {24, 7, {{5, 1}, {7, 3}, {9, 4}}, {{1, 1}}},
      {24, 7, {{6, 1}, {7, 3}, {9, 4}}, {{1, 1}}},
      {21, 8, {{8, 1}, {13, 7}}, {{1, 1}}},
      {12, 7, {{10, 1}, {13, 4}}, {{2, 1}}},
      {12, 7, {{11, 1}, {13, 4}}, {{3, 1}}},
      {8, 21, {{10, 1}, {11, 1}, {12, 1}}, {{2, 1}, {3, 1}}},
      {7, 8, {{15, 1}}, {{4, 1}}},
      {6, 28, {{13, 1}, {14, 3}}, {{2, 1}, {3, 1}}},
      {4, 7, {{14, 3}}, {{5, 1}, {7, 3}}},
      {4, 7, {{14, 3}}, {{6, 1}, {7, 3}}},
      {4, 21, {{14, 1}}, {{7, 1}}},
      {3, 28, {{15, 1}}, {{4, 2}, {5, 1}, {6, 1}, {9, 1}}},
      {2, 21, {{15, 1}}, {{9, 4}, {10, 1}, {11, 1}, {12, 1}}},
      {1, 1, {}, {{8, 8}, {13, 28}, {14, 21}}},
  };
  bool ok = lat.classes.size() == want.size();
  std::vector<std::string> act, exp;
  for (std::size_t i = 0; i < lat.classes.size(); ++i) {
    const auto& c = lat.classes[i];
    act.push_back("(" + std::to_string(c.order) + "," + std::to_string(c.length) + ")");
    if (i < want.size())
      ok = ok && c.order == want[i].order && c.length == want[i].length && c.maximal_subgroups == want[i].below &&
           c.minimal_overgroups == want[i].above;
  }
  for (const auto& w : want) exp.push_back("(" + std::to_string(w.order) + "," + std::to_string(w.length) + ")");
  return outcome("10 subgroup lattice of H", ok, join(exp, " ") + " with the tabulated inclusions",
                 join(act, " ") + (ok ? " with the tabulated inclusions" : " (inclusions or lengths differ)"),
                 "15-class subgroup table of H");
}

VerifyOutcome check_singularities(std::uint64_t seed) {
  const auto x = singularity_report(Ambient::G, seed);
  const auto y = singularity_report(Ambient::H, seed);
  const Weights p_w{7, {1, 2, 4}}, l_w{2, {0, 1, 1}}, q_w{4, {1, 2, 3}};

  const bool one_isolated = x.isolated.size() == 1 && x.isolated[0].image.kind == ImageKind::Cyclic &&
                            x.isolated[0].image.weights == p_w;
  const bool one_curve = x.curves.size() == 1 && x.curves[0].generic_image.kind == ImageKind::Cyclic &&
                         x.curves[0].generic_image.weights == l_w;
  std::vector<std::string> dissident;
  int q_count = 0;
  if (!x.curves.empty())
    for (const auto& d : x.curves[0].dissident) {
      dissident.push_back(point_label(d.representative) + " " + d.stabilizer_label + " " + d.image.str());
      q_count += d.image.kind == ImageKind::Cyclic && d.image.weights == q_w;
    }
  // Special orbits other than those of p and q.
  std::vector<std::string> singular_others;
  for (const auto& s : x.special_orbits) {
    if (s.image.kind == ImageKind::Smooth) continue;
    const bool is_p = s.image.kind == ImageKind::Cyclic && s.image.weights == p_w;
    const bool is_q = s.image.kind == ImageKind::Cyclic && s.image.weights == q_w;
    if (!is_p && !is_q) singular_others.push_back(point_label(s.representative) + " " + s.stabilizer_label);
  }
  const bool y_ok = y.isolated.size() == 2 && std::all_of(y.isolated.begin(), y.isolated.end(), [&](const PointStratum& s) {
                      return s.image.kind == ImageKind::Cyclic && s.image.weights == p_w;
                    });
  std::ostringstream act;
  act << "X: isolated=" << x.isolated.size();
  if (!x.isolated.empty()) act << " (" << x.isolated[0].image.str() << ")";
  act << "; singular curves=" << x.curves.size();
  if (!x.curves.empty()) act << " (generic " << x.curves[0].generic_image.str() << ")";
  act << "; dissident points on it: " << join(dissident, ", ") << "; with 1/4(1,2,3): " << q_count
      << "; q on l: " << yes(x.q_on_l) << "; singular special orbits besides p and q: "
      << (singular_others.empty() ? "none" : join(singular_others, ", ")) << ". Y: isolated=" << y.isolated.size();
  for (const auto& s : y.isolated) act << " " << s.image.str();
  const bool ok = one_isolated && one_curve && q_count == 1 && x.q_on_l && singular_others.empty() && y_ok;
  return outcome("11 singular locus", ok,
                 "X: isolated=1 (1/7(1,2,4)); singular curves=1 (generic 1/2(0,1,1)); one dissident point with "
                 "1/4(1,2,3); q on l: yes; singular special orbits besides p and q: none. Y: isolated=2 1/7(1,2,4) "
                 "1/7(1,2,4)",
                 act.str(), "singular locus of J/G and J/H");
}

VerifyOutcome check_curves(std::uint64_t seed) {
  const auto& G = grp();
  const ElementId rho2 = G.named("rho2");
  auto generic = [&](ElementId g, const TorusPoint& through, std::uint64_t k) {
    const auto c = curve_through(g, through);
    return generic_curve_stabilizer(c.translate, c.direction, Ambient::G, seed * 1000003u + k);
  };
  const Subgroup k1 = generic(rho2, kappa(1), 1);
  const Subgroup k2 = generic(rho2, kappa(2), 2);
  const Subgroup k3 = generic(rho2, kappa(3), 3);
  const Subgroup diag = generic(G.named("c3"), TorusPoint(), 4);
  const Subgroup h4 = generic(G.named("h4"), TorusPoint(), 5);
  std::ostringstream act;
  act << "kappa1 " << k1.label << " (" << k1.reflection_count << " refl); kappa2 " << k2.label << " ("
      << k2.reflection_count << " refl); kappa3 " << k3.label << " = intersection: "
      << yes(k3.elements == (k1.elements & k2.elements)) << "; c3 axis " << diag.label << "; h4 axis " << h4.label;
  const bool ok = k1.label == "2²" && k1.reflection_count == 2 && reflection_generated(k1.elements) &&
                  k2.label == "2²" && k2.reflection_count == 2 && reflection_generated(k2.elements) &&
                  k3.label == "C2-antirefl" && k3.elements == (k1.elements & k2.elements) && diag.label == "S′3" &&
                  h4.label == "D′8";
  return outcome("12 generic curve stabilizers", ok,
                 "kappa1 2² (2 refl); kappa2 2² (2 refl); kappa3 C2-antirefl = intersection: yes; c3 axis S′3; h4 axis D′8",
                 act.str(), "generic stabilizers of the special curves, seed " + std::to_string(seed));
}

VerifyOutcome check_quartic() {
  const bool ok = verify_quartic_invariance();
  return outcome("13 quartic invariance", ok, "F o g = F for all 336 g", ok ? "F o g = F for all 336 g" : "not invariant",
                 "Klein quartic x^4 + y^4 + z^4 - 3 wbar (x^2 y^2 + x^2 z^2 + y^2 z^2)");
}

// ---------------------------------------------------------------- property suites

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 12);
  return ratio(num(rng), den(rng));
}

bool qnum_axioms(std::mt19937_64& rng, int trials) {
  for (int t = 0; t < trials; ++t) {
    const QNum a(random_rational(rng), random_rational(rng));
    const QNum b(random_rational(rng), random_rational(rng));
    const QNum c(random_rational(rng), random_rational(rng));
    if ((a + b) + c != a + (b + c) || a + b != b + a || (a * b) * c != a * (b * c) || a * b != b * a) return false;
    if (a * (b + c) != a * b + a * c || a + QNum() != a || a * QNum(1) != a || a - a != QNum()) return false;
    if ((a * b).conj() != a.conj() * b.conj() || (a * b).norm() != a.norm() * b.norm()) return false;
    if (!a.is_zero() && a * a.inv() != QNum(1)) return false;
  }
  return true;
}

IntMatrix random_matrix(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
  IntMatrix m(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
  return m;
}

// Contract arithmetic is done in GMP: the transforms of an SNF can be large enough that
// their products overflow 64 bits even though the result is small.
using BigMatrix = std::vector<std::vector<mpz_class>>;

BigMatrix big(const IntMatrix& m) {
  BigMatrix b(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) b[i][j] = static_cast<long>(m(i, j));
  return b;
}

BigMatrix operator*(const BigMatrix& x, const BigMatrix& y) {
  const std::size_t inner = y.size(), cols = y.empty() ? 0 : y[0].size();
  BigMatrix out(x.size(), std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += x[i][k] * y[k][j];
  return out;
}

bool unimodular(const IntMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = static_cast<long>(m(i, j));
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return false;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det == 1 || det == -1;
}

bool snf_hnf_contracts(std::mt19937_64& rng, int trials) {
  std::uniform_int_distribution<int> small(-3, 3);
  for (int t = 0; t < trials; ++t) {
    const IntMatrix a = random_matrix(rng);
    const SmithForm s = smith_normal_form(a);
    if (big(s.u) * big(a) * big(s.v) != big(s.d) || !unimodular(s.u) || !unimodular(s.v)) return false;
    const auto diag = s.diagonal();
    for (std::size_t i = 0; i < s.d.rows(); ++i)
      for (std::size_t j = 0; j < s.d.cols(); ++j)
        if (i != j && s.d(i, j) != 0) return false;
    for (std::size_t i = 0; i < diag.size(); ++i) {
      if (diag[i] < 0) return false;
      if (i + 1 < diag.size() && diag[i] != 0 && diag[i + 1] % diag[i] != 0) return false;
      if (i + 1 < diag.size() && diag[i] == 0 && diag[i + 1] != 0) return false;
    }
    const IntMatrix h = hnf_row_lattice(a);
    if (hnf_row_lattice(h) != h || h.rows() != s.rank()) return false;
    // Row operations by a random unimodular matrix keep the row lattice.
    IntMatrix mixed = a;
    for (int k = 0; k < 8 && a.rows() > 1; ++k) {
      const auto i = static_cast<std::size_t>(rng() % a.rows()), j = static_cast<std::size_t>(rng() % a.rows());
      if (i != j) mixed.add_row_multiple(i, j, small(rng));
      else mixed.negate_row(i);
    }
    if (hnf_row_lattice(mixed) != h) return false;
    const Lattice lat(a);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const auto r = a.row(i);
      if (!lat.contains(r)) return false;
    }
  }
  return true;
}

bool covariance(std::mt19937_64& rng, int trials) {
  const auto& G = grp();
  const auto names = registry_names();
  std::uniform_int_distribution<std::size_t> pick_g(0, G.size() - 1), pick_p(0, names.size() - 1);
  for (int t = 0; t < trials; ++t) {
    const auto g = static_cast<ElementId>(pick_g(rng));
    const TorusPoint u = registry_point(names[pick_p(rng)]);
    const TorusPoint v = u.apply(G[g].int6);
    if (stabilizer(v, Ambient::G).elements != conjugate_set(stabilizer(u, Ambient::G).elements, g)) return false;
    if (orbit(v, Ambient::G) != orbit(u, Ambient::G)) return false;
  }
  return true;
}

bool orbit_stabilizer_identity() {
  for (const auto& n : registry_names()) {
    const TorusPoint u = registry_point(n);
    for (auto a : {Ambient::G, Ambient::H}) {
      const std::size_t total = a == Ambient::G ? 336 : 168;
      if (orbit(u, a).size() * static_cast<std::size_t>(stabilizer(u, a).order) != total) return false;
    }
  }
  return true;
}

VerifyOutcome check_properties(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const bool os = orbit_stabilizer_identity();
  const bool cov = covariance(rng, 100);
  const bool snf = snf_hnf_contracts(rng, 1000);
  const bool q = qnum_axioms(rng, 1000);
  return outcome("14 property suites", os && cov && snf && q,
                 "orbit-stabilizer on registry points: yes; covariance x100: yes; SNF/HNF x1000: yes; QNum axioms x1000: yes",
                 "orbit-stabilizer on registry points: " + yes(os) + "; covariance x100: " + yes(cov) +
                     "; SNF/HNF x1000: " + yes(snf) + "; QNum axioms x1000: " + yes(q),
                 "randomized contracts, seed " + std::to_string(seed));
}

}  // namespace

std::vector<VerifyOutcome> run_verify(std::uint64_t seed) {
  std::vector<VerifyOutcome> out;
  out.push_back(check_group());
  out.push_back(check_orders());
  out.push_back(check_classes());
  out.push_back(check_determinants());
  out.push_back(check_fixed_sets());
  out.push_back(check_parabolic());
  out.push_back(check_t7());
  out.push_back(check_beta());
  out.push_back(check_t2());
  out.push_back(check_lattice());
  out.push_back(check_singularities(seed));
  out.push_back(check_curves(seed));
  out.push_back(check_quartic());
  out.push_back(check_properties(seed));
  return out;
}

}  // namespace klein

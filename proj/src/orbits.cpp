#include "klein/orbits.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

namespace klein {

namespace {

const Group& grp() { return Group::instance(); }

std::size_t quotient_order(Ambient q) { return q == Ambient::G ? 336 : 168; }

std::string element_label(ElementId g) {
  if (auto n = grp().name_of(g)) return *n;
  return "#" + std::to_string(g);
}

// Position of a point's registry name in the preferred naming order.
std::size_t name_rank(const TorusPoint& u) {
  static const auto order = [] {
    std::map<std::string, std::size_t> m;
    auto names = registry_names();
    for (std::size_t i = 0; i < names.size(); ++i) m.emplace(names[i], i);
    m["0"] = 0;
    return m;
  }();
  auto n = registry_name(u);
  if (!n) return order.size() + 1;
  return order.at(*n);
}

TorusPoint preferred(const std::vector<TorusPoint>& pts) {
  return *std::min_element(pts.begin(), pts.end(), [](const TorusPoint& a, const TorusPoint& b) {
    auto ra = name_rank(a), rb = name_rank(b);
    return ra != rb ? ra < rb : a < b;
  });
}

std::string point_name(const TorusPoint& u) { return registry_name(u).value_or(""); }

RatVec6 on_curve(const TorusPoint& t, const IntMatrix& dir, const Rational& s1, const Rational& s2) {
  RatVec6 c = t.coords();
  for (std::size_t i = 0; i < 6; ++i) c[i] += s1 * dir(0, i) + s2 * dir(1, i);
  return c;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

PointStratum stratum_of(const TorusPoint& rep, Ambient q) {
  PointStratum p;
  p.representative = rep;
  p.name = point_name(rep);
  auto s = stabilizer(rep, q);
  p.stabilizer_label = s.label;
  p.stabilizer_order = s.order;
  p.orbit_size = quotient_order(q) / static_cast<std::size_t>(s.order);
  p.image = singularity_weights(s.elements);
  return p;
}

}  // namespace

// ---------------------------------------------------------------- stabilizers

Subgroup stabilizer(const TorusPoint& u, Ambient quotient) {
  const auto& G = grp();
  return make_subgroup(kernels::stabilizer_mask(G.int6_table(), G.ambient_set(quotient), u));
}

std::vector<TorusPoint> orbit(const TorusPoint& u, Ambient quotient) {
  const auto& G = grp();
  std::set<TorusPoint> out;
  for (auto g : G.members(quotient)) out.insert(u.apply(G[g].int6));
  return {out.begin(), out.end()};
}

TorusPoint orbit_key(const TorusPoint& u, Ambient quotient) { return orbit(u, quotient).front(); }

bool reflection_generated(const ElementSet& s) {
  const auto refl = ids_of(s & grp().reflection_set());
  return closure(refl) == s;
}

// ---------------------------------------------------------------- weights

std::string Weights::str() const {
  return "1/" + std::to_string(d) + "(" + std::to_string(nu[0]) + "," + std::to_string(nu[1]) + "," +
         std::to_string(nu[2]) + ")";
}

std::string ImageStatus::str() const {
  switch (kind) {
    case ImageKind::Smooth: return "smooth";
    case ImageKind::Cyclic: return weights.str();
    case ImageKind::NonCyclic: return reduced ? "non-cyclic, reduces to " + reduced->str() : "non-cyclic";
  }
  return "?";
}

std::array<int, 3> eigen_weights(ElementId g) {
  const auto& e = grp()[g];
  const int d = e.order;
  Eigen::Matrix3cd m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = e.mat(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).embed();
  Eigen::ComplexEigenSolver<Eigen::Matrix3cd> solver(m, false);
  if (solver.info() != Eigen::Success) throw SnappingError("eigenvalue computation failed");
  std::array<int, 3> nu{};
  std::complex<double> sum = 0, prod = 1;
  for (int i = 0; i < 3; ++i) {
    const auto lambda = solver.eigenvalues()(i);
    const double turns = std::arg(lambda) / (2 * std::numbers::pi);
    int k = static_cast<int>(std::lround(turns * d)) % d;
    if (k < 0) k += d;
    const auto root = std::polar(1.0, 2 * std::numbers::pi * k / d);
    if (std::abs(lambda - root) > kSnapTolerance)
      throw SnappingError("eigenvalue of " + element_label(g) + " is not a root of unity of order " + std::to_string(d));
    nu[static_cast<std::size_t>(i)] = k;
    sum += root;
    prod *= root;
  }
  if (std::abs(sum - e.mat.trace().embed()) > kTraceTolerance) throw SnappingError("snapped eigenvalues miss the trace");
  if (std::abs(prod - e.det.embed()) > kTraceTolerance) throw SnappingError("snapped eigenvalues miss the determinant");
  return nu;
}

Weights canonical_weights(int d, std::array<int, 3> nu) {
  Weights best;
  best.d = d;
  bool first = true;
  for (int k = 1; k <= std::max(d, 1); ++k) {
    if (std::gcd(k, d) != 1) continue;
    std::array<int, 3> w{};
    for (std::size_t i = 0; i < 3; ++i) w[i] = d == 0 ? 0 : (k * nu[i]) % d;
    std::sort(w.begin(), w.end());
    if (first || w < best.nu) best.nu = w;
    first = false;
  }
  return best;
}

namespace {

using Series = std::vector<std::complex<double>>;

const std::vector<std::array<std::complex<double>, 3>>& spectra() {
  static const auto table = [] {
    const auto& G = grp();
    std::vector<std::array<std::complex<double>, 3>> t(G.size());
    for (std::size_t g = 0; g < G.size(); ++g) {
      const auto nu = eigen_weights(static_cast<ElementId>(g));
      const int d = G[static_cast<ElementId>(g)].order;
      for (std::size_t i = 0; i < 3; ++i) t[g][i] = std::polar(1.0, 2 * std::numbers::pi * nu[i] / d);
    }
    return t;
  }();
  return table;
}

// Graded trace of s on C[V]^N: the mean over the coset sN of 1 / det(1 - t x^-1), to degree len - 1.
Series coset_series(ElementId s, const std::vector<ElementId>& n, std::size_t len) {
  const auto& G = grp();
  Series acc(len, 0.0);
  for (auto m : n) {
    Series f(len, 0.0);
    f[0] = 1.0;
    for (auto lambda : spectra()[static_cast<std::size_t>(G.inverse(G.mul(s, m)))])
      for (std::size_t k = 1; k < len; ++k) f[k] += lambda * f[k - 1];
    for (std::size_t k = 0; k < len; ++k) acc[k] += f[k];
  }
  for (auto& c : acc) c /= static_cast<double>(n.size());
  return acc;
}

// prod 1 / (1 - lambda_i t^d_i) to degree len - 1.
Series product_series(const std::array<int, 3>& deg, const std::array<std::complex<double>, 3>& lambda,
                      std::size_t len) {
  Series f(len, 0.0);
  f[0] = 1.0;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto d = static_cast<std::size_t>(deg[i]);
    for (std::size_t k = d; k < len; ++k) f[k] += lambda[i] * f[k - d];
  }
  return f;
}

bool close(const Series& a, const Series& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (std::abs(a[k] - b[k]) > kSnapTolerance) return false;
  return true;
}

// Divides out the reflections of the diagonal action of C_e with weights b, repeatedly.
Weights strip_reflections(int e, std::array<int, 3> b) {
  for (;;) {
    int g = e;
    for (int x : b) g = std::gcd(g, x);
    e /= g;
    for (auto& x : b) x = (x / g) % e;
    bool changed = false;
    for (std::size_t i = 0; i < 3 && e > 1; ++i) {
      // The elements acting only on coordinate i are the multiples of k0.
      int k0 = 1;
      for (std::size_t j = 0; j < 3; ++j)
        if (j != i) k0 = std::lcm(k0, e / std::gcd(b[j], e));
      if (k0 == e) continue;
      for (std::size_t j = 0; j < 3; ++j) b[j] = j == i ? b[j] % k0 : b[j] * k0 / e;
      e = k0;
      changed = true;
    }
    if (!changed || e == 1) break;
  }
  if (e == 1) b = {0, 0, 0};
  return canonical_weights(e, b);
}

}  // namespace

std::optional<Weights> reduced_weights(const ElementSet& s) {
  const auto& G = grp();
  const ElementSet n_set = closure(ids_of(s & G.reflection_set()));
  const auto n = ids_of(n_set);
  if (n.size() <= 1) return std::nullopt;
  const int e = static_cast<int>(s.count() / n.size());
  std::optional<ElementId> gen;
  for (auto x : ids_of(s)) {
    auto gens = n;
    gens.push_back(x);
    if (closure(gens) == s) {
      gen = x;
      break;
    }
  }
  if (!gen) return std::nullopt;

  const std::size_t len = 3 * n.size() + 1;
  // Degrees of the basic invariants of N from its Molien series.
  Series rest = coset_series(G.identity(), n, len);
  std::vector<int> degrees;
  for (std::size_t k = 1; k < len && degrees.size() < 3; ++k) {
    const long m = std::lround(rest[k].real());
    for (long r = 0; r < m && degrees.size() < 3; ++r) {
      degrees.push_back(static_cast<int>(k));
      for (std::size_t j = len - 1; j >= k; --j) rest[j] -= rest[j - k];
    }
  }
  if (degrees.size() != 3 || static_cast<std::size_t>(degrees[0] * degrees[1] * degrees[2]) != n.size())
    throw SnappingError("Molien series of the reflection subgroup is not a product of three factors");
  const std::array<int, 3> deg{degrees[0], degrees[1], degrees[2]};

  // Eigenvalues of the generator coset on the basic invariants: zeta^a_i, zeta of order ord(gen).
  const Series target = coset_series(*gen, n, len);
  const int o = G[*gen].order;
  auto root = [o](int a) { return std::polar(1.0, 2 * std::numbers::pi * a / o); };
  for (int a0 = 0; a0 < o; ++a0)
    for (int a1 = 0; a1 < o; ++a1)
      for (int a2 = 0; a2 < o; ++a2) {
        if (!close(product_series(deg, {root(a0), root(a1), root(a2)}, len), target)) continue;
        std::array<int, 3> b{};
        const std::array<int, 3> a{a0, a1, a2};
        for (std::size_t i = 0; i < 3; ++i) {
          if ((a[i] * e) % o != 0) throw SnappingError("coset action does not have the order of S/N");
          b[i] = a[i] * e / o;
        }
        return strip_reflections(e, b);
      }
  throw SnappingError("no root-of-unity action matches the twisted Molien series");
}

std::optional<Weights> local_type(const ImageStatus& s) {
  if (s.kind == ImageKind::Cyclic) return s.weights;
  if (s.kind == ImageKind::NonCyclic) return s.reduced;
  return std::nullopt;
}

ImageStatus singularity_weights(const ElementSet& s) {
  ImageStatus st;
  if (reflection_generated(s)) return st;
  auto g = cyclic_generator(s);
  if (!g) {
    st.kind = ImageKind::NonCyclic;
    st.reduced = reduced_weights(s);
    return st;
  }
  st.kind = ImageKind::Cyclic;
  st.weights = canonical_weights(grp()[*g].order, eigen_weights(*g));
  return st;
}

OrbitRecord make_orbit_record(const TorusPoint& u, Ambient quotient) {
  OrbitRecord r;
  r.representative = u;
  r.name = point_name(u);
  r.quotient = quotient;
  r.stabilizer_G = stabilizer(u, Ambient::G);
  r.stabilizer_H = make_subgroup(r.stabilizer_G.elements & grp().ambient_set(Ambient::H));
  r.stabilizer = quotient == Ambient::G ? r.stabilizer_G : r.stabilizer_H;
  r.orbit_size = quotient_order(quotient) / static_cast<std::size_t>(r.stabilizer.order);
  r.reflection_generated = reflection_generated(r.stabilizer.elements);
  r.image = singularity_weights(r.stabilizer.elements);
  return r;
}

// ---------------------------------------------------------------- curves

bool SpecialCurve::contains(const TorusPoint& u) const {
  auto k = component_of(locus, u);
  return k && *k == component;
}

std::string SpecialCurve::id() const {
  return element_label(element) + "+" + registry_name(translate).value_or(translate.str());
}

std::vector<SpecialCurve> curves_of(ElementId g) {
  FixedLocus L = fixed_locus_structure(g);
  if (L.dimension() != 1) throw std::invalid_argument("curves_of needs an element with a one-dimensional axis");
  std::vector<SpecialCurve> out;
  for (std::size_t i = 0; i < L.translates.size(); ++i) {
    SpecialCurve c;
    c.element = g;
    c.component = i;
    c.translate = L.translates[i];
    c.direction = L.lambda1;
    c.locus = L;
    out.push_back(std::move(c));
  }
  return out;
}

SpecialCurve curve_through(ElementId g, const TorusPoint& u) {
  for (auto& c : curves_of(g))
    if (c.contains(u)) return c;
  throw std::invalid_argument("point is not fixed by " + element_label(g));
}

Subgroup generic_curve_stabilizer(const TorusPoint& translate, const IntMatrix& direction, Ambient quotient,
                                  std::uint64_t seed) {
  if (direction.rows() != 2 || direction.cols() != 6) throw std::invalid_argument("curve direction must be 2 x 6");
  const auto& G = grp();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick_prime(337, 4000);
  ElementSet acc = G.ambient_set(quotient);
  for (int sample = 0; sample < 3; ++sample) {
    std::array<Rational, 2> t;
    for (auto& tj : t) {
      std::int64_t p = pick_prime(rng);
      while (!is_prime(p)) ++p;
      std::uniform_int_distribution<std::int64_t> pick_num(1, p - 1);
      tj = ratio(static_cast<long>(pick_num(rng)), static_cast<long>(p));
    }
    TorusPoint u(on_curve(translate, direction, t[0], t[1]));
    acc &= kernels::stabilizer_mask(G.int6_table(), acc, u);
  }
  return make_subgroup(acc);
}

Subgroup generic_curve_stabilizer_exact(const TorusPoint& translate, const IntMatrix& direction, Ambient quotient) {
  const auto& G = grp();
  ElementSet out;
  for (auto g : G.members(quotient)) {
    const auto& m = G[g].int6;
    bool fixes = translate.fixed_by(m);
    for (std::size_t r = 0; r < direction.rows() && fixes; ++r)
      for (std::size_t i = 0; i < 6 && fixes; ++i) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < 6; ++j) s += m(i, j) * direction(r, j);
        fixes = s == direction(r, i);
      }
    if (fixes) out.set(static_cast<std::size_t>(g));
  }
  return make_subgroup(out);
}

bool maps_curve(ElementId g, const SpecialCurve& a, const SpecialCurve& b) {
  const auto& m = grp()[g].int6;
  IntMatrix img(a.direction.rows(), 6);
  for (std::size_t r = 0; r < img.rows(); ++r)
    for (std::size_t i = 0; i < 6; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < 6; ++j) s += m(i, j) * a.direction(r, j);
      img(r, i) = s;
    }
  if (hnf_row_lattice(img) != hnf_row_lattice(b.direction)) return false;
  auto d = (a.translate.apply(m) - b.translate).coords();
  return in_axis_plus_lattice(b.locus, d);
}

Subgroup curve_setwise_stabilizer(const SpecialCurve& c, Ambient quotient) {
  ElementSet out;
  for (auto g : grp().members(quotient))
    if (maps_curve(g, c, c)) out.set(static_cast<std::size_t>(g));
  return make_subgroup(out);
}

bool same_curve_orbit(const SpecialCurve& a, const SpecialCurve& b, Ambient quotient) {
  for (auto g : grp().members(quotient))
    if (maps_curve(g, a, b)) return true;
  return false;
}

std::vector<TorusPoint> dissident_points(const SpecialCurve& c, const ElementSet& generic, Ambient quotient) {
  const auto& G = grp();
  const RatVec6 t = c.translate.coords();
  std::set<TorusPoint> found;
  for (auto g : G.members(quotient)) {
    if (generic.test(static_cast<std::size_t>(g))) continue;
    const auto& m = G[g].int6;
    // Points t + L^T s with (M - id)(t + L^T s) in Z^6: solve B s = -(M - id) t mod Z^6.
    IntMatrix b(6, 2);
    std::vector<Rational> rhs(6);
    for (std::size_t i = 0; i < 6; ++i) {
      Rational acc = 0;
      for (std::size_t j = 0; j < 6; ++j) {
        const std::int64_t a = m(i, j) - (i == j ? 1 : 0);
        acc -= a * t[j];
        b(i, 0) += a * c.direction(0, j);
        b(i, 1) += a * c.direction(1, j);
      }
      rhs[i] = acc;
    }
    SmithForm s = smith_normal_form(b);
    if (s.rank() == 0) continue;
    if (s.rank() != 2) throw std::logic_error("dissident_points: restricted action has real rank 1");
    std::vector<Rational> cu(6);
    for (std::size_t i = 0; i < 6; ++i) {
      Rational acc = 0;
      for (std::size_t j = 0; j < 6; ++j) acc += s.u(i, j) * rhs[j];
      cu[i] = acc;
    }
    bool solvable = true;
    for (std::size_t i = 2; i < 6; ++i) solvable = solvable && cu[i].get_den() == 1;
    if (!solvable) continue;
    const std::int64_t d0 = s.d(0, 0), d1 = s.d(1, 1);
    for (std::int64_t k0 = 0; k0 < d0; ++k0)
      for (std::int64_t k1 = 0; k1 < d1; ++k1) {
        const Rational s0 = (cu[0] + k0) / d0, s1 = (cu[1] + k1) / d1;
        const Rational x = s.v(0, 0) * s0 + s.v(0, 1) * s1, y = s.v(1, 0) * s0 + s.v(1, 1) * s1;
        found.emplace(on_curve(c.translate, c.direction, x, y));
      }
  }
  return {found.begin(), found.end()};
}

// ---------------------------------------------------------------- loci

Locus parse_locus(std::string_view text) {
  if (text == "T2") return Locus::T2;
  if (text == "T6") return Locus::T6;
  if (text == "T4p" || text == "T4prime") return Locus::T4p;
  if (text == "T7") return Locus::T7;
  if (text == "beta") return Locus::Beta;
  if (text == "omega") return Locus::Omega;
  throw std::invalid_argument("unknown locus '" + std::string(text) + "' (T2, T6, T4p, T7, beta, omega)");
}

std::string_view to_string(Locus l) {
  switch (l) {
    case Locus::T2: return "T2";
    case Locus::T6: return "T6";
    case Locus::T4p: return "T4p";
    case Locus::T7: return "T7";
    case Locus::Beta: return "beta";
    case Locus::Omega: return "omega";
  }
  return "?";
}

namespace {

const std::vector<std::vector<TorusPoint>>& census() {
  static const auto c = kernels::fixed_point_census(grp());
  return c;
}

}  // namespace

std::vector<TorusPoint> special_points(int order, std::optional<int> det) {
  const auto& G = grp();
  std::set<TorusPoint> out;
  for (std::size_t g = 0; g < G.size(); ++g) {
    const auto& e = G[static_cast<ElementId>(g)];
    if (e.order != order || (det && e.det != QNum(*det))) continue;
    for (const auto& p : census()[g])
      if (!p.is_zero()) out.insert(p);
  }
  return {out.begin(), out.end()};
}

std::vector<OrbitRecord> classify_locus(Locus locus, Ambient quotient) {
  std::vector<OrbitRecord> out;
  if (locus == Locus::Beta || locus == Locus::Omega) {
    std::vector<TorusPoint> pts;
    if (locus == Locus::Beta)
      for (int b = 1; b < 16; ++b) pts.push_back(beta(b));
    else
      for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 0}, std::pair{1, 1}}) pts.push_back(omega(i, j));
    for (const auto& p : pts) out.push_back(make_orbit_record(p, quotient));
    return out;
  }
  std::vector<TorusPoint> pts;
  switch (locus) {
    case Locus::T2: pts = special_points(2, -1); break;
    case Locus::T6: pts = special_points(6, std::nullopt); break;
    case Locus::T4p: pts = special_points(4, -1); break;
    default: pts = special_points(7, std::nullopt); break;
  }
  const auto& G = grp();
  auto part = kernels::orbit_partition(G.int6_table(), G.ambient_set(quotient), pts);
  const int norbits = part.empty() ? 0 : *std::max_element(part.begin(), part.end()) + 1;
  for (int o = 0; o < norbits; ++o) {
    std::vector<TorusPoint> members;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (part[i] == o) members.push_back(pts[i]);
    out.push_back(make_orbit_record(preferred(members), quotient));
  }
  std::stable_sort(out.begin(), out.end(), [](const OrbitRecord& a, const OrbitRecord& b) {
    if (a.orbit_size != b.orbit_size) return a.orbit_size < b.orbit_size;
    return name_rank(a.representative) < name_rank(b.representative);
  });
  return out;
}

std::vector<BetaColumn> beta_table() {
  const std::vector<std::string> order = {"±S4", "S′4", "±D8", "D′8", "C4"};
  std::vector<BetaColumn> cols;
  for (const auto& l : order) cols.push_back({l, {}, 0, false});
  std::vector<std::set<TorusPoint>> keys(order.size());
  for (int b = 1; b < 16; ++b) {
    const TorusPoint p = beta(b);
    const auto s = stabilizer(p, Ambient::G);
    auto it = std::find_if(cols.begin(), cols.end(), [&](const BetaColumn& c) { return c.label == s.label; });
    if (it == cols.end()) {
      cols.push_back({s.label, {}, 0, false});
      keys.emplace_back();
      it = cols.end() - 1;
    }
    const auto k = static_cast<std::size_t>(it - cols.begin());
    it->points.push_back(*registry_name(p));
    it->reflection_generated = reflection_generated(s.elements);
    keys[k].insert(orbit_key(p, Ambient::G));
  }
  for (std::size_t k = 0; k < cols.size(); ++k) cols[k].image_count = static_cast<int>(keys[k].size());
  return cols;
}

DoublingCheck doubling_check() {
  const auto& G = grp();
  const Mat3& h3 = G[G.named("h3")].mat;
  const QNum w = QNum::w();
  const QNum seventh(ratio(1, 7), 0);
  const CVec3 eta1{{seventh * (QNum(2) * w - QNum(1)), seventh * (QNum(3) + w), seventh * (QNum(9) - QNum(4) * w)}};
  const CVec3 expected{{QNum(1) - w, QNum(-1) - w, QNum(-3) + w}};
  DoublingCheck r;
  const CVec3 diff = h3 * eta1 - QNum(2) * eta1;
  r.vector_identity = diff == expected && lattice_contains(diff) && TorusPoint::from_vector(eta1) == eta(1);
  const TorusPoint e1 = eta(1);
  r.torus_identity = e1.apply(G[G.named("h3")].int6) == e1.times(2);
  r.multiples = true;
  for (int i = 1; i <= 6; ++i) r.multiples = r.multiples && eta(i) == e1.times(i);
  const auto o1 = orbit(e1, Ambient::H), o3 = orbit(eta(3), Ambient::H);
  auto in = [](const std::vector<TorusPoint>& o, const TorusPoint& p) { return std::binary_search(o.begin(), o.end(), p); };
  r.h_orbits = in(o1, eta(2)) && in(o1, eta(4)) && in(o3, eta(5)) && in(o3, eta(6)) && !in(o1, eta(3)) &&
               o1.size() == 24 && o3.size() == 24;
  r.minus_one_swaps = in(o3, e1.apply(G[G.minus_one()].int6));
  return r;
}

// ---------------------------------------------------------------- report

SingularityReport singularity_report(Ambient quotient, std::uint64_t seed) {
  const auto& G = grp();
  SingularityReport rep;
  rep.quotient = quotient;
  const ElementSet ambient = G.ambient_set(quotient);

  // Special points: fixed points of elliptic elements of the ambient group, by orbit.
  std::set<TorusPoint> special;
  special.insert(TorusPoint());
  for (auto g : G.members(quotient))
    for (const auto& p : census()[static_cast<std::size_t>(g)]) special.insert(p);
  std::vector<TorusPoint> pts(special.begin(), special.end());
  auto part = kernels::orbit_partition(G.int6_table(), ambient, pts);
  const int norbits = part.empty() ? 0 : *std::max_element(part.begin(), part.end()) + 1;
  for (int o = 0; o < norbits; ++o) {
    std::vector<TorusPoint> members;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (part[i] == o) members.push_back(pts[i]);
    rep.special_orbits.push_back(stratum_of(preferred(members), quotient));
  }

  // Special curves: components of fixed loci of elements with a one-dimensional axis, up to the action.
  std::vector<SpecialCurve> curves;
  for (const auto& cls : conjugacy_classes(quotient)) {
    ElementId g = cls.representative;
    for (auto m : cls.members)
      if (G.name_of(m)) {
        g = m;
        break;
      }
    if (G[g].order == 1 || !det_minus_identity(G[g].mat).is_zero()) continue;
    if (kernel_K(G[g].mat - Mat3::identity()).size() != 1) continue;
    for (auto& c : curves_of(g)) {
      bool seen = false;
      for (const auto& d : curves) seen = seen || same_curve_orbit(c, d, quotient);
      if (!seen) curves.push_back(std::move(c));
    }
  }

  std::vector<std::pair<SpecialCurve, bool>> singular_flags;
  for (std::size_t k = 0; k < curves.size(); ++k) {
    const auto& c = curves[k];
    CurveStratum cs;
    cs.id = c.id();
    cs.element = element_label(c.element);
    cs.translate = c.translate;
    const Subgroup gen = generic_curve_stabilizer(c.translate, c.direction, quotient, seed * 1000003u + k);
    const Subgroup exact = generic_curve_stabilizer_exact(c.translate, c.direction, quotient);
    cs.generic_label = gen.label;
    cs.generic_order = gen.order;
    cs.matches_exact = gen.elements == exact.elements;
    cs.generic_image = singularity_weights(gen.elements);
    const Subgroup setwise = curve_setwise_stabilizer(c, quotient);
    cs.setwise_label = setwise.label;
    cs.setwise_order = setwise.order;
    std::map<TorusPoint, std::vector<TorusPoint>> by_orbit;
    for (const auto& p : dissident_points(c, gen.elements, quotient)) by_orbit[orbit_key(p, quotient)].push_back(p);
    for (const auto& [key, members] : by_orbit) cs.dissident.push_back(stratum_of(preferred(members), quotient));
    const auto generic_type = local_type(cs.generic_image);
    for (std::size_t i = 0; i < cs.dissident.size(); ++i)
      if (local_type(cs.dissident[i].image) != generic_type) cs.type_changes.push_back(i);
    const bool singular = cs.generic_image.kind != ImageKind::Smooth;
    singular_flags.emplace_back(c, singular);
    (singular ? rep.curves : rep.smooth_curves).push_back(std::move(cs));
  }

  auto on_singular_curve = [&](const TorusPoint& u) {
    for (const auto& p : orbit(u, quotient))
      for (const auto& [c, singular] : singular_flags)
        if (singular && c.contains(p)) return true;
    return false;
  };

  std::set<TorusPoint> isolated_keys;
  auto consider = [&](const PointStratum& s) {
    if (s.image.kind == ImageKind::Smooth || on_singular_curve(s.representative)) return;
    if (isolated_keys.insert(orbit_key(s.representative, quotient)).second) rep.isolated.push_back(s);
  };
  for (const auto& s : rep.special_orbits) {
    if (s.image.kind == ImageKind::Smooth) ++rep.smooth_special_orbits;
    consider(s);
  }
  for (const auto& cs : rep.smooth_curves)
    for (const auto& d : cs.dissident) consider(d);

  // q on l: beta0011 lies on the axis translate of the antireflection h4'^2 that is a singular curve.
  {
    const ElementId rho = G.power(G.named("h4p"), 2);
    const TorusPoint q = beta(0b0011);
    bool ok = G.is_antireflection(rho) && q.fixed_by(G[rho].int6);
    if (ok) {
      const SpecialCurve c = curve_through(rho, q);
      const Subgroup gen = generic_curve_stabilizer(c.translate, c.direction, quotient, seed);
      ok = !reflection_generated(gen.elements);
      bool matches = false;
      for (const auto& [d, singular] : singular_flags) matches = matches || (singular && same_curve_orbit(c, d, quotient));
      ok = ok && matches;
    }
    rep.q_on_l = ok;
  }

  // A germ that is neither smooth nor cyclic may only occur on a singular curve.
  if (quotient == Ambient::G) {
    for (const auto& s : rep.isolated)
      if (s.image.kind == ImageKind::NonCyclic)
        throw ConsistencyError("isolated singular point with a non-cyclic stabilizer at " + s.representative.str());
    for (const auto& c : rep.curves)
      if (c.generic_image.kind == ImageKind::NonCyclic)
        throw ConsistencyError("singular curve " + c.id + " with a non-cyclic generic stabilizer");
  }

  rep.notes.push_back("weights are canonical: 1/2(0,1,1) is the same germ as 1/2(1,1,0) and 1/2(1,0,1)");
  rep.notes.push_back("generic curve stabilizers sampled with seed " + std::to_string(seed) +
                      " and compared against the exact pointwise stabilizer of the curve");
  for (const auto& c : rep.curves)
    for (const auto& d : c.dissident)
      if (d.image.kind == ImageKind::NonCyclic)
        rep.notes.push_back((d.name.empty() ? d.representative.str() : d.name) + " on " + c.id + ": stabilizer " +
                            d.stabilizer_label + " is not generated by its reflections; " + d.image.str());
  if (quotient == Ambient::G) {
    rep.notes.push_back("claim, not computed: the singular curve is isomorphic to P^1");
    rep.notes.push_back("claim, not computed: X is strongly simply connected");
  }
  return rep;
}

}  // namespace klein

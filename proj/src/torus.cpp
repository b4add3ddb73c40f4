#include "klein/torus.hpp"

#include <algorithm>
#include <map>
#include <regex>

namespace klein {

namespace {

Rational half() { return ratio(1, 2); }

bool divisible(const QNum& z, const QNum& d) { return (z / d).is_integral(); }

std::int64_t to_i64(const Rational& r) {
  if (r.get_den() != 1 || !r.get_num().fits_slong_p()) throw std::overflow_error("value is not a small integer");
  return r.get_num().get_si();
}

mpz_class lcm_of_denominators(std::span<const Rational> v) {
  mpz_class d = 1;
  for (const auto& x : v) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
  return d;
}

std::vector<std::int64_t> scaled(std::span<const Rational> v, const mpz_class& d) {
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_i64(x * d));
  return out;
}

IntMatrix minus_identity(const IntMat6& m) {
  IntMatrix a = m.to_matrix();
  for (std::size_t i = 0; i < 6; ++i) a(i, i) -= 1;
  return a;
}

std::vector<TorusPoint> fixed_points_int6(const IntMat6& m) {
  std::vector<TorusPoint> out;
  for (const auto& x : torsion_solutions(minus_identity(m))) out.emplace_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

// (u, x) / (u, u) u summed over an orthogonal basis of the axis.
CVec3 project_to_complement(const std::vector<CVec3>& orth, const CVec3& x) {
  CVec3 y = x;
  for (const auto& u : orth) y = y - (hermitian(u, x) / hermitian(u, u)) * u;
  return y;
}

}  // namespace

bool lattice_contains(const CVec3& v) {
  for (const auto& c : to_eps_coords(v))
    if (c.get_den() != 1) return false;
  return true;
}

bool lattice_contains_congruence(const CVec3& v) {
  for (std::size_t i = 0; i < 3; ++i)
    if (!v[i].is_integral()) return false;
  const QNum w = QNum::w(), wb = QNum::w_bar();
  return divisible(v[0] - v[1], w) && divisible(v[1] - v[2], w) && divisible(v[0] + v[1] + v[2], wb);
}

QNum det_minus_identity(const Mat3& m) { return (m - Mat3::identity()).det(); }

std::int64_t fixed_point_count(const Mat3& m) {
  QNum d = det_minus_identity(m);
  if (d.is_zero()) throw ParabolicElement("element has eigenvalue 1; its fixed locus is not finite");
  return to_i64(d.norm());
}

std::int64_t fixed_point_count(ElementId g) { return fixed_point_count(Group::instance()[g].mat); }

std::vector<std::vector<Rational>> torsion_solutions(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("torsion_solutions needs a square matrix");
  const std::size_t n = a.rows();
  SmithForm s = smith_normal_form(a);
  auto d = s.diagonal();
  for (auto x : d)
    if (x == 0) throw ParabolicElement("matrix is singular; solutions are not finite");
  // A x in Z^n  <=>  D (V^-1 x) in Z^n, so x = V x' with x'_i in (1/d_i) Z.
  std::vector<std::vector<Rational>> out;
  std::vector<std::int64_t> k(n, 0);
  for (;;) {
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) {
      Rational acc = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (k[j]) acc += Rational(mpz_class(static_cast<long>(s.v(i, j) * k[j])), mpz_class(static_cast<long>(d[j])));
      acc.canonicalize();
      mpz_class fl;
      mpz_fdiv_q(fl.get_mpz_t(), acc.get_num_mpz_t(), acc.get_den_mpz_t());
      x[i] = acc - Rational(fl);
    }
    out.push_back(std::move(x));
    std::size_t pos = 0;
    while (pos < n && ++k[pos] == d[pos]) k[pos++] = 0;
    if (pos == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TorusPoint> enumerate_fixed_points(const Mat3& m) {
  fixed_point_count(m);  // throws for parabolic elements
  return fixed_points_int6(mat3_to_int6(m));
}

std::vector<TorusPoint> enumerate_fixed_points(ElementId g) { return enumerate_fixed_points(Group::instance()[g].mat); }

FixedLocus fixed_locus_structure(const Mat3& m) {
  if (m == Mat3::identity()) throw IdentityElement("the identity fixes all of J");
  FixedLocus L;
  L.kind = LocusKind::Parabolic;
  L.axis = kernel_K(m - Mat3::identity());
  if (L.axis.empty()) throw EllipticElement("element has no eigenvalue 1; use enumerate_fixed_points");
  L.int6 = mat3_to_int6(m);
  const std::size_t k = L.axis.size(), ra = 6 - 2 * k;

  L.lambda1 = integer_kernel(minus_identity(L.int6));

  // Lambda_a: the integer vectors Hermitian-orthogonal to the axis.
  const auto& eps = eps_vectors();
  std::vector<std::vector<std::int64_t>> cond;
  for (const auto& b : L.axis) {
    std::vector<Rational> re(6), im(6);
    for (std::size_t j = 0; j < 6; ++j) {
      QNum h = hermitian(b, eps[j]);
      re[j] = h.x();
      im[j] = h.y();
    }
    cond.push_back(scaled(re, lcm_of_denominators(re)));
    cond.push_back(scaled(im, lcm_of_denominators(im)));
  }
  L.lambda_a = integer_kernel(IntMatrix::from_rows(cond, 6));
  if (L.lambda1.rows() != 2 * k || L.lambda_a.rows() != ra)
    throw std::logic_error("fixed_locus_structure: unexpected lattice ranks");

  IntMatrix both(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) both(i, j) = i < 2 * k ? L.lambda1(i, j) : L.lambda_a(i - 2 * k, j);
  L.index = std::llabs(determinant(both));

  std::vector<CVec3> orth;
  for (const auto& b : L.axis) {
    CVec3 u = b;
    for (const auto& o : orth) u = u - (hermitian(o, b) / hermitian(o, o)) * o;
    orth.push_back(u);
  }
  L.projection = RatMatrix(6, 6);
  for (std::size_t j = 0; j < 6; ++j) {
    auto col = to_eps_coords(project_to_complement(orth, eps[j]));
    for (std::size_t i = 0; i < 6; ++i) L.projection(i, j) = col[i];
  }
  std::vector<Rational> all;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) all.push_back(L.projection(i, j));
  const mpz_class den = lcm_of_denominators(all);
  L.projection_denominator = den.get_si();
  std::vector<std::vector<std::int64_t>> gens;
  for (std::size_t j = 0; j < 6; ++j) {
    std::vector<Rational> col(6);
    for (std::size_t i = 0; i < 6; ++i) col[i] = L.projection(i, j);
    gens.push_back(scaled(col, den));
  }
  L.projected_lattice = Lattice(IntMatrix::from_rows(gens, 6));

  // The action restricted to Lambda_a: M b_i = sum_j R(i, j) b_j.
  RatMatrix bt(6, ra);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < ra; ++j) bt(i, j) = L.lambda_a(j, i);
  IntMatrix rt(ra, ra);  // R transposed, minus the identity
  for (std::size_t i = 0; i < ra; ++i) {
    std::vector<Rational> img(6);
    for (std::size_t r = 0; r < 6; ++r) {
      std::int64_t acc = 0;
      for (std::size_t c = 0; c < 6; ++c) acc += L.int6(r, c) * L.lambda_a(i, c);
      img[r] = acc;
    }
    auto coef = solve(bt, img);
    if (!coef) throw std::logic_error("fixed_locus_structure: Lambda_a is not invariant");
    for (std::size_t j = 0; j < ra; ++j) rt(j, i) = to_i64((*coef)[j]) - (i == j ? 1 : 0);
  }
  std::vector<RatVec6> reps;
  for (const auto& x : torsion_solutions(rt)) {
    RatVec6 y;
    for (std::size_t c = 0; c < 6; ++c) {
      Rational acc = 0;
      for (std::size_t i = 0; i < ra; ++i) acc += x[i] * L.lambda_a(i, c);
      y[c] = acc;
    }
    reps.push_back(y);
    L.restricted_fixed.emplace_back(y);
  }

  // Two restricted fixed points lie on one component iff their difference is in pi_a(Lambda).
  std::vector<int> cls(reps.size(), -1);
  int ncls = 0;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (cls[i] != -1) continue;
    cls[i] = ncls;
    TorusPoint best = L.restricted_fixed[i];
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      if (cls[j] != -1) continue;
      RatVec6 diff;
      for (std::size_t c = 0; c < 6; ++c) diff[c] = reps[j][c] - reps[i][c];
      auto v = scaled(diff, den);
      if (L.projected_lattice.contains(v)) {
        cls[j] = ncls;
        best = std::min(best, L.restricted_fixed[j]);
      }
    }
    L.translates.push_back(best);
    ++ncls;
  }
  L.component_count = ncls;
  std::sort(L.translates.begin(), L.translates.end());
  std::sort(L.restricted_fixed.begin(), L.restricted_fixed.end());
  return L;
}

FixedLocus fixed_locus_structure(ElementId g) {
  FixedLocus L = fixed_locus_structure(Group::instance()[g].mat);
  L.element = g;
  return L;
}

FixedLocus fixed_locus(ElementId g) {
  const auto& G = Group::instance();
  if (!det_minus_identity(G[g].mat).is_zero()) {
    FixedLocus L;
    L.element = g;
    L.int6 = G[g].int6;
    L.kind = LocusKind::Elliptic;
    L.points = fixed_points_int6(L.int6);
    L.component_count = static_cast<std::int64_t>(L.points.size());
    return L;
  }
  return fixed_locus_structure(g);
}

bool in_axis_plus_lattice(const FixedLocus& locus, std::span<const Rational> v) {
  if (locus.kind != LocusKind::Parabolic) throw std::invalid_argument("in_axis_plus_lattice needs a parabolic locus");
  auto p = locus.projection.apply(v);
  for (auto& x : p) {
    x *= locus.projection_denominator;
    if (x.get_den() != 1) return false;
  }
  return locus.projected_lattice.contains(scaled(p, 1));
}

std::optional<std::size_t> component_of(const FixedLocus& locus, const TorusPoint& u) {
  if (!u.fixed_by(locus.int6)) return std::nullopt;
  for (std::size_t i = 0; i < locus.translates.size(); ++i) {
    auto d = (u - locus.translates[i]).coords();
    if (in_axis_plus_lattice(locus, d)) return i;
  }
  throw std::logic_error("component_of: fixed point lies on no listed component");
}

// ---------------------------------------------------------------- registry

TorusPoint xi(int k) {
  if (k < 0 || k > 63) throw UnknownName("xi index must be in 0..63");
  RatVec6 c;
  for (int i = 0; i < 6; ++i) c[static_cast<std::size_t>(i)] = (k >> i & 1) ? half() : Rational(0);
  return TorusPoint(c);
}

TorusPoint beta(int bits) {
  if (bits < 0 || bits > 15) throw UnknownName("beta multiindex must be four bits");
  const QNum w = QNum::w(), wb = QNum::w_bar(), h(half(), 0);
  const std::array<CVec3, 4> gens = {CVec3{{QNum(1), QNum(0), QNum(0)}}, CVec3{{w, QNum(0), QNum(0)}},
                                     CVec3{{h * w, h * w, -(h * w)}}, CVec3{{h * wb, QNum(1), QNum(0)}}};
  CVec3 v;
  for (int i = 0; i < 4; ++i)
    if (bits >> (3 - i) & 1) v = v + gens[static_cast<std::size_t>(i)];
  return TorusPoint::from_vector(v);
}

TorusPoint omega(int i, int j) {
  if (i < 0 || i > 1 || j < 0 || j > 1) throw UnknownName("omega indices must be 0 or 1");
  // i counts (1,1,1), j counts wbar/2 (1,1,1): omega10 is the point with the monomial stabilizer.
  const QNum a = QNum(Rational(j) * half(), 0) * QNum::w_bar() + QNum(i);
  return TorusPoint::from_vector(CVec3{{a, a, a}});
}

TorusPoint eta(int i) {
  if (i < 0 || i > 6) throw UnknownName("eta index must be in 0..6");
  const std::array<int, 6> s{-1, -1, 1, 1, 1, -1};
  RatVec6 c;
  for (std::size_t k = 0; k < 6; ++k) c[k] = ratio(s[k] * i, 7);
  return TorusPoint(c);
}

TorusPoint kappa(int i) {
  if (i < 0 || i > 3) throw UnknownName("kappa index must be in 0..3");
  const QNum h(half(), 0), hw = h * QNum::w();
  const CVec3 k1{{QNum(1), QNum(0), QNum(0)}}, k2{{hw, hw, QNum(0)}};
  CVec3 v;
  if (i & 1) v = v + k1;
  if (i & 2) v = v + k2;
  return TorusPoint::from_vector(v);
}

TorusPoint theta(int i, int j) {
  if (i < 0 || i > 2 || j < 0 || j > 2) throw UnknownName("theta indices must be in 0..2");
  const QNum w = QNum::w();
  const QNum a(ratio(i, 3), 0), b(ratio(j, 3), 0);
  const CVec3 v{{-(a * w) - b * QNum(2), -(a * w) - b * QNum(2), a * w * QNum(2) + b * QNum(4)}};
  return TorusPoint::from_vector(v);
}

TorusPoint registry_point(std::string_view name) {
  static const std::regex re(R"(^(xi)(\d{1,2})$|^(beta)([01]{4})$|^(omega)([01])([01])$|^(eta)(\d)$|^(kappa)(\d)$|^(theta)(\d)(\d)$)");
  std::cmatch m;
  const std::string s(name);
  if (s == "0") return TorusPoint();
  if (!std::regex_match(s.c_str(), m, re)) throw UnknownName("unknown point name '" + s + "'");
  if (m[1].matched) return xi(std::stoi(m[2]));
  if (m[3].matched) return beta(std::stoi(m[4], nullptr, 2));
  if (m[5].matched) return omega(std::stoi(m[6]), std::stoi(m[7]));
  if (m[8].matched) return eta(std::stoi(m[9]));
  if (m[10].matched) return kappa(std::stoi(m[11]));
  return theta(std::stoi(m[13]), std::stoi(m[14]));
}

std::vector<std::string> registry_names() {
  std::vector<std::string> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.push_back("omega" + std::to_string(i) + std::to_string(j));
  for (int b = 0; b < 16; ++b) {
    std::string bits;
    for (int i = 3; i >= 0; --i) bits.push_back((b >> i & 1) ? '1' : '0');
    out.push_back("beta" + bits);
  }
  for (int i = 0; i <= 6; ++i) out.push_back("eta" + std::to_string(i));
  for (int i = 0; i <= 3; ++i) out.push_back("kappa" + std::to_string(i));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.push_back("theta" + std::to_string(i) + std::to_string(j));
  for (int k = 0; k < 64; ++k) out.push_back("xi" + std::to_string(k));
  return out;
}

std::optional<std::string> registry_name(const TorusPoint& u) {
  if (u.is_zero()) return "0";
  static const auto table = [] {
    std::vector<std::pair<TorusPoint, std::string>> t;
    for (const auto& n : registry_names()) t.emplace_back(registry_point(n), n);
    return t;
  }();
  for (const auto& [p, n] : table)
    if (p == u) return n;
  return std::nullopt;
}

TorusPoint parse_point(std::string_view text) {
  if (!text.empty() && text.front() == '[') return TorusPoint::parse(text);
  return registry_point(text);
}

namespace kernels {

std::vector<std::vector<TorusPoint>> fixed_point_census(const Group& g) {
  const auto n = static_cast<std::ptrdiff_t>(g.size());
  std::vector<std::vector<TorusPoint>> out(g.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const auto& e = g[static_cast<ElementId>(k)];
    if (determinant(minus_identity(e.int6)) != 0) out[static_cast<std::size_t>(k)] = fixed_points_int6(e.int6);
  }
  return out;
}

std::vector<std::vector<TorusPoint>> fixed_point_census_serial(const Group& g) {
  std::vector<std::vector<TorusPoint>> out;
  for (const auto& e : g.elements()) {
    if (det_minus_identity(e.mat).is_zero()) {
      out.emplace_back();
      continue;
    }
    // Brute force over (1/n) Z^6 / Z^6, n the exponent of (M - id)^-1 Z^6 / Z^6.
    RatMatrix a(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) a(i, j) = e.int6(i, j) - (i == j ? 1 : 0);
    const auto inv = *inverse(a);
    mpz_class lcm = 1;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), inv(i, j).get_den_mpz_t());
    const std::int64_t n = lcm.get_si();
    std::vector<TorusPoint> pts;
    std::array<std::int64_t, 6> num{};
    for (;;) {
      auto p = TorusPoint::from_numerators(num, n);
      if (p.fixed_by(e.int6)) pts.push_back(p);
      std::size_t pos = 0;
      while (pos < 6 && ++num[pos] == n) num[pos++] = 0;
      if (pos == 6) break;
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    out.push_back(std::move(pts));
  }
  return out;
}

}  // namespace kernels

}  // namespace klein

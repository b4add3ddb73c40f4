#pragma once

// Points of the torus J = C^3 / Lambda: lattice membership, fixed points of
// elliptic elements, the component structure of fixed loci of parabolic
// elements, and the registry of named torsion points.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "klein/group.hpp"
#include "klein/torus_point.hpp"

namespace klein {

class ParabolicElement : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class EllipticElement : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class IdentityElement : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// v in Lambda, via integrality of the epsilon coordinates.
bool lattice_contains(const CVec3& v);
/// v in Lambda, via the congruences: entries in O, z1 = z2 = z3 mod w, z1 + z2 + z3 = 0 mod wbar.
bool lattice_contains_congruence(const CVec3& v);

/// det(m - id) over K.
QNum det_minus_identity(const Mat3& m);

/// |det6(m - id)| = N(det3(m - id)). Throws ParabolicElement when 1 is an eigenvalue.
std::int64_t fixed_point_count(const Mat3& m);
std::int64_t fixed_point_count(ElementId g);

/// All x in Q^n / Z^n with a * x in Z^n, for nonsingular square a. Sorted.
std::vector<std::vector<Rational>> torsion_solutions(const IntMatrix& a);

/// Fixed points of an elliptic lattice automorphism on J, sorted.
std::vector<TorusPoint> enumerate_fixed_points(const Mat3& m);
std::vector<TorusPoint> enumerate_fixed_points(ElementId g);

enum class LocusKind { Elliptic, Parabolic };

struct FixedLocus {
  ElementId element = -1;  // -1 for a matrix outside the group table
  IntMat6 int6;
  LocusKind kind = LocusKind::Elliptic;
  std::vector<TorusPoint> points;  // elliptic case

  // Parabolic case. Lattices are row bases in epsilon coordinates.
  std::vector<CVec3> axis;      // K-basis of V1 = ker(g - id)
  IntMatrix lambda1;            // Lambda n V1, HNF
  IntMatrix lambda_a;           // Lambda n V_a, HNF
  std::int64_t index = 0;       // [Lambda : Lambda1 + Lambda_a]
  RatMatrix projection;         // orthogonal projection onto V_a, epsilon coordinates
  Lattice projected_lattice;    // pi_a(Lambda) scaled by projection_denominator
  std::int64_t projection_denominator = 1;
  std::vector<TorusPoint> restricted_fixed;  // fixed points of g on V_a / Lambda_a, as points of J
  std::vector<TorusPoint> translates;        // one representative per component
  std::int64_t component_count = 0;

  /// Complex dimension of the fixed locus (0 for elliptic).
  std::size_t dimension() const { return axis.size(); }
};

/// Component structure of the fixed locus of a parabolic element.
/// Throws IdentityElement for the identity and EllipticElement when 1 is not an eigenvalue.
FixedLocus fixed_locus_structure(const Mat3& m);
FixedLocus fixed_locus_structure(ElementId g);
/// Either kind.
FixedLocus fixed_locus(ElementId g);

/// v in V1 + Lambda for the parabolic locus, v given in epsilon coordinates.
bool in_axis_plus_lattice(const FixedLocus& locus, std::span<const Rational> v);
/// Index into locus.translates of the component through a fixed point u; nullopt if u is not fixed.
std::optional<std::size_t> component_of(const FixedLocus& locus, const TorusPoint& u);

// ---------------------------------------------------------------- registry

/// Half-period xi_k: bit i of k gives the epsilon_{i+1} coordinate 1/2.
TorusPoint xi(int k);
/// beta with multiindex bits i0 i1 i2 i3 (i0 most significant).
TorusPoint beta(int bits);
/// omega_ij = i (1,1,1) + j wbar/2 (1,1,1).
TorusPoint omega(int i, int j);
/// eta_i = i (-1,-1,1,1,1,-1) / 7 in epsilon coordinates.
TorusPoint eta(int i);
/// Translates of the axis of rho2: kappa0 = 0, kappa1, kappa2, kappa3 = kappa1 + kappa2.
TorusPoint kappa(int i);
TorusPoint theta(int i, int j);

/// Names: xi0..xi63, beta0000..beta1111, omega00..omega11, eta0..eta6, kappa0..kappa3, theta00..theta22.
TorusPoint registry_point(std::string_view name);
std::vector<std::string> registry_names();
/// A registry name for u, preferring omega, beta, eta, kappa, theta, xi in that order; "0" for zero.
std::optional<std::string> registry_name(const TorusPoint& u);
/// A point given either by registry name or as "[a,b,c,d,e,f]".
TorusPoint parse_point(std::string_view text);

namespace kernels {

/// Fixed points of every elliptic element, indexed by element id (empty for parabolic ones).
std::vector<std::vector<TorusPoint>> fixed_point_census(const Group& g);
std::vector<std::vector<TorusPoint>> fixed_point_census_serial(const Group& g);

}  // namespace kernels

}  // namespace klein

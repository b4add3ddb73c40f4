#pragma once

// Stabilizers and orbits of torsion points, cyclic quotient singularity types,
// generic stabilizers of special curves, and the singular locus of J/G and J/H.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "klein/group.hpp"
#include "klein/torus.hpp"

namespace klein {

class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class SnappingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Subgroup stabilizer(const TorusPoint& u, Ambient quotient);
/// Sorted orbit of u.
std::vector<TorusPoint> orbit(const TorusPoint& u, Ambient quotient);
/// Smallest point of the orbit; a canonical orbit key.
TorusPoint orbit_key(const TorusPoint& u, Ambient quotient);

/// True iff s equals the subgroup generated by the reflections it contains.
bool reflection_generated(const ElementSet& s);

/// 1/d (nu1, nu2, nu3), nu sorted ascending.
struct Weights {
  int d = 1;
  std::array<int, 3> nu{};
  std::string str() const;
  friend bool operator==(const Weights&, const Weights&) = default;
};

enum class ImageKind { Smooth, Cyclic, NonCyclic };

struct ImageStatus {
  ImageKind kind = ImageKind::Smooth;
  Weights weights;  // Cyclic only
  /// NonCyclic only: the germ C^3/S rewritten as (C^3/N)/(S/N), N the reflection subgroup, when
  /// S/N is cyclic. C^3/N is again C^3 and S/N acts diagonally on its coordinates.
  std::optional<Weights> reduced;
  std::string str() const;
  friend bool operator==(const ImageStatus&, const ImageStatus&) = default;
};

/// Distance within which a numerical eigenvalue is snapped to a root of unity.
inline constexpr double kSnapTolerance = 1e-6;
/// Allowed gap between the snapped eigenvalues and the exact trace and determinant.
inline constexpr double kTraceTolerance = 1e-9;

/// Eigenvalue weights of g as d-th roots of unity, d = order of g, in the order Eigen returns them.
/// Throws SnappingError when an eigenvalue is not within kSnapTolerance of a root of unity or the
/// trace / determinant cross-checks fail.
std::array<int, 3> eigen_weights(ElementId g);
/// Lexicographically smallest sorted tuple (k nu mod d) over k prime to d.
Weights canonical_weights(int d, std::array<int, 3> nu);
/// Weights of S/N on the basic invariants of the reflection subgroup N of s, with any
/// reflections of that action divided out in turn; 1/1(0,0,0) when s = N. nullopt when N is
/// trivial or S/N is not cyclic.
std::optional<Weights> reduced_weights(const ElementSet& s);
/// Smooth when reflection-generated, else cyclic weights, else NonCyclic (with reduced weights if any).
ImageStatus singularity_weights(const ElementSet& s);
/// Cyclic weights, or the reduced weights of a non-cyclic germ; nullopt when smooth or unknown.
std::optional<Weights> local_type(const ImageStatus& s);

struct OrbitRecord {
  TorusPoint representative;
  std::string name;  // registry name of the representative, empty when it has none
  Ambient quotient = Ambient::G;
  std::size_t orbit_size = 0;
  Subgroup stabilizer;  // in the quotient group
  Subgroup stabilizer_G;
  Subgroup stabilizer_H;
  bool reflection_generated = false;
  ImageStatus image;
};

OrbitRecord make_orbit_record(const TorusPoint& u, Ambient quotient);

// ---------------------------------------------------------------- curves

/// A component of the fixed locus of a parabolic element with a one-dimensional axis:
/// translate + (axis mod Lambda1).
struct SpecialCurve {
  ElementId element = -1;
  std::size_t component = 0;
  TorusPoint translate;
  IntMatrix direction;  // Lambda1 basis, two rows in epsilon coordinates
  FixedLocus locus;

  /// True iff u lies on this curve.
  bool contains(const TorusPoint& u) const;
  /// "<element>+<translate>", using registry names where available.
  std::string id() const;
};

std::vector<SpecialCurve> curves_of(ElementId g);
/// The curve of g through u (u must be fixed by g).
SpecialCurve curve_through(ElementId g, const TorusPoint& u);

/// Intersection of the stabilizers of three random points translate + t1 l1 + t2 l2,
/// the t_j rationals with prime denominators above 336.
Subgroup generic_curve_stabilizer(const TorusPoint& translate, const IntMatrix& direction, Ambient quotient,
                                  std::uint64_t seed);
/// {g : (g - id) fixes direction pointwise and (g - id) translate in Z^6}.
Subgroup generic_curve_stabilizer_exact(const TorusPoint& translate, const IntMatrix& direction, Ambient quotient);
/// Elements mapping the curve onto itself.
Subgroup curve_setwise_stabilizer(const SpecialCurve& c, Ambient quotient);
/// g maps curve a onto curve b.
bool maps_curve(ElementId g, const SpecialCurve& a, const SpecialCurve& b);
bool same_curve_orbit(const SpecialCurve& a, const SpecialCurve& b, Ambient quotient);

/// Points of the curve whose stabilizer is strictly larger than the generic one, sorted.
std::vector<TorusPoint> dissident_points(const SpecialCurve& c, const ElementSet& generic, Ambient quotient);

// ---------------------------------------------------------------- loci

enum class Locus { T2, T6, T4p, T7, Beta, Omega };
Locus parse_locus(std::string_view text);
std::string_view to_string(Locus l);

/// Nonzero fixed points of the elements of G of the given order (and determinant, when set).
std::vector<TorusPoint> special_points(int order, std::optional<int> det);

/// T-loci: one record per orbit. beta, omega: one record per nonzero point.
std::vector<OrbitRecord> classify_locus(Locus locus, Ambient quotient);

/// Stabilizer labels of the nonzero beta points in table order and the number of distinct
/// G-orbits among the points of each label.
struct BetaColumn {
  std::string label;
  std::vector<std::string> points;
  int image_count = 0;
  bool reflection_generated = false;
};
std::vector<BetaColumn> beta_table();

struct DoublingCheck {
  bool vector_identity = false;  // h3 eta1 - 2 eta1 = (1-w, -1-w, -3+w), in Lambda
  bool torus_identity = false;   // h3 eta1 = 2 eta1 on J
  bool multiples = false;        // eta_i = i eta_1
  bool h_orbits = false;         // {eta1, eta2, eta4} and {eta3, eta5, eta6} are the two H-orbits
  bool minus_one_swaps = false;  // -1 maps one H-orbit to the other
  bool ok() const { return vector_identity && torus_identity && multiples && h_orbits && minus_one_swaps; }
};
DoublingCheck doubling_check();

// ---------------------------------------------------------------- report

struct PointStratum {
  TorusPoint representative;
  std::string name;
  std::size_t orbit_size = 0;
  std::string stabilizer_label;
  int stabilizer_order = 0;
  ImageStatus image;
};

struct CurveStratum {
  std::string id;
  std::string element;  // name or "#id"
  TorusPoint translate;
  std::string generic_label;
  int generic_order = 0;
  bool matches_exact = false;  // sampled generic stabilizer equals the exact one
  ImageStatus generic_image;
  std::vector<PointStratum> dissident;  // one per ambient orbit
  std::vector<std::size_t> type_changes;  // indices into dissident whose local type differs from the generic one
  std::string setwise_label;
  int setwise_order = 0;
};

struct SingularityReport {
  Ambient quotient = Ambient::G;
  std::vector<PointStratum> isolated;
  std::vector<CurveStratum> curves;         // singular curves
  std::vector<CurveStratum> smooth_curves;  // special curves with smooth generic image
  std::vector<PointStratum> special_orbits; // all orbits of fixed points of elliptic elements
  std::size_t smooth_special_orbits = 0;
  bool q_on_l = false;
  std::vector<std::string> notes;
};

SingularityReport singularity_report(Ambient quotient, std::uint64_t seed = 0);

}  // namespace klein

#pragma once

// The reflection group G of order 336 generated by r1, r2, r3, its unimodular
// half H (Klein's simple group), conjugacy classes, the subgroup lattice of H,
// and recognition of subgroups by the names used for point stabilizers.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "klein/kernels.hpp"
#include "klein/linalg.hpp"

namespace klein {

enum class Ambient { G, H };

std::string_view to_string(Ambient a);
Ambient parse_ambient(std::string_view text);

struct GroupElement {
  Mat3 mat;
  IntMat6 int6;
  QNum det;
  int order = 1;
  std::vector<int> word;  // generator indices 1..3, shortest BFS witness
};

class UnknownName : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The 42 roots: signed coordinate permutations of (2,0,0), (0,w,w), (1,1,wbar), sorted.
std::vector<CVec3> roots();
/// One root from each pair +-e: the lexicographically larger on (x1,y1,x2,y2,x3,y3).
std::vector<CVec3> positive_roots();
/// x -> x - (e, x) e.
Mat3 reflection_matrix(const CVec3& e);
/// Roots of the generating reflections: (0,w,-w), e2, e3.
std::array<CVec3, 3> generator_roots();
/// r1, r2, r3.
std::array<Mat3, 3> generator_matrices();

class Group {
 public:
  /// Built once on first use; read-only afterwards.
  static const Group& instance();

  std::size_t size() const { return elements_.size(); }
  const GroupElement& operator[](ElementId id) const { return elements_[static_cast<std::size_t>(id)]; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  std::span<const IntMat6> int6_table() const { return int6_; }

  ElementId identity() const { return 0; }
  ElementId minus_one() const { return minus_one_; }
  ElementId mul(ElementId a, ElementId b) const {
    return table_[static_cast<std::size_t>(a) * kGroupOrder + static_cast<std::size_t>(b)];
  }
  ElementId inverse(ElementId a) const { return inverse_[static_cast<std::size_t>(a)]; }
  ElementId negate(ElementId a) const { return mul(minus_one_, a); }
  ElementId power(ElementId a, int k) const;
  /// by * g * by^-1
  ElementId conjugate(ElementId g, ElementId by) const { return mul(mul(by, g), inverse(by)); }
  ElementId word_product(std::span<const ElementId> factors) const;

  bool in_H(ElementId a) const { return h_set_.test(static_cast<std::size_t>(a)); }
  bool is_reflection(ElementId a) const { return reflection_set_.test(static_cast<std::size_t>(a)); }
  bool is_antireflection(ElementId a) const { return is_reflection(negate(a)); }
  const std::vector<ElementId>& reflections() const { return reflections_; }
  std::vector<ElementId> antireflections() const;
  const ElementSet& reflection_set() const { return reflection_set_; }

  ElementSet ambient_set(Ambient a) const { return a == Ambient::G ? all_ : h_set_; }
  std::vector<ElementId> members(Ambient a) const;

  std::optional<ElementId> find(const Mat3& m) const;
  std::optional<ElementId> find(const IntMat6& m) const;

  /// Named elements: e, m1, r1..r3, rho1..rho3, g7, h3, h4, h4p, c, c3.
  ElementId named(std::string_view name) const;
  static const std::vector<std::string>& names();
  /// The registry name of an element, if it has one.
  std::optional<std::string> name_of(ElementId id) const;

  /// r1^2 = r2^2 = r3^2 = (r1r2)^4 = (r2r3)^4 = (r3r1)^3 = (r1r2r1r3)^3 = 1.
  bool verify_presentation() const;

 private:
  Group();

  std::vector<GroupElement> elements_;
  std::vector<IntMat6> int6_;
  ElementIndex index_;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverse_;
  std::vector<ElementId> reflections_;
  ElementSet reflection_set_;
  ElementSet h_set_;
  ElementSet all_;
  ElementId minus_one_ = -1;
  std::vector<std::pair<std::string, ElementId>> named_;
};

std::vector<ElementId> ids_of(const ElementSet& s);
ElementSet set_of(std::span<const ElementId> ids);

/// Subgroup generated by the given elements.
ElementSet closure(std::span<const ElementId> generators);
ElementSet cyclic_subgroup(ElementId g);
bool is_subgroup(const ElementSet& s);
bool is_abelian(const ElementSet& s);
/// A generator when s is cyclic.
std::optional<ElementId> cyclic_generator(const ElementSet& s);
ElementSet conjugate_set(const ElementSet& s, ElementId by);
ElementSet normalizer(const ElementSet& s, Ambient ambient);
ElementSet centralizer(ElementId g, Ambient ambient);

struct ConjClass {
  ElementId representative = 0;
  std::vector<ElementId> members;
  int order = 1;
  QNum det;
  std::size_t centralizer_order = 0;
};

/// Conjugacy classes of the ambient group, sorted by (element order, det, smallest member).
std::vector<ConjClass> conjugacy_classes(Ambient ambient);

class UnrecognizedSubgroup : public std::runtime_error {
 public:
  explicit UnrecognizedSubgroup(std::string signature)
      : std::runtime_error("unrecognized subgroup: " + signature), signature_(std::move(signature)) {}
  const std::string& signature() const { return signature_; }

 private:
  std::string signature_;
};

struct Subgroup {
  ElementSet elements;
  int order = 0;
  std::string label;
  bool contains_minus_one = false;
  int reflection_count = 0;

  std::vector<ElementId> ids() const { return ids_of(elements); }
  bool contains(ElementId g) const { return elements.test(static_cast<std::size_t>(g)); }
};

/// Label for a subgroup of G: 1, C2-refl, C2-antirefl, C3, C4, C7, C2xC2, 2^2, S3, S'3,
/// D8, D'8, A4, S4, S'4, 7:3, H168, G336, C6, C14, +-1 and +-K for K inside H.
std::string recognize_subgroup(const ElementSet& s);
/// Order, element-order multiset, -1, reflections, abelian, dets: the recognition input.
std::string subgroup_signature(const ElementSet& s);
Subgroup make_subgroup(const ElementSet& s);

struct SubgroupClass {
  int number = 0;  // 1-based, in the conventional table order
  std::string structure;
  int order = 0;
  int length = 0;
  std::vector<std::size_t> members;  // indices into SubgroupLattice::subgroups
  /// (class number, how many distinct subgroups of that class)
  std::vector<std::pair<int, int>> maximal_subgroups;
  std::vector<std::pair<int, int>> minimal_overgroups;
};

struct SubgroupLattice {
  std::vector<ElementSet> subgroups;
  std::vector<SubgroupClass> classes;
};

/// Every subgroup of H, grouped into H-conjugacy classes with inclusion data.
SubgroupLattice subgroup_lattice_of_H();

}  // namespace klein

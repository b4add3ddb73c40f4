#include "klein/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace klein {

std::string_view to_string(Ambient a) { return a == Ambient::G ? "G" : "H"; }

Ambient parse_ambient(std::string_view text) {
  if (text == "G") return Ambient::G;
  if (text == "H") return Ambient::H;
  throw std::invalid_argument("ambient group must be G or H, got '" + std::string(text) + "'");
}

// ---------------------------------------------------------------- roots

std::vector<CVec3> roots() {
  const std::array<CVec3, 3> seeds = {CVec3{{QNum(2), QNum(0), QNum(0)}}, CVec3{{QNum(0), QNum::w(), QNum::w()}},
                                      CVec3{{QNum(1), QNum(1), QNum::w_bar()}}};
  std::set<CVec3> out;
  for (const auto& s : seeds) {
    std::array<std::size_t, 3> perm{0, 1, 2};
    do {
      for (int signs = 0; signs < 8; ++signs) {
        CVec3 v;
        for (std::size_t i = 0; i < 3; ++i) v[i] = (signs >> i & 1) ? -s[perm[i]] : s[perm[i]];
        out.insert(v);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return {out.begin(), out.end()};
}

std::vector<CVec3> positive_roots() {
  std::vector<CVec3> out;
  for (const auto& e : roots())
    if (e > -e) out.push_back(e);
  return out;
}

Mat3 reflection_matrix(const CVec3& e) {
  Mat3 m = Mat3::identity();
  const QNum half(ratio(1, 2), 0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) -= half * e[i] * e[j].conj();
  return m;
}

std::array<CVec3, 3> generator_roots() {
  const auto& e = basic_roots();
  // r1 is the coordinate swap of z2 and z3, the reflection in (0, w, -w) = e1 - w e2.
  return {CVec3{{QNum(0), QNum::w(), -QNum::w()}}, e[1], e[2]};
}

std::array<Mat3, 3> generator_matrices() {
  const auto e = generator_roots();
  return {reflection_matrix(e[0]), reflection_matrix(e[1]), reflection_matrix(e[2])};
}

// ---------------------------------------------------------------- Group

const Group& Group::instance() {
  static const Group g;
  return g;
}

Group::Group() {
  const auto gens = generator_matrices();
  std::array<IntMat6, 3> gen6;
  for (std::size_t i = 0; i < 3; ++i) gen6[i] = mat3_to_int6(gens[i]);

  // Breadth-first closure: ids in discovery order, generators tried in order r1, r2, r3.
  GroupElement id;
  id.mat = Mat3::identity();
  id.int6 = IntMat6::identity();
  elements_.push_back(id);
  index_.emplace(id.int6, 0);
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (std::size_t g = 0; g < 3; ++g) {
      IntMat6 prod = elements_[head].int6 * gen6[g];
      if (index_.count(prod)) continue;
      GroupElement next;
      next.mat = elements_[head].mat * gens[g];
      next.int6 = prod;
      next.word = elements_[head].word;
      next.word.push_back(static_cast<int>(g) + 1);
      index_.emplace(prod, static_cast<ElementId>(elements_.size()));
      elements_.push_back(std::move(next));
      if (elements_.size() > kGroupOrder) throw std::logic_error("generator closure exceeds 336 elements");
    }
  }
  if (elements_.size() != kGroupOrder)
    throw std::logic_error("generator closure has " + std::to_string(elements_.size()) + " elements, expected 336");

  for (const auto& e : elements_) int6_.push_back(e.int6);
  table_ = kernels::cayley_table(int6_, index_);

  inverse_.assign(kGroupOrder, -1);
  for (std::size_t a = 0; a < kGroupOrder; ++a)
    for (std::size_t b = 0; b < kGroupOrder; ++b)
      if (table_[a * kGroupOrder + b] == 0) inverse_[a] = static_cast<ElementId>(b);

  for (std::size_t k = 0; k < kGroupOrder; ++k) {
    auto& e = elements_[k];
    e.det = e.mat.det();
    ElementId p = static_cast<ElementId>(k);
    e.order = 1;
    while (p != 0) {
      p = mul(p, static_cast<ElementId>(k));
      ++e.order;
    }
    all_.set(k);
    if (e.det == QNum(1)) h_set_.set(k);
  }

  minus_one_ = *find(Mat3::scalar(-1));
  for (const auto& r : positive_roots()) {
    auto id_r = find(reflection_matrix(r));
    if (!id_r) throw std::logic_error("reflection in a positive root is not in the group");
    reflections_.push_back(*id_r);
    reflection_set_.set(static_cast<std::size_t>(*id_r));
  }
  std::sort(reflections_.begin(), reflections_.end());

  auto neg = [&](ElementId a) { return mul(minus_one_, a); };
  const ElementId r1 = 1, r2 = 2, r3 = 3;
  if (elements_[1].mat != gens[0] || elements_[2].mat != gens[1] || elements_[3].mat != gens[2])
    throw std::logic_error("generator ids are not 1, 2, 3");
  const ElementId rho1 = neg(r1), rho2 = neg(r2), rho3 = neg(r3);
  Mat3 c_mat;
  c_mat(0, 2) = -1;
  c_mat(1, 0) = -1;
  c_mat(2, 1) = -1;
  auto c = find(c_mat);
  if (!c) throw std::logic_error("the signed 3-cycle c is not in the group");
  const std::array<ElementId, 3> g7_word{rho1, rho2, rho3};
  const std::array<ElementId, 4> h3_word{rho1, rho3, rho1, rho2};
  named_ = {
      {"e", 0},
      {"m1", minus_one_},
      {"r1", r1},
      {"r2", r2},
      {"r3", r3},
      {"rho1", rho1},
      {"rho2", rho2},
      {"rho3", rho3},
      {"g7", word_product(g7_word)},
      {"h3", word_product(h3_word)},
      {"h4", mul(rho1, rho2)},
      {"h4p", neg(mul(r1, r2))},
      {"c", *c},
      {"c3", neg(*c)},
  };
  const std::map<std::string, int> expected_order = {{"e", 1},  {"m1", 2}, {"r1", 2}, {"r2", 2}, {"r3", 2},
                                                     {"rho1", 2}, {"rho2", 2}, {"rho3", 2}, {"g7", 7}, {"h3", 3},
                                                     {"h4", 4},  {"h4p", 4}, {"c", 6},  {"c3", 3}};
  for (const auto& [name, id_n] : named_)
    if ((*this)[id_n].order != expected_order.at(name))
      throw std::logic_error("named element " + name + " has order " + std::to_string((*this)[id_n].order));
}

ElementId Group::power(ElementId a, int k) const {
  int o = (*this)[a].order;
  k %= o;
  if (k < 0) k += o;
  ElementId p = 0;
  for (int i = 0; i < k; ++i) p = mul(p, a);
  return p;
}

ElementId Group::word_product(std::span<const ElementId> factors) const {
  ElementId p = 0;
  for (auto f : factors) p = mul(p, f);
  return p;
}

std::vector<ElementId> Group::antireflections() const {
  std::vector<ElementId> out;
  for (auto r : reflections_) out.push_back(negate(r));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementId> Group::members(Ambient a) const { return ids_of(ambient_set(a)); }

std::optional<ElementId> Group::find(const Mat3& m) const {
  try {
    return find(mat3_to_int6(m));
  } catch (const NonIntegral&) {
    return std::nullopt;
  }
}

std::optional<ElementId> Group::find(const IntMat6& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId Group::named(std::string_view name) const {
  for (const auto& [n, id] : named_)
    if (n == name) return id;
  throw UnknownName("unknown element name '" + std::string(name) + "'");
}

const std::vector<std::string>& Group::names() {
  static const std::vector<std::string> n = {"e",  "m1", "r1", "r2",  "r3", "rho1", "rho2",
                                             "rho3", "g7", "h3", "h4", "h4p", "c",  "c3"};
  return n;
}

std::optional<std::string> Group::name_of(ElementId id) const {
  for (const auto& [n, i] : named_)
    if (i == id) return n;
  return std::nullopt;
}

bool Group::verify_presentation() const {
  const ElementId r1 = 1, r2 = 2, r3 = 3;
  auto order_divides = [&](ElementId g, int k) {
    ElementId p = identity();
    for (int i = 0; i < k; ++i) p = mul(p, g);
    return p == identity();
  };
  const std::array<ElementId, 4> long_word{r1, r2, r1, r3};
  return order_divides(r1, 2) && order_divides(r2, 2) && order_divides(r3, 2) && order_divides(mul(r1, r2), 4) &&
         order_divides(mul(r2, r3), 4) && order_divides(mul(r3, r1), 3) && order_divides(word_product(long_word), 3);
}

// ---------------------------------------------------------------- subsets

std::vector<ElementId> ids_of(const ElementSet& s) {
  std::vector<ElementId> out;
  for (std::size_t k = 0; k < kGroupOrder; ++k)
    if (s.test(k)) out.push_back(static_cast<ElementId>(k));
  return out;
}

ElementSet set_of(std::span<const ElementId> ids) {
  ElementSet s;
  for (auto id : ids) s.set(static_cast<std::size_t>(id));
  return s;
}

ElementSet closure(std::span<const ElementId> generators) {
  const auto& g = Group::instance();
  ElementSet s;
  s.set(0);
  std::vector<ElementId> list{0};
  for (std::size_t head = 0; head < list.size(); ++head)
    for (auto gen : generators) {
      ElementId p = g.mul(list[head], gen);
      if (!s.test(static_cast<std::size_t>(p))) {
        s.set(static_cast<std::size_t>(p));
        list.push_back(p);
      }
    }
  return s;
}

ElementSet cyclic_subgroup(ElementId gen) {
  const std::array<ElementId, 1> g{gen};
  return closure(g);
}

bool is_subgroup(const ElementSet& s) {
  const auto& g = Group::instance();
  if (!s.test(0)) return false;
  auto ids = ids_of(s);
  for (auto a : ids)
    for (auto b : ids)
      if (!s.test(static_cast<std::size_t>(g.mul(a, g.inverse(b))))) return false;
  return true;
}

bool is_abelian(const ElementSet& s) {
  const auto& g = Group::instance();
  auto ids = ids_of(s);
  for (auto a : ids)
    for (auto b : ids)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

std::optional<ElementId> cyclic_generator(const ElementSet& s) {
  const auto& g = Group::instance();
  const int n = static_cast<int>(s.count());
  for (auto a : ids_of(s))
    if (g[a].order == n) return a;
  return std::nullopt;
}

ElementSet conjugate_set(const ElementSet& s, ElementId by) {
  const auto& g = Group::instance();
  ElementSet out;
  for (auto a : ids_of(s)) out.set(static_cast<std::size_t>(g.conjugate(a, by)));
  return out;
}

ElementSet normalizer(const ElementSet& s, Ambient ambient) {
  const auto& g = Group::instance();
  ElementSet out;
  for (auto x : g.members(ambient))
    if (conjugate_set(s, x) == s) out.set(static_cast<std::size_t>(x));
  return out;
}

ElementSet centralizer(ElementId a, Ambient ambient) {
  const auto& g = Group::instance();
  ElementSet out;
  for (auto x : g.members(ambient))
    if (g.mul(x, a) == g.mul(a, x)) out.set(static_cast<std::size_t>(x));
  return out;
}

std::vector<ConjClass> conjugacy_classes(Ambient ambient) {
  const auto& g = Group::instance();
  const auto members = g.members(ambient);
  std::vector<bool> seen(kGroupOrder, false);
  std::vector<ConjClass> out;
  for (auto a : members) {
    if (seen[static_cast<std::size_t>(a)]) continue;
    ElementSet cls;
    for (auto x : members) cls.set(static_cast<std::size_t>(g.conjugate(a, x)));
    ConjClass c;
    c.members = ids_of(cls);
    for (auto m : c.members) seen[static_cast<std::size_t>(m)] = true;
    c.representative = c.members.front();
    c.order = g[a].order;
    c.det = g[a].det;
    c.centralizer_order = members.size() / c.members.size();
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const ConjClass& x, const ConjClass& y) {
    if (x.order != y.order) return x.order < y.order;
    if (x.det != y.det) return x.det > y.det;
    return x.members.front() < y.members.front();
  });
  return out;
}

// ---------------------------------------------------------------- recognition

std::string subgroup_signature(const ElementSet& s) {
  const auto& g = Group::instance();
  std::vector<int> orders;
  std::set<std::string> dets;
  int refl = 0;
  for (auto a : ids_of(s)) {
    orders.push_back(g[a].order);
    dets.insert(g[a].det.str());
    refl += g.is_reflection(a);
  }
  std::sort(orders.begin(), orders.end());
  std::ostringstream os;
  os << "order=" << s.count() << " orders=[";
  for (std::size_t i = 0; i < orders.size(); ++i) os << (i ? "," : "") << orders[i];
  os << "] minus_one=" << s.test(static_cast<std::size_t>(g.minus_one())) << " reflections=" << refl
     << " abelian=" << is_abelian(s) << " dets={";
  bool first = true;
  for (const auto& d : dets) {
    os << (first ? "" : ",") << d;
    first = false;
  }
  os << "}";
  return os.str();
}

namespace {

int count_of_order(const ElementSet& s, int order) {
  const auto& g = Group::instance();
  int n = 0;
  for (auto a : ids_of(s)) n += g[a].order == order;
  return n;
}

// Subgroups of H, named by isomorphism type.
std::optional<std::string> label_inside_H(const ElementSet& s) {
  const bool abelian = is_abelian(s);
  switch (s.count()) {
    case 1: return "1";
    case 2: return "C2-antirefl";
    case 3: return "C3";
    case 4: return cyclic_generator(s) ? "C4" : "C2×C2";
    case 6: return abelian ? std::nullopt : std::optional<std::string>("S3");
    case 7: return "C7";
    case 8: return count_of_order(s, 2) == 5 ? std::optional<std::string>("D8") : std::nullopt;
    case 12: return count_of_order(s, 3) == 8 && count_of_order(s, 2) == 3 ? std::optional<std::string>("A4") : std::nullopt;
    case 21: return "7:3";
    case 24: return "S4";
    case 168: return "H168";
    default: return std::nullopt;
  }
}

}  // namespace

std::string recognize_subgroup(const ElementSet& s) {
  const auto& g = Group::instance();
  if (!is_subgroup(s)) throw UnrecognizedSubgroup("not a subgroup: " + subgroup_signature(s));
  const ElementSet h = s & g.ambient_set(Ambient::H);
  const bool has_minus_one = s.test(static_cast<std::size_t>(g.minus_one()));
  const std::size_t n = s.count();
  std::optional<std::string> label;

  if (h == s) {
    label = label_inside_H(s);
  } else if (has_minus_one) {
    if (n == kGroupOrder) {
      label = "G336";
    } else if (cyclic_generator(s)) {
      if (n == 2) label = "±1";
      if (n == 6) label = "C6";
      if (n == 14) label = "C14";
    } else if (auto inner = label_inside_H(h)) {
      label = "±" + (*inner == "C2-antirefl" ? std::string("C2") : *inner);
    }
  } else {
    // Neither inside H nor containing -1: H-part has index 2, the other coset has det -1.
    int refl = 0;
    for (auto a : ids_of(s)) refl += g.is_reflection(a);
    const bool cyclic = cyclic_generator(s).has_value();
    if (n == 2 && refl == 1) label = "C2-refl";
    if (n == 4 && cyclic) label = "C4";
    if (n == 4 && !cyclic && refl == 2) label = "2²";
    if (n == 6 && !cyclic && refl == 3) label = "S′3";
    if (n == 8 && count_of_order(s, 2) == 5) label = "D′8";
    if (n == 24 && label_inside_H(h) == std::optional<std::string>("A4")) label = "S′4";
  }
  if (!label) throw UnrecognizedSubgroup(subgroup_signature(s));
  return *label;
}

Subgroup make_subgroup(const ElementSet& s) {
  const auto& g = Group::instance();
  Subgroup out;
  out.elements = s;
  out.order = static_cast<int>(s.count());
  out.label = recognize_subgroup(s);
  out.contains_minus_one = s.test(static_cast<std::size_t>(g.minus_one()));
  out.reflection_count = static_cast<int>((s & g.reflection_set()).count());
  return out;
}

// ---------------------------------------------------------------- subgroup lattice

namespace {

std::string structure_name(const ElementSet& s) {
  switch (s.count()) {
    case 168: return "L2(7)";
    case 24: return "2^2:S3";
    case 21: return "7:3";
    case 12: return "A4";
    case 8: return "D8";
    case 7: return "7";
    case 6: return "S3";
    case 4: return cyclic_generator(s) ? "4" : "2^2";
    case 3: return "3";
    case 2: return "2";
    case 1: return "1";
    default: return "?";
  }
}

bool subset_of(const ElementSet& a, const ElementSet& b) { return (a & ~b).none(); }

}  // namespace

SubgroupLattice subgroup_lattice_of_H() {
  const auto& g = Group::instance();
  const auto h_ids = g.members(Ambient::H);

  // Cyclic subgroups, then joins with cyclic subgroups until nothing new appears.
  std::vector<ElementSet> subs;
  std::vector<std::vector<ElementId>> gens;
  std::unordered_set<ElementSet> seen;
  std::vector<ElementSet> cyclic;
  std::vector<ElementId> cyclic_gen;
  for (auto a : h_ids) {
    ElementSet c = cyclic_subgroup(a);
    if (seen.insert(c).second) {
      subs.push_back(c);
      gens.push_back(a == 0 ? std::vector<ElementId>{} : std::vector<ElementId>{a});
      cyclic.push_back(c);
      cyclic_gen.push_back(a);
    }
  }
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = 0; j < cyclic.size(); ++j) {
      if (subset_of(cyclic[j], subs[i])) continue;
      std::vector<ElementId> gset = gens[i];
      gset.push_back(cyclic_gen[j]);
      ElementSet joined = closure(gset);
      if (seen.insert(joined).second) {
        subs.push_back(joined);
        gens.push_back(std::move(gset));
      }
    }
  }

  // Conjugacy classes under H.
  std::unordered_map<ElementSet, std::size_t> where;
  for (std::size_t i = 0; i < subs.size(); ++i) where.emplace(subs[i], i);
  std::vector<int> cls_of(subs.size(), -1);
  std::vector<std::vector<std::size_t>> cls_members;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (cls_of[i] != -1) continue;
    std::set<std::size_t> orbit;
    for (auto x : h_ids) orbit.insert(where.at(conjugate_set(subs[i], x)));
    for (auto m : orbit) cls_of[m] = static_cast<int>(cls_members.size());
    cls_members.emplace_back(orbit.begin(), orbit.end());
  }
  const std::size_t ncls = cls_members.size();

  // Containment of every pair of subgroups.
  const std::size_t n = subs.size();
  std::vector<std::vector<bool>> contained(n, std::vector<bool>(n, false));  // contained[a][b]: a < b proper
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      contained[a][b] = a != b && subs[a].count() < subs[b].count() && subset_of(subs[a], subs[b]);
  auto maximal_in = [&](std::size_t a, std::size_t b) {
    if (!contained[a][b]) return false;
    for (std::size_t c = 0; c < n; ++c)
      if (contained[a][c] && contained[c][b]) return false;
    return true;
  };

  // Conventional ordering: by order descending, non-cyclic first, then the two
  // families {2^2, A4, 2^2:S3} split by which Klein-four class they contain.
  std::vector<int> klein_classes;
  for (std::size_t c = 0; c < ncls; ++c) {
    const auto& rep = subs[cls_members[c].front()];
    if (rep.count() == 4 && !cyclic_generator(rep)) klein_classes.push_back(static_cast<int>(c));
  }
  auto class_key = [&](std::size_t c) {
    std::vector<ElementId> best;
    for (auto m : cls_members[c]) {
      auto ids = ids_of(subs[m]);
      if (best.empty() || ids < best) best = ids;
    }
    return best;
  };
  std::sort(klein_classes.begin(), klein_classes.end(),
            [&](int a, int b) { return class_key(static_cast<std::size_t>(a)) < class_key(static_cast<std::size_t>(b)); });
  auto family = [&](std::size_t c) -> int {
    const auto& rep = subs[cls_members[c].front()];
    const auto order = rep.count();
    if (order != 4 && order != 12 && order != 24) return 0;
    // The Klein-four subgroup that is normal in rep decides the family.
    auto normal_in_rep = [&](const ElementSet& k) {
      for (auto g : ids_of(rep))
        if (conjugate_set(k, g) != k) return false;
      return true;
    };
    for (std::size_t f = 0; f < klein_classes.size(); ++f)
      for (auto m : cls_members[static_cast<std::size_t>(klein_classes[f])])
        if (subset_of(subs[m], rep) && normal_in_rep(subs[m])) return static_cast<int>(f);
    return 0;
  };
  std::vector<std::size_t> order_of_cls(ncls);
  std::iota(order_of_cls.begin(), order_of_cls.end(), 0);
  std::sort(order_of_cls.begin(), order_of_cls.end(), [&](std::size_t a, std::size_t b) {
    const auto& ra = subs[cls_members[a].front()];
    const auto& rb = subs[cls_members[b].front()];
    if (ra.count() != rb.count()) return ra.count() > rb.count();
    bool ca = cyclic_generator(ra).has_value(), cb = cyclic_generator(rb).has_value();
    if (ca != cb) return !ca;
    if (family(a) != family(b)) return family(a) < family(b);
    return class_key(a) < class_key(b);
  });
  std::vector<int> number(ncls);
  for (std::size_t pos = 0; pos < ncls; ++pos) number[order_of_cls[pos]] = static_cast<int>(pos) + 1;

  SubgroupLattice lat;
  lat.subgroups = subs;
  for (std::size_t pos = 0; pos < ncls; ++pos) {
    const std::size_t c = order_of_cls[pos];
    SubgroupClass sc;
    sc.number = static_cast<int>(pos) + 1;
    sc.members = cls_members[c];
    const std::size_t rep = sc.members.front();
    sc.structure = structure_name(subs[rep]);
    sc.order = static_cast<int>(subs[rep].count());
    sc.length = static_cast<int>(sc.members.size());
    std::map<int, int> below, above;
    for (std::size_t other = 0; other < n; ++other) {
      if (maximal_in(other, rep)) ++below[number[static_cast<std::size_t>(cls_of[other])]];
      if (maximal_in(rep, other)) ++above[number[static_cast<std::size_t>(cls_of[other])]];
    }
    sc.maximal_subgroups.assign(below.begin(), below.end());
    sc.minimal_overgroups.assign(above.begin(), above.end());
    lat.classes.push_back(std::move(sc));
  }
  return lat;
}

}  // namespace klein

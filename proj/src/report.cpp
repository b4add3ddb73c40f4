#include "klein/report.hpp"

#include <sstream>

namespace klein {

namespace {

const Group& grp() { return Group::instance(); }

std::string element_name(ElementId g) {
  if (auto n = grp().name_of(g)) return *n;
  return "#" + std::to_string(g);
}

Json point_json(const TorusPoint& u) {
  Json j;
  j["point"] = u.str();
  if (auto n = registry_name(u)) j["name"] = *n;
  return j;
}

Json points_json(const std::vector<TorusPoint>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(point_json(p));
  return a;
}

std::string pairs_str(const std::vector<std::pair<int, int>>& v) {
  std::string out;
  for (const auto& [cls, count] : v) {
    if (!out.empty()) out += ", ";
    out += std::to_string(cls);
    if (count > 1) out += " (" + std::to_string(count) + ")";
  }
  return out;
}

Json image_json(const ImageStatus& s) {
  Json j;
  switch (s.kind) {
    case ImageKind::Smooth: j["kind"] = "smooth"; break;
    case ImageKind::Cyclic:
      j["kind"] = "cyclic";
      j["weights"] = s.weights.str();
      break;
    case ImageKind::NonCyclic:
      j["kind"] = "non-cyclic";
      if (s.reduced) j["reduced"] = s.reduced->str();
      break;
  }
  return j;
}

Json stratum_json(const PointStratum& p) {
  Json j = point_json(p.representative);
  j["orbit_size"] = p.orbit_size;
  j["stabilizer"] = p.stabilizer_label;
  j["stabilizer_order"] = p.stabilizer_order;
  j["image"] = image_json(p.image);
  return j;
}

Json curve_json(const CurveStratum& c) {
  Json j;
  j["id"] = c.id;
  j["element"] = c.element;
  j["translate"] = point_json(c.translate);
  j["generic_stabilizer"] = c.generic_label;
  j["generic_order"] = c.generic_order;
  j["sampled_equals_exact"] = c.matches_exact;
  j["generic_image"] = image_json(c.generic_image);
  j["setwise_stabilizer"] = c.setwise_label;
  j["setwise_order"] = c.setwise_order;
  Json d = Json::array();
  for (const auto& p : c.dissident) d.push_back(stratum_json(p));
  j["dissident"] = d;
  Json t = Json::array();
  for (auto i : c.type_changes) t.push_back(c.dissident[i].name.empty() ? c.dissident[i].representative.str() : c.dissident[i].name);
  j["type_changes"] = t;
  return j;
}

}  // namespace

// ---------------------------------------------------------------- renderers

Json matrix_json(const Mat3& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < 3; ++j) r.push_back(m(i, j).str());
    rows.push_back(r);
  }
  return rows;
}

Json element_json(ElementId g) {
  const auto& e = grp()[g];
  Json j;
  j["id"] = g;
  if (auto n = grp().name_of(g)) j["name"] = *n;
  j["order"] = e.order;
  j["det"] = e.det.str();
  j["in_H"] = grp().in_H(g);
  j["reflection"] = grp().is_reflection(g);
  j["word"] = e.word;
  j["matrix"] = matrix_json(e.mat);
  return j;
}

Json group_table_json() {
  Json a = Json::array();
  for (std::size_t g = 0; g < grp().size(); ++g) a.push_back(element_json(static_cast<ElementId>(g)));
  return a;
}

Json classes_json(Ambient ambient) {
  Json a = Json::array();
  for (const auto& c : conjugacy_classes(ambient)) {
    Json j;
    ElementId rep = c.representative;
    for (auto m : c.members)
      if (grp().name_of(m)) {
        rep = m;
        break;
      }
    j["representative"] = element_name(rep);
    j["order"] = c.order;
    j["det"] = c.det.str();
    j["size"] = c.members.size();
    j["centralizer_order"] = c.centralizer_order;
    a.push_back(j);
  }
  return a;
}

Json subgroup_table_json() {
  Json a = Json::array();
  for (const auto& c : subgroup_lattice_of_H().classes) {
    Json j;
    j["number"] = c.number;
    j["structure"] = c.structure;
    j["order"] = c.order;
    j["length"] = c.length;
    j["maximal_subgroups"] = pairs_str(c.maximal_subgroups);
    j["minimal_overgroups"] = pairs_str(c.minimal_overgroups);
    a.push_back(j);
  }
  return a;
}

Json fixed_json(const Mat3& m) {
  Json j;
  j["matrix"] = matrix_json(m);
  if (auto id = grp().find(m)) j["element"] = element_name(*id);
  j["det_minus_identity"] = det_minus_identity(m).str();
  if (!det_minus_identity(m).is_zero()) {
    const auto pts = enumerate_fixed_points(m);
    j["kind"] = "elliptic";
    j["count"] = fixed_point_count(m);
    j["points"] = points_json(pts);
    return j;
  }
  j["kind"] = "parabolic";
  const FixedLocus f = fixed_locus_structure(m);
  j["dimension"] = f.dimension();
  Json axis = Json::array();
  for (const auto& v : f.axis) axis.push_back(v.str());
  j["axis"] = axis;
  j["index"] = f.index;
  j["restricted_fixed_points"] = f.restricted_fixed.size();
  j["components"] = f.component_count;
  j["translates"] = points_json(f.translates);
  return j;
}

Json subgroup_json(const Subgroup& s) {
  Json j;
  j["label"] = s.label;
  j["order"] = s.order;
  j["contains_minus_one"] = s.contains_minus_one;
  j["reflections"] = s.reflection_count;
  j["reflection_generated"] = reflection_generated(s.elements);
  Json e = Json::array();
  for (auto g : s.ids()) e.push_back(element_name(g));
  j["elements"] = e;
  return j;
}

Json stabilizer_json(const TorusPoint& u, Ambient ambient) {
  Json j = point_json(u);
  j["in"] = std::string(to_string(ambient));
  const Subgroup s = stabilizer(u, ambient);
  j["orbit_size"] = (ambient == Ambient::G ? 336 : 168) / s.order;
  j["stabilizer"] = subgroup_json(s);
  j["image"] = image_json(singularity_weights(s.elements));
  return j;
}

Json orbit_json(const TorusPoint& u, Ambient ambient) {
  Json j = point_json(u);
  j["in"] = std::string(to_string(ambient));
  const auto o = orbit(u, ambient);
  j["size"] = o.size();
  j["orbit"] = points_json(o);
  return j;
}

Json orbit_record_json(const OrbitRecord& r) {
  Json j = point_json(r.representative);
  j["quotient"] = std::string(to_string(r.quotient));
  j["orbit_size"] = r.orbit_size;
  j["stabilizer"] = r.stabilizer.label;
  j["stabilizer_order"] = r.stabilizer.order;
  j["stabilizer_G"] = r.stabilizer_G.label;
  j["stabilizer_H"] = r.stabilizer_H.label;
  j["reflection_generated"] = r.reflection_generated;
  j["image"] = image_json(r.image);
  return j;
}

Json singularity_report_json(const SingularityReport& r) {
  Json j;
  j["quotient"] = std::string(to_string(r.quotient));
  Json iso = Json::array();
  for (const auto& p : r.isolated) iso.push_back(stratum_json(p));
  j["isolated"] = iso;
  Json cur = Json::array();
  for (const auto& c : r.curves) cur.push_back(curve_json(c));
  j["singular_curves"] = cur;
  Json smooth = Json::array();
  for (const auto& c : r.smooth_curves) smooth.push_back(curve_json(c));
  j["smooth_curves"] = smooth;
  Json sp = Json::array();
  for (const auto& p : r.special_orbits) sp.push_back(stratum_json(p));
  j["special_orbits"] = sp;
  j["smooth_special_orbits"] = r.smooth_special_orbits;
  j["q_on_l"] = r.q_on_l;
  j["notes"] = r.notes;
  return j;
}

// ---------------------------------------------------------------- outcomes

std::string_view to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Pass: return "pass";
    case VerifyStatus::Fail: return "fail";
    case VerifyStatus::Discrepancy: return "discrepancy";
  }
  return "?";
}

std::string emit_report(const std::vector<VerifyOutcome>& outcomes, ReportFormat format) {
  if (format == ReportFormat::Json) {
    Json a = Json::array();
    for (const auto& o : outcomes) {
      Json j;
      j["name"] = o.name;
      j["status"] = std::string(to_string(o.status));
      j["expected"] = o.expected;
      j["actual"] = o.actual;
      j["reference"] = o.reference;
      a.push_back(j);
    }
    return a.dump(2);
  }
  auto clean = [](std::string s) {
    for (auto& ch : s)
      if (ch == '\t' || ch == '\n') ch = ' ';
    return s;
  };
  std::ostringstream out;
  out << "name\tstatus\texpected\tactual\treference\n";
  for (const auto& o : outcomes)
    out << clean(o.name) << '\t' << to_string(o.status) << '\t' << clean(o.expected) << '\t' << clean(o.actual) << '\t'
        << clean(o.reference) << '\n';
  return out.str();
}

}  // namespace klein

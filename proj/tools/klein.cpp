// Command-line front end. Every subcommand prints JSON on stdout except verify, which prints TSV.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "klein/quartic.hpp"
#include "klein/report.hpp"

using namespace klein;

namespace {

constexpr int kUsage = 2;
constexpr int kFailure = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ElementId parse_element(const std::string& text) {
  const auto& G = Group::instance();
  if (!text.empty() && text.front() == '#') {
    const int id = std::stoi(text.substr(1));
    if (id < 0 || static_cast<std::size_t>(id) >= G.size()) throw UsageError("element id out of range: " + text);
    return id;
  }
  return G.named(text);
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << body << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for the reflection group G of order 336 acting on C^3 / Lambda"};
  app.require_subcommand(1);

  auto* group = app.add_subcommand("group", "The group and its subgroups");
  group->require_subcommand(1);
  std::string table_json;
  auto* build = group->add_subcommand("build", "Element table");
  build->add_option("--json", table_json, "Write the table to this file instead of stdout");
  std::string classes_in = "G";
  auto* classes = group->add_subcommand("classes", "Conjugacy classes");
  classes->add_option("--in", classes_in, "Ambient group")->check(CLI::IsMember({"G", "H"}));
  auto* subgroups = group->add_subcommand("subgroups", "The 15 conjugacy classes of subgroups of H");

  std::string element, matrix;
  auto* fixed = app.add_subcommand("fixed", "Fixed points or fixed-locus structure of an element");
  auto* el_opt = fixed->add_option("--element", element, "Element name (r1, g7, h4p, ...) or #id");
  auto* mat_opt = fixed->add_option("--matrix", matrix, "3x3 matrix over K, e.g. \"[[1,0,0],[0,0,1],[0,1,0]]\"");
  el_opt->excludes(mat_opt);
  fixed->require_option(1);

  std::string point, ambient = "G";
  auto* stab = app.add_subcommand("stabilizer", "Stabilizer of a torsion point");
  stab->add_option("--point", point, "Registry name or \"[a,b,c,d,e,f]\" in epsilon coordinates")->required();
  stab->add_option("--in", ambient, "Ambient group")->check(CLI::IsMember({"G", "H"}));
  auto* orb = app.add_subcommand("orbit", "Orbit of a torsion point");
  orb->add_option("--point", point, "Registry name or \"[a,b,c,d,e,f]\" in epsilon coordinates")->required();
  orb->add_option("--in", ambient, "Ambient group")->check(CLI::IsMember({"G", "H"}));

  std::string locus;
  auto* classify = app.add_subcommand("classify", "Orbit records of a locus of special points");
  classify->add_option("--locus", locus, "Locus")
      ->required()
      ->check(CLI::IsMember({"T2", "T6", "T4p", "T7", "beta", "omega"}));
  classify->add_option("--in", ambient, "Ambient group")->check(CLI::IsMember({"G", "H"}));

  std::string quotient = "G";
  std::uint64_t seed = 0;
  auto* sing = app.add_subcommand("singularities", "Singular locus of J/G or J/H");
  sing->add_option("--quotient", quotient, "Quotient")->check(CLI::IsMember({"G", "H"}));
  sing->add_option("--seed", seed, "Seed for generic curve points");

  std::string verify_json, format = "tsv";
  auto* verify = app.add_subcommand("verify", "Acceptance suite (seed 0)");
  verify->add_option("--json", verify_json, "Also write the outcomes as JSON to this file");
  verify->add_option("--format", format, "Format on stdout")->check(CLI::IsMember({"tsv", "json"}));

  auto* quartic = app.add_subcommand("quartic", "The invariant quartic and its invariance check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*build) {
      const Json t = group_table_json();
      if (table_json.empty()) print(t);
      else {
        write_file(table_json, t.dump(2));
        std::cout << t.size() << " elements written to " << table_json << '\n';
      }
    } else if (*classes) {
      print(classes_json(parse_ambient(classes_in)));
    } else if (*subgroups) {
      print(subgroup_table_json());
    } else if (*fixed) {
      print(fixed_json(*el_opt ? Group::instance()[parse_element(element)].mat : Mat3::parse(matrix)));
    } else if (*stab) {
      print(stabilizer_json(parse_point(point), parse_ambient(ambient)));
    } else if (*orb) {
      print(orbit_json(parse_point(point), parse_ambient(ambient)));
    } else if (*classify) {
      Json out = Json::array();
      for (const auto& r : classify_locus(parse_locus(locus), parse_ambient(ambient))) out.push_back(orbit_record_json(r));
      print(out);
    } else if (*sing) {
      print(singularity_report_json(singularity_report(parse_ambient(quotient), seed)));
    } else if (*verify) {
      const auto outcomes = run_verify(0);
      if (!verify_json.empty()) write_file(verify_json, emit_report(outcomes, ReportFormat::Json));
      if (format == "json") std::cout << emit_report(outcomes, ReportFormat::Json) << '\n';
      else std::cout << emit_report(outcomes, ReportFormat::Tsv);
      for (const auto& o : outcomes)
        if (o.status == VerifyStatus::Fail) return kFailure;
    } else if (*quartic) {
      Json j;
      j["form"] = klein_quartic().str();
      j["invariant_under_G"] = verify_quartic_invariance();
      print(j);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    // Unknown names, malformed points and matrices, elements of the wrong kind.
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NonIntegral& e) {
    // A matrix that does not preserve the lattice.
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return 0;
}

#pragma once

// JSON/TSV rendering of computed objects and the end-to-end verification suite.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "klein/group.hpp"
#include "klein/orbits.hpp"
#include "klein/torus.hpp"

namespace klein {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------- renderers

Json matrix_json(const Mat3& m);
Json element_json(ElementId g);
Json group_table_json();
Json classes_json(Ambient ambient);
Json subgroup_table_json();
/// Elliptic: count and points. Parabolic: dimension, index, components and translates.
Json fixed_json(const Mat3& m);
Json subgroup_json(const Subgroup& s);
Json stabilizer_json(const TorusPoint& u, Ambient ambient);
Json orbit_json(const TorusPoint& u, Ambient ambient);
Json orbit_record_json(const OrbitRecord& r);
Json singularity_report_json(const SingularityReport& r);

// ---------------------------------------------------------------- verify suite

enum class VerifyStatus { Pass, Fail, Discrepancy };
std::string_view to_string(VerifyStatus s);

struct VerifyOutcome {
  std::string name;
  VerifyStatus status = VerifyStatus::Fail;
  std::string expected;
  std::string actual;
  std::string reference;  // what the expected value is taken from
};

enum class ReportFormat { Json, Tsv };

/// JSON: array of objects (name, status, expected, actual, reference); empty suite -> "[]". No trailing newline.
/// TSV: header row, tab separated, tabs and newlines in fields replaced by spaces.
std::string emit_report(const std::vector<VerifyOutcome>& outcomes, ReportFormat format);

/// The fourteen acceptance criteria, in order. Randomized parts use `seed`.
std::vector<VerifyOutcome> run_verify(std::uint64_t seed = 0);

}  // namespace klein

#pragma once

#include <cstdint>
#include <functional>
#include <json.hpp>
#include <string>
#include <vector>

#include "pz/coding.hpp"

namespace pz {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  bool slow = false;
  double seconds = 0.0;
  double time_limit = 0.0;  // seconds; 0 = none
  std::string summary;      // measured values, one line
  nlohmann::json values;
};

// Closed-geodesic length from the word; replaceable for fault injection.
using LengthFormula = std::function<double(const Word&, const PantsSurface&)>;

struct AcceptanceOptions {
  std::vector<int> only;        // empty = every criterion selected by the flags below
  bool include_slow = false;    // criterion 8 (full zero scans at b = 4 and 6)
  int threads = 0;
  std::string journal_dir = ".";  // zero-scan journals for the slow criterion
  std::uint64_t seed = 20240611;
  LengthFormula length_formula;  // empty = orbit_data(w, s).length
  std::function<void(const CriterionResult&)> on_result;
};

constexpr int kCriterionCount = 10;
const char* criterion_name(int id);
bool criterion_is_slow(int id);

CriterionResult run_criterion(int id, const AcceptanceOptions& opt);
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt);

// "PASS  3 determinant-product  1.2s  <summary>"
std::string format_result(const CriterionResult& r);
nlohmann::json result_json(const CriterionResult& r);

}  // namespace pz

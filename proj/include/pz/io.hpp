#pragma once

#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "pz/asymptotics.hpp"

namespace pz {

const char* version();

// Shortest text that round-trips the double.
std::string format_double(double x);

// Comment block opening every CSV/data file:
//   # pzeta <version>
//   # command: <command>
//   # config: <compact JSON>
std::string header_block(const std::string& command, const nlohmann::json& config);
// The same information as a JSON object for JSON outputs.
nlohmann::json header_json(const std::string& command, const nlohmann::json& config);

// Writes content to path through a temporary file and a rename.
void write_file(const std::string& path, const std::string& content);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> columns);
  void add(const std::vector<std::string>& row);
  void add_numbers(const std::vector<double>& row);
  std::string render(const std::string& header) const;

 private:
  std::vector<std::string> columns_;
  std::string body_;
};

nlohmann::json surface_json(const PantsSurface& s);
// word, n, length, multiplier, primitive
std::string orbits_csv(const std::vector<PeriodicOrbit>& orbits, const std::string& header);
nlohmann::json evaluation_json(const ZetaEvaluation& e);
// re, im, rescaled_re, rescaled_im, residual, box
std::string zeros_csv(const ZeroSet& zs, double b, const std::string& header);
nlohmann::json zeros_json(const ZeroSet& zs, double b);

}  // namespace pz

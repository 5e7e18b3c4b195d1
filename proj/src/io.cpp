#include "pz/io.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "pz/error.hpp"

namespace pz {

using nlohmann::json;

const char* version() { return PZ_VERSION; }

std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

json header_json(const std::string& command, const json& config) {
  return {{"program", "pzeta"}, {"version", version()}, {"command", command}, {"config", config}};
}

std::string header_block(const std::string& command, const json& config) {
  return std::string("# pzeta ") + version() + "\n# command: " + command + "\n# config: " + config.dump() + "\n";
}

void write_file(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ResourceError("io::write_file", "cannot open " + tmp);
    out << content;
    if (!out) throw ResourceError("io::write_file", "write failed for " + tmp);
  }
  std::filesystem::rename(tmp, target);
}

CsvTable::CsvTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void CsvTable::add(const std::vector<std::string>& row) {
  if (row.size() != columns_.size()) throw DomainError("io::CsvTable", "row width does not match the columns");
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) body_ += ',';
    body_ += row[i];
  }
  body_ += '\n';
}

void CsvTable::add_numbers(const std::vector<double>& row) {
  std::vector<std::string> cells;
  cells.reserve(row.size());
  for (double x : row) cells.push_back(format_double(x));
  add(cells);
}

std::string CsvTable::render(const std::string& header) const {
  std::string out = header;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) out += ',';
    out += columns_[i];
  }
  out += '\n';
  return out + body_;
}

namespace {

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json geodesic_json(const Geodesic& g) {
  if (g.kind() == Geodesic::Kind::diameter) return {{"kind", "diameter"}, {"angle", g.angle()}};
  return {{"kind", "circle"}, {"center", complex_json(g.center())}, {"radius", g.radius()}};
}

}  // namespace

json surface_json(const PantsSurface& s) {
  json mirrors = json::array(), coding = json::array(), gens = json::object();
  for (const auto& m : s.mirrors) mirrors.push_back(geodesic_json(m));
  for (const auto& m : s.coding_mirrors) coding.push_back(geodesic_json(m));
  for (Letter g : kLetters)
    gens[std::string(1, to_char(g))] = {{"a", complex_json(s.gen(g).a())}, {"b", complex_json(s.gen(g).b())}};
  return {{"b", s.b},
          {"alpha", s.alpha},
          {"mirrors", mirrors},
          {"coding_mirrors", coding},
          {"to_coding", {{"a", complex_json(s.to_coding.a())}, {"b", complex_json(s.to_coding.b())}}},
          {"generators", gens}};
}

std::string orbits_csv(const std::vector<PeriodicOrbit>& orbits, const std::string& header) {
  CsvTable t({"word", "n", "length", "multiplier", "primitive"});
  for (const auto& o : orbits)
    t.add({to_string(o.word), std::to_string(o.word.size()), format_double(o.length), format_double(o.multiplier),
           o.primitive ? "1" : "0"});
  return t.render(header);
}

json evaluation_json(const ZetaEvaluation& e) {
  return {{"s_re", e.s.real()},          {"s_im", e.s.imag()}, {"value_re", e.value.real()},
          {"value_im", e.value.imag()},  {"N", e.order},       {"tail", e.tail_estimate},
          {"orbit_count", e.orbit_count}};
}

std::string zeros_csv(const ZeroSet& zs, double b, const std::string& header) {
  CsvTable t({"re", "im", "rescaled_re", "rescaled_im", "residual", "box"});
  const double shrink = std::exp(-b);
  for (const auto& z : zs.zeros)
    for (int m = 0; m < z.multiplicity; ++m)
      t.add({format_double(z.s.real()), format_double(z.s.imag()), format_double(z.s.real() * b),
             format_double(z.s.imag() * shrink), format_double(z.residual), std::to_string(z.box)});
  return t.render(header);
}

json zeros_json(const ZeroSet& zs, double b) {
  json zeros = json::array(), boxes = json::array();
  const double shrink = std::exp(-b);
  for (const auto& z : zs.zeros)
    zeros.push_back({{"re", z.s.real()},
                     {"im", z.s.imag()},
                     {"rescaled_re", z.s.real() * b},
                     {"rescaled_im", z.s.imag() * shrink},
                     {"residual", z.residual},
                     {"multiplicity", z.multiplicity},
                     {"box", z.box}});
  for (const auto& bx : zs.boxes)
    boxes.push_back({{"id", bx.id},
                     {"winding", bx.winding},
                     {"rect", {bx.rect.sigma_min, bx.rect.sigma_max, bx.rect.t_min, bx.rect.t_max}}});
  return {{"rect", {zs.rect.sigma_min, zs.rect.sigma_max, zs.rect.t_min, zs.rect.t_max}},
          {"order", zs.order},
          {"tol", zs.tol},
          {"evaluations", zs.evaluations},
          {"total_winding", zs.total_winding()},
          {"zeros", zeros},
          {"boxes", boxes}};
}

}  // namespace pz

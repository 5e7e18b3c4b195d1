#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "pz/acceptance.hpp"
#include "pz/io.hpp"

int main(int argc, char** argv) {
  CLI::App app("acceptance criteria");
  bool quick = false;
  std::vector<int> only;
  std::string journal_dir = ".", json_path;
  int threads = 0;
  app.add_flag("--quick", quick, "skip the slow zero scans");
  app.add_option("--only", only, "criterion numbers")->delimiter(',');
  app.add_option("--journal-dir", journal_dir, "journals for the slow scans");
  app.add_option("--json", json_path, "write the report as JSON");
  app.add_option("--threads", threads, "worker threads");
  CLI11_PARSE(app, argc, argv);

  pz::AcceptanceOptions opt;
  opt.only = only;
  opt.include_slow = !quick || !only.empty();
  opt.threads = threads;
  opt.journal_dir = journal_dir;
  opt.on_result = [](const pz::CriterionResult& r) { std::cout << pz::format_result(r) << std::endl; };
  const auto results = pz::run_acceptance(opt);
  bool ok = true;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    rows.push_back(pz::result_json(r));
  }
  std::cout << (ok ? "all criteria passed" : "some criteria failed") << std::endl;
  if (!json_path.empty()) std::ofstream(json_path) << rows.dump(2) << '\n';
  return ok ? 0 : 1;
}

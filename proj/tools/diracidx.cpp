#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dirac/jobs.hpp"

int main(int argc, char** argv) {
  CLI::App app{"diracidx: exact index computations for equal-rank symmetric pairs"};
  std::string config_path, out_path, cache_dir;
  dirac::JobSpec job;
  app.add_option("--config", config_path, "pair/job configuration file")->required()->check(CLI::ExistingFile);
  app.add_option("--command", job.command, "command to run")->required()->check(CLI::IsMember(dirac::command_names()));
  app.add_option("--format", job.format, "output format")->check(CLI::IsMember({"table", "records"}));
  app.add_option("--order-cap", job.order_cap, "largest Weyl group to enumerate")->check(CLI::PositiveNumber);
  app.add_option("--torsion-order", job.torsion_order, "maximal torsion order for identity-suite")
      ->check(CLI::Range(1L, 60L));
  app.add_option("--cache-dir", cache_dir, "directory for Weyl group caches");
  app.add_option("--out", out_path, "write output here instead of stdout");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (!cache_dir.empty()) job.cache_dir = cache_dir;

  std::ifstream in(config_path, std::ios::binary);
  std::stringstream text;
  text << in.rdbuf();
  dirac::JobResult result = dirac::run_job_text(text.str(), job);

  if (out_path.empty()) {
    std::cout << result.output;
  } else {
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 1;
    }
    out << result.output;
  }
  return result.exit_code;
}

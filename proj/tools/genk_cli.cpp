#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "genk/report.hpp"

namespace {

enum Exit { kPass = 0, kFail = 1, kInvalid = 2 };

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw genk::InvalidInput("cannot write '" + path + "'");
  out << text;
  if (!out) throw genk::InvalidInput("failed writing '" + path + "'");
}

std::string render(const genk::Report& r, const std::string& format) {
  if (format == "csv") return genk::report_to_csv(r);
  return genk::report_to_json(r).dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify generalized Kähler and Courant reduction identities"};
  app.require_subcommand(1);

  std::string scenario_path, out_path, format = "json", report_path;
  std::optional<int> radius;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  bool exact = false;

  auto* run = app.add_subcommand("run", "run every check enabled by a scenario");
  run->add_option("--scenario", scenario_path, "scenario JSON file")->required();
  run->add_option("--radius", radius, "Fourier truncation radius |k|_inf <= N");
  run->add_option("--tol", tol, "tolerance for checks that follow the scenario tolerance");
  run->add_option("--seed", seed, "seed for randomized suites");
  run->add_flag("--exact", exact, "rational arithmetic where supported");
  run->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv"}));
  run->add_option("--out", out_path, "report path (default genk_report.<format>)");

  auto* list = app.add_subcommand("list-checks", "print the check catalog");

  auto* exp = app.add_subcommand("export", "convert a JSON report");
  exp->add_option("--report", report_path, "JSON report produced by run")->required();
  exp->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
  exp->add_option("--out", out_path, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInvalid;
  }

  try {
    if (list->parsed()) {
      for (const auto& e : genk::check_catalog()) std::cout << e.name << "\t" << e.tier << "\t" << e.anchor << "\n";
      std::cout << genk::check_catalog().size() << " checks\n";
      return kPass;
    }
    if (exp->parsed()) {
      std::ifstream in(report_path);
      if (!in) throw genk::InvalidInput("cannot open report '" + report_path + "'");
      genk::ordered_json j;
      try {
        in >> j;
      } catch (const genk::ordered_json::exception& e) {
        throw genk::InvalidInput(std::string("report is not valid JSON: ") + e.what());
      }
      write_file(out_path, render(genk::report_from_json(j), format));
      return kPass;
    }

    genk::Scenario s = genk::load_scenario(scenario_path);
    if (radius) s.radius = *radius;
    if (tol) s.tol = *tol;
    if (seed) s.seed = *seed;
    s.exact = exact;
    const genk::Report report = genk::run_scenario(s);
    std::cout << genk::report_table(report);
    write_file(out_path.empty() ? "genk_report." + format : out_path, render(report, format));
    return report.pass() ? kPass : kFail;
  } catch (const genk::Error& e) {
    std::cerr << "genk: " << e.what() << "\n";
    return kInvalid;
  }
}

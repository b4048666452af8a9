#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "levifol/report.hpp"

namespace {

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::stringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Holonomy invariants and Levi normal forms of polynomial singular foliations at a point"};
  app.require_subcommand(1);
  app.fallthrough();
  bool no_timing = false;
  std::string output;
  app.add_flag("--no-timing", no_timing, "Omit the timing entry (for reproducible reports)");
  app.add_option("-o,--output", output, "Write the report to a file instead of stdout");

  struct Sub {
    std::string spec;
    int max_degree = 0;
    int order = 0;
    std::string connection;
  };
  std::map<std::string, Sub> subs;
  const std::map<std::string, std::string> help{
      {"check-involutive", "Test closure of the generators under the bracket"},
      {"isotropy", "Isotropy Lie algebra F / I F with its filtration"},
      {"filtration", "Holonomy filtration g^i up to a degree cap"},
      {"linear-holonomy", "g / g^2 with its realization by linear parts"},
      {"levi", "Radical, semisimple quotient and a Levi subalgebra"},
      {"artin-rees", "Certified Artin-Rees bound with a lower-bound witness"},
      {"linearize", "Flat Levi connection and Euler-like field to a given order"},
      {"radical-foliation", "Radical foliation and its complement to a given order"},
      {"verify", "Defect report for a connection file"}};
  for (const auto& name : levifol::report_commands()) {
    Sub& s = subs[name];
    CLI::App* cmd = app.add_subcommand(name, help.at(name));
    cmd->add_option("spec", s.spec, "Foliation definition file")->required();
    if (name == "artin-rees" || name == "filtration")
      cmd->add_option("--max-degree", s.max_degree, "Degree cap")->check(CLI::PositiveNumber);
    if (name == "linearize" || name == "radical-foliation" || name == "verify")
      cmd->add_option("--order", s.order, "Target order")->check(CLI::PositiveNumber);
    if (name == "verify") cmd->add_option("--connection", s.connection, "Connection file")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  const Sub& s = subs[name];
  levifol::RunOptions opts;
  opts.timing = !no_timing;
  if (s.max_degree > 0) opts.max_degree = s.max_degree;
  if (s.order > 0) opts.order = s.order;

  std::string source;
  if (!read_file(s.spec, source)) {
    std::cerr << "error: cannot read " << s.spec << "\n";
    return 2;
  }
  if (name == "verify") {
    std::string conn;
    if (!read_file(s.connection, conn)) {
      std::cerr << "error: cannot read " << s.connection << "\n";
      return 2;
    }
    opts.connection = conn;
  }

  levifol::RunOutcome outcome = levifol::run(name, source, opts);
  std::string text = outcome.report.dump(2) + "\n";
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << output << "\n";
      return 2;
    }
    out << text;
  }
  if (outcome.exit_code != 0) std::cerr << "error: " << outcome.report["error"].get<std::string>() << "\n";
  return outcome.exit_code;
}

// tangentia: exact counts of fully tangent rational curves to a plane cubic.

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "tangentia/cli.hpp"

namespace {

using tangentia::Command;
using tangentia::RunConfig;

struct Sub {
  Command command;
  CLI::App* app;
};

// Registers a value option that is copied into params only when given.
void value(CLI::App* app, std::map<std::string, std::string>& params, const std::string& key, const std::string& help) {
  app->add_option_function<std::string>(
      "--" + key, [&params, key](const std::string& v) { params[key] = v; }, help);
}

void flag(CLI::App* app, std::map<std::string, std::string>& params, const std::string& key, const std::string& help) {
  app->add_flag_callback("--" + key, [&params, key] { params[key] = ""; }, help);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact relative Gromov-Witten bookkeeping for (P^2, smooth cubic)"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format;
  app.add_option("--format", format, "Output format: text, json or csv (default: $TANGENTIA_FORMAT or text)")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--special-cubic", config.special_cubic, "Use the cubic with j = 0 (cuspidal member in degree 3)");

  auto& p = config.params;
  std::vector<Sub> subs;
  const auto sub = [&](Command c, const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    subs.push_back({c, s});
    return s;
  };

  auto* mcover = sub(Command::MCover, "mcover", "Multiple-cover contribution M_w[d]");
  value(mcover, p, "w", "tangency w");
  value(mcover, p, "d", "cover degree d");

  auto* inst = sub(Command::Instantons, "instantons", "Instanton numbers m_w[1..dmax]");
  value(inst, p, "w", "tangency w");
  value(inst, p, "dmax", "largest cover degree");

  auto* integ = sub(Command::Integrality, "integrality", "Integrality report for m_w[d]");
  value(integ, p, "wmax", "largest w");
  value(integ, p, "dmax", "largest d");

  auto* torsion = sub(Command::Torsion, "torsion", "Torsion points, strata and division equations");
  flag(torsion, p, "strata", "sizes of T1, T2, T3");
  flag(torsion, p, "solve", "solve mP = A|D for --class");
  value(torsion, p, "class", "divisor class literal, e.g. 2H-E1-E2");
  value(torsion, p, "m", "multiplier for --solve (default 4)");
  value(torsion, p, "points", "list the n-torsion points");

  auto* classes = sub(Command::Classes, "classes", "Divisor classes of the given tangency degree");
  value(classes, p, "degree", "tangency degree (default 4)");
  classes->add_flag_callback("--csv", [&] { format = "csv"; }, "CSV output");
  classes->add_flag_callback("--json", [&] { format = "json"; }, "JSON output");

  auto* census = sub(Command::Census, "census", "Curves through a torsion point");
  value(census, p, "degree", "plane degree 1..4");
  value(census, p, "stratum", "T1, T2, T3 or N9 (9-torsion non-flex, degree 3)");
  flag(census, p, "aggregate", "N_1..N_3 and #M_4,P");

  auto* gw = sub(Command::CheckGw, "check-gw", "Assemble I_d and compare with the reference");
  value(gw, p, "degree", "degree 1..4");
  gw->add_flag_callback("--json", [&] { format = "json"; }, "JSON output");

  auto* graphs = sub(Command::Graphs, "graphs", "Enumerate combinatorial types G_{n,r}");
  value(graphs, p, "n", "number of expansion levels");
  value(graphs, p, "r", "number of leaves");
  value(graphs, p, "weights", "comma-separated root weights");

  sub(Command::VerifyAll, "verify-all", "Run every end-to-end check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? tangentia::kExitOk : tangentia::kExitUsage;
  }

  for (const auto& s : subs)
    if (s.app->parsed()) config.command = s.command;
  if (!format.empty()) config.format = tangentia::parse_format(format);

  return tangentia::run(config, std::cout, std::cerr, std::getenv("TANGENTIA_FORMAT"));
}

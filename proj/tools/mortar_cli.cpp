// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0
//
// mortar run --config study.cfg [--set key=value ...] [--threads N] [--export-matrices]
// mortar verify --suite <kernels|jumps|calderon|energy-k0|conventions|all>
//
// Exit codes: 0 success, 1 failed check or runtime error, 2 usage or config error.

#include <cmath>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mortar/parallel.hpp"
#include "mortar/study.hpp"
#include "mortar/verify.hpp"

namespace
{

using nlohmann::json;

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json to_json(const mortar::SuiteReport &r)
{
  json checks = json::array();
  for (const auto &c : r.checks)
  {
    json series = json::array();
    for (double v : c.series)
    {
      series.push_back(number(v));
    }
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"value", number(c.value)},
                      {"threshold", number(c.threshold)},
                      {"series", series},
                      {"detail", c.detail}});
  }
  return {{"suite", r.suite}, {"pass", r.passed()}, {"seconds", r.seconds}, {"checks", checks}};
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Three-field FEM-BEM coupling for Helmholtz transmission problems"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  auto *run = app.add_subcommand("run", "Run a convergence study and write CSV");
  std::string config_path;
  std::vector<std::string> overrides;
  bool export_matrices = false;
  run->add_option("--config", config_path, "Config file (key = value lines)")->required();
  run->add_option("--set", overrides, "Override a config key, key=value")->take_all();
  run->add_flag("--export-matrices", export_matrices, "Write operator matrices (Matrix Market)");
  run->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  auto *verify = app.add_subcommand("verify", "Run an invariant suite, report JSON");
  std::string suite;
  verify->add_option("--suite", suite, "Suite name or 'all'")->required();
  verify->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError &e)
  {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try
  {
    mortar::set_num_threads(threads);
    if (*run)
    {
      mortar::StudyConfig config = mortar::parse_config_file(config_path);
      for (const auto &o : overrides)
      {
        const auto eq = o.find('=');
        if (eq == std::string::npos)
        {
          throw mortar::ConfigError("--set expects key=value, got '" + o + "'");
        }
        mortar::apply_setting(config, o.substr(0, eq), o.substr(eq + 1));
      }
      if (app.get_option("--threads")->count() + run->get_option("--threads")->count() > 0)
      {
        config.threads = threads;
      }
      config.export_matrices = config.export_matrices || export_matrices;
      const mortar::StudyResult result = mortar::run_study(config);
      json rows = json::array();
      for (const auto &row : result.rows)
      {
        rows.push_back({{"level", row.level},
                        {"p", row.report.p},
                        {"h", row.report.h},
                        {"rel_h1_omega", number(row.report.h1_omega)},
                        {"residual", number(row.report.residual)},
                        {"seconds", row.report.seconds}});
      }
      std::cout << json{{"csv", result.csv_path}, {"rows", rows}}.dump(2) << "\n";
      return 0;
    }
    std::vector<std::string> names;
    if (suite == "all")
    {
      names = mortar::suite_names();
    }
    else
    {
      names = {suite};
    }
    json reports = json::array();
    bool ok = true;
    for (const auto &name : names)
    {
      const mortar::SuiteReport r = mortar::run_suite(name);
      ok = ok && r.passed();
      reports.push_back(to_json(r));
    }
    std::cout << (reports.size() == 1 ? reports[0] : json{{"pass", ok}, {"suites", reports}}).dump(2)
              << "\n";
    return ok ? 0 : 1;
  }
  catch (const mortar::ConfigError &e)
  {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  catch (const std::exception &e)
  {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#include "mortar/study.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "mortar/coupling.hpp"
#include "mortar/manufactured.hpp"
#include "mortar/matrix_market.hpp"
#include "mortar/parallel.hpp"

namespace mortar
{

namespace
{

std::string trim(const std::string &s)
{
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos)
  {
    return "";
  }
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string &value)
{
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, ','))
  {
    item = trim(item);
    if (!item.empty())
    {
      out.push_back(item);
    }
  }
  return out;
}

double to_double(const std::string &key, const std::string &value)
{
  try
  {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used == value.size() && std::isfinite(v))
    {
      return v;
    }
  }
  catch (const std::exception &)
  {
  }
  throw ConfigError("'" + key + "': expected a number, got '" + value + "'");
}

int to_int(const std::string &key, const std::string &value)
{
  try
  {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used == value.size())
    {
      return v;
    }
  }
  catch (const std::exception &)
  {
  }
  throw ConfigError("'" + key + "': expected an integer, got '" + value + "'");
}

bool to_bool(const std::string &key, const std::string &value)
{
  if (value == "true" || value == "1" || value == "yes" || value == "on")
  {
    return true;
  }
  if (value == "false" || value == "0" || value == "no" || value == "off")
  {
    return false;
  }
  throw ConfigError("'" + key + "': expected a boolean, got '" + value + "'");
}

std::string format_number(double v)
{
  std::ostringstream s;
  s << std::setprecision(10) << v;
  return s.str();
}

std::string sci(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10e", v);
  return buf;
}

}  // namespace

double StudyConfig::multiplier() const
{
  return case_name == "tc2" && !k_multiplier_set ? 1.0 : k_multiplier;
}

double StudyConfig::k() const { return multiplier() * std::sqrt(3.0) * pi; }

const std::vector<std::string> &config_keys()
{
  static const std::vector<std::string> keys = {
      "case",          "k_multiplier",   "degrees",        "levels",
      "first_level",   "mode",           "pversion_level", "solver",
      "gmres_tol",     "gmres_maxit",    "gmres_restart",  "gmres_preconditioned",
      "singular_order", "near_eta",      "far_points",     "output_dir",
      "export_matrices", "threads"};
  return keys;
}

void apply_setting(StudyConfig &c, const std::string &raw_key, const std::string &raw_value)
{
  const std::string key = trim(raw_key), value = trim(raw_value);
  if (key == "case")
  {
    c.case_name = value;
  }
  else if (key == "k_multiplier")
  {
    c.k_multiplier = to_double(key, value);
    c.k_multiplier_set = true;
  }
  else if (key == "degrees")
  {
    c.degrees.clear();
    for (const auto &item : split_list(value))
    {
      c.degrees.push_back(to_int(key, item));
    }
  }
  else if (key == "levels")
  {
    c.levels = to_int(key, value);
  }
  else if (key == "first_level")
  {
    c.first_level = to_int(key, value);
  }
  else if (key == "mode")
  {
    c.mode = value;
  }
  else if (key == "pversion_level")
  {
    c.pversion_level = to_int(key, value);
  }
  else if (key == "solver")
  {
    c.solver = value;
  }
  else if (key == "gmres_tol")
  {
    c.gmres.tol = to_double(key, value);
  }
  else if (key == "gmres_maxit")
  {
    c.gmres.maxit = to_int(key, value);
  }
  else if (key == "gmres_restart")
  {
    c.gmres.restart = to_int(key, value);
  }
  else if (key == "gmres_preconditioned")
  {
    c.gmres.preconditioned = to_bool(key, value);
  }
  else if (key == "singular_order")
  {
    c.quadrature.singular_order = to_int(key, value);
  }
  else if (key == "near_eta")
  {
    const auto items = split_list(value);
    if (items.size() != 3)
    {
      throw ConfigError("'near_eta': expected 3 values");
    }
    for (int i = 0; i < 3; i++)
    {
      c.quadrature.near_eta[i] = to_double(key, items[i]);
    }
  }
  else if (key == "far_points")
  {
    const auto items = split_list(value);
    if (items.size() != 4)
    {
      throw ConfigError("'far_points': expected 4 values");
    }
    for (int i = 0; i < 4; i++)
    {
      c.quadrature.far_points[i] = to_int(key, items[i]);
    }
  }
  else if (key == "output_dir")
  {
    c.output_dir = value;
  }
  else if (key == "export_matrices")
  {
    c.export_matrices = to_bool(key, value);
  }
  else if (key == "threads")
  {
    c.threads = to_int(key, value);
  }
  else
  {
    throw ConfigError("unknown key '" + key + "'");
  }
}

StudyConfig parse_config(std::istream &in, const std::string &source)
{
  StudyConfig c;
  std::string line;
  int number = 0;
  while (std::getline(in, line))
  {
    number++;
    const auto hash = line.find('#');
    if (hash != std::string::npos)
    {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty())
    {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
    {
      throw ConfigError(source + ":" + std::to_string(number) + ": expected key = value");
    }
    try
    {
      apply_setting(c, line.substr(0, eq), line.substr(eq + 1));
    }
    catch (const ConfigError &e)
    {
      throw ConfigError(source + ":" + std::to_string(number) + ": " + e.what());
    }
  }
  return c;
}

StudyConfig parse_config_file(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw ConfigError("cannot open config file '" + path + "'");
  }
  return parse_config(in, path);
}

void validate_config(const StudyConfig &c)
{
  if (c.case_name != "tc1" && c.case_name != "tc2" && c.case_name != "poly-exact")
  {
    throw ConfigError("case must be tc1, tc2 or poly-exact, got '" + c.case_name + "'");
  }
  if (!(c.k_multiplier > 0.0))
  {
    throw ConfigError("k_multiplier must be positive");
  }
  if (c.case_name == "tc2" && c.k_multiplier_set && c.k_multiplier != 1.0)
  {
    throw ConfigError("tc2 is defined for k_multiplier = 1 only");
  }
  if (c.degrees.empty())
  {
    throw ConfigError("degrees must not be empty");
  }
  for (int p : c.degrees)
  {
    if (p < 1 || p > 3)
    {
      throw ConfigError("degrees must be in {1, 2, 3}");
    }
  }
  if (c.levels < 1)
  {
    throw ConfigError("levels must be >= 1");
  }
  const int min_level = c.case_name == "tc2" ? 1 : 0;
  if (c.first_level < min_level || c.pversion_level < min_level)
  {
    throw ConfigError("mesh levels must be >= " + std::to_string(min_level) + " for case " +
                      c.case_name);
  }
  if (c.first_level + c.levels - 1 > 4 || c.pversion_level > 4)
  {
    throw ConfigError("mesh levels above 4 are not supported");
  }
  if (c.mode != "h-version" && c.mode != "p-version")
  {
    throw ConfigError("mode must be h-version or p-version");
  }
  if (c.solver != "schur" && c.solver != "direct" && c.solver != "gmres")
  {
    throw ConfigError("solver must be schur, direct or gmres");
  }
  if (!(c.gmres.tol > 0.0) || c.gmres.maxit < 1 || c.gmres.restart < 1)
  {
    throw ConfigError("gmres settings must be positive");
  }
  if (c.quadrature.singular_order < 1 || c.quadrature.singular_order > 40)
  {
    throw ConfigError("singular_order must be in 1..40");
  }
  for (int i = 0; i < 4; i++)
  {
    if (c.quadrature.far_points[i] < 1)
    {
      throw ConfigError("far_points must be positive");
    }
  }
  for (int i = 0; i < 3; i++)
  {
    if (!(c.quadrature.near_eta[i] > 0.0) || (i > 0 && c.quadrature.near_eta[i] < c.quadrature.near_eta[i - 1]))
    {
      throw ConfigError("near_eta must be positive and nondecreasing");
    }
  }
  if (c.threads < 1)
  {
    throw ConfigError("threads must be >= 1");
  }
  if (c.output_dir.empty())
  {
    throw ConfigError("output_dir must not be empty");
  }
}

std::shared_ptr<VolumeMesh> study_mesh(const std::string &case_name, int level)
{
  if (case_name == "tc2")
  {
    if (level < 1)
    {
      throw ConfigError("tc2 needs mesh level >= 1");
    }
    const double base[5] = {-0.5, -0.2, 0.0, 0.2, 0.5};
    const int m = 1 << (level - 1);
    std::vector<double> grid;
    for (int i = 0; i < 4; i++)
    {
      for (int j = 0; j < m; j++)
      {
        grid.push_back(base[i] + (base[i + 1] - base[i]) * j / m);
      }
    }
    grid.push_back(base[4]);
    return std::make_shared<VolumeMesh>(box_mesh(grid, grid, grid, tc2_region));
  }
  if (level < 0)
  {
    throw ConfigError("mesh level must be >= 0");
  }
  return std::make_shared<VolumeMesh>(cube_mesh(1.0, 1 << (level + 1)));
}

const std::vector<std::string> &csv_columns()
{
  static const std::vector<std::string> columns = {
      "case",          "k_multiplier",  "k",           "mode",          "level",
      "h",             "p",             "dofs_v",      "dofs_w",        "dofs_z",
      "rel_l2_omega",  "rel_h1_omega",  "scaled_l2_mortar", "scaled_l2_trace",
      "rate_l2_omega", "rate_h1_omega", "rate_mortar", "rate_trace",    "solver",
      "residual",      "iterations"};
  return columns;
}

std::string csv_header()
{
  std::string out;
  for (const auto &c : csv_columns())
  {
    out += (out.empty() ? "" : ",") + c;
  }
  return out;
}

std::string csv_line(const StudyConfig &config, const StudyRow &row)
{
  const ErrorReport &r = row.report;
  auto rate = [&](double v) { return row.has_rates ? sci(v) : std::string(); };
  std::vector<std::string> fields = {config.case_name,
                                     format_number(config.multiplier()),
                                     sci(r.k),
                                     config.mode,
                                     std::to_string(row.level),
                                     sci(r.h),
                                     std::to_string(r.p),
                                     std::to_string(row.dofs_v),
                                     std::to_string(row.dofs_w),
                                     std::to_string(row.dofs_z),
                                     sci(r.l2_omega),
                                     sci(r.h1_omega),
                                     sci(r.mortar),
                                     sci(r.trace),
                                     rate(row.rate_l2),
                                     rate(row.rate_h1),
                                     rate(row.rate_mortar),
                                     rate(row.rate_trace),
                                     r.solver,
                                     sci(r.residual),
                                     std::to_string(r.iterations)};
  std::string out;
  for (std::size_t i = 0; i < fields.size(); i++)
  {
    out += (i ? "," : "") + fields[i];
  }
  return out;
}

void write_file_atomic(const std::string &path, const std::string &contents)
{
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path())
  {
    fs::create_directories(target.parent_path());
  }
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
    {
      throw Error("cannot write '" + tmp.string() + "'");
    }
    out << contents;
    out.flush();
    if (!out)
    {
      throw Error("write failed for '" + tmp.string() + "'");
    }
  }
  fs::rename(tmp, target);
}

namespace
{

void export_matrices(const StudyConfig &config, const SystemParts &parts, int level, int p)
{
  namespace fs = std::filesystem;
  const fs::path dir = fs::path(config.output_dir) / "matrices";
  fs::create_directories(dir);
  const std::string stem =
      config.case_name + "_L" + std::to_string(level) + "_p" + std::to_string(p) + "_";
  auto path = [&](const std::string &name) { return (dir / (stem + name + ".mtx")).string(); };
  const double k = parts.ops.k;
  write_matrix_market(path("A"), parts.interior.impedance_block(k));
  write_matrix_market(path("C"), CSparse(parts.C.cast<cplx>()));
  write_matrix_market(path("V_ww"), parts.ops.V_ww);
  write_matrix_market(path("K_wz"), parts.ops.K_wz);
  write_matrix_market(path("Kp_zw"), parts.ops.Kp_zw);
  write_matrix_market(path("W_zz"), parts.ops.W_zz);
}

}  // namespace

StudyRow run_single(const StudyConfig &config, int level, int p)
{
  const std::string where = config.case_name + " level " + std::to_string(level) + " p " +
                            std::to_string(p) + ": ";
  try
  {
    const ManufacturedCase mcase = make_case(config.case_name, config.k(), p);
    const Discretization disc = make_discretization(study_mesh(config.case_name, level), p);
    SystemParts parts;
    const BlockSystem system = assemble_block_system(mcase, disc, config.quadrature, &parts);
    if (config.export_matrices)
    {
      export_matrices(config, parts, level, p);
    }
    SolutionTriple x;
    if (config.solver == "schur")
    {
      x = schur_solve(system);
    }
    else if (config.solver == "direct")
    {
      x = direct_solve(system);
    }
    else
    {
      x = gmres_solve(system, config.gmres);
    }
    StudyRow row;
    row.level = level;
    row.report = compute_errors(x, mcase, disc);
    row.dofs_v = disc.volume.num_dofs();
    row.dofs_w = disc.trace.num_w();
    row.dofs_z = disc.trace.num_z();
    return row;
  }
  catch (const ConfigError &)
  {
    throw;
  }
  catch (const std::exception &e)
  {
    throw Error(where + e.what());
  }
}

StudyResult run_study(const StudyConfig &config)
{
  validate_config(config);
  set_num_threads(config.threads);
  StudyResult result;
  if (config.mode == "h-version")
  {
    for (int p : config.degrees)
    {
      for (int i = 0; i < config.levels; i++)
      {
        StudyRow row = run_single(config, config.first_level + i, p);
        if (i > 0)
        {
          const ErrorReport &a = result.rows.back().report, &b = row.report;
          const double lh = std::log(a.h / b.h);
          row.has_rates = true;
          row.rate_l2 = std::log(a.l2_omega / b.l2_omega) / lh;
          row.rate_h1 = std::log(a.h1_omega / b.h1_omega) / lh;
          row.rate_mortar = std::log(a.mortar / b.mortar) / lh;
          row.rate_trace = std::log(a.trace / b.trace) / lh;
        }
        result.rows.push_back(row);
      }
    }
  }
  else
  {
    for (int p : config.degrees)
    {
      result.rows.push_back(run_single(config, config.pversion_level, p));
    }
  }
  std::string csv = csv_header() + "\n";
  for (const auto &row : result.rows)
  {
    csv += csv_line(config, row) + "\n";
  }
  result.csv_path = (std::filesystem::path(config.output_dir) /
                     (config.case_name + "_k" + format_number(config.multiplier()) + "_" +
                      config.mode + ".csv"))
                        .string();
  write_file_atomic(result.csv_path, csv);
  return result;
}

}  // namespace mortar

// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MORTAR_STUDY_HPP
#define MORTAR_STUDY_HPP

#include <istream>
#include <memory>
#include <string>
#include <vector>

#include "mortar/analysis.hpp"
#include "mortar/bem_operators.hpp"
#include "mortar/solver.hpp"

namespace mortar
{

//
// Convergence study settings. Level L uses 2^(L+1) cells per direction on the cube
// (-0.5, 0.5)^3; for tc2 the grid contains the planes +-0.2 and 0 and L >= 1 is required.
//
struct StudyConfig
{
  std::string case_name = "tc1";
  double k_multiplier = 1.5;  // k = k_multiplier * sqrt(3) * pi
  bool k_multiplier_set = false;  // tc2 uses 1 unless set explicitly
  std::vector<int> degrees = {1};
  int levels = 3;
  int first_level = 1;
  std::string mode = "h-version";  // or "p-version"
  int pversion_level = 1;
  std::string solver = "schur";  // schur, direct, gmres
  GmresOptions gmres;
  BemQuadrature quadrature;
  std::string output_dir = "results";
  bool export_matrices = false;
  int threads = 1;

  double multiplier() const;
  double k() const;
};

// Keys accepted in config files and --set overrides.
const std::vector<std::string> &config_keys();

// Applies one key=value pair. Throws ConfigError for unknown keys or bad values.
void apply_setting(StudyConfig &config, const std::string &key, const std::string &value);

// Parses a flat "key = value" file ('#' starts a comment).
StudyConfig parse_config_file(const std::string &path);
StudyConfig parse_config(std::istream &in, const std::string &source = "<stream>");

// Checks ranges and combinations. Throws ConfigError.
void validate_config(const StudyConfig &config);

// Volume mesh of a study level.
std::shared_ptr<VolumeMesh> study_mesh(const std::string &case_name, int level);

// One CSV row.
struct StudyRow
{
  int level = 0;
  ErrorReport report;
  int dofs_v = 0, dofs_w = 0, dofs_z = 0;
  // Rates against the previous row with the same p (h-version only).
  bool has_rates = false;
  double rate_l2 = 0, rate_h1 = 0, rate_mortar = 0, rate_trace = 0;
};

struct StudyResult
{
  std::vector<StudyRow> rows;
  std::string csv_path;
};

// CSV header, fixed column order.
const std::vector<std::string> &csv_columns();
std::string csv_header();
std::string csv_line(const StudyConfig &config, const StudyRow &row);

// Writes path atomically (temporary file and rename).
void write_file_atomic(const std::string &path, const std::string &contents);

// Runs one discretization (mesh level, degree) of the configured case.
StudyRow run_single(const StudyConfig &config, int level, int p);

// Runs all levels and degrees and writes the CSV. Errors propagate with context.
StudyResult run_study(const StudyConfig &config);

}  // namespace mortar

#endif  // MORTAR_STUDY_HPP

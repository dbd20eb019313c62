#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ssbath::cli {

enum class Format { csv, json };

struct Table {
  std::vector<std::string> columns;
  std::vector<bool> integral;  // per column; printed without exponent
  std::vector<std::vector<std::optional<double>>> rows;
};

/// CSV: LF endings, header row, "%.16e" numbers, empty field for missing.
/// JSON: array of row objects with null for missing.
std::string render(const Table& t, Format f);

struct CommandResult {
  Table table;
  int failed_rows = 0;
  std::vector<std::string> diagnostics;
};

struct CorrelateConfig {
  double q = 1.2;
  double beta_tilde = 3.5;
  double omega_c = 1.0;
  double alpha = 1.0;
  double tau_max = 10.0;
  int n_points = 101;
};

struct SuPlaneConfig {
  double q = 0.9;
  double t_tilde_min = 0.05;
  double t_tilde_max = 5.0;
  int n = 200;
};

struct TempMapConfig {
  std::vector<double> q_list{1.0, 0.99, 0.98, 0.9, 0.8};
  double t_tilde_min = 0.05;
  double t_tilde_max = 5.0;
  int n = 200;
};

struct StarkConfig {
  double q = 1.0;
  double theta = 0.0;
  double y_min = 0.1;
  double y_max = 30.0;
  int n = 300;
};

struct QmeConfig {
  double q = 1.0;
  double y = 1.0;
  double theta = 0.0;
  double gamma0 = 1.0;
  double omega_a = 1.0;
  double t_max = 20.0;
  double dt = 0.01;
  std::string init = "excited";  // excited | ground | superposition
  int sample_every = 10;
};

CommandResult cmd_correlate(const CorrelateConfig& c);
CommandResult cmd_su_plane(const SuPlaneConfig& c);
CommandResult cmd_temp_map(const TempMapConfig& c);
CommandResult cmd_stark(const StarkConfig& c);
CommandResult cmd_qme(const QmeConfig& c);

// Log-spaced and linear grids; both endpoints included.
std::vector<double> log_grid(double lo, double hi, int n);
std::vector<double> lin_grid(double lo, double hi, int n);

}  // namespace ssbath::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cvarn/types.hpp"

namespace cvarn {

enum class BasisSelect { Hermite, Values, Both };

/// Configuration of one convergence experiment (ex1..ex7). Degree range
/// and sampling factors default per experiment when left negative.
struct ExperimentConfig {
  std::string experiment;
  int n_min = -1;
  int n_max = -1;
  int step = -1;
  double points_factor = 1.0;
  BasisSelect basis = BasisSelect::Both;
  bool baseline = true;  // include the naive (monomial) variant
  std::string out_csv;
  std::string out_plot;
  unsigned seed = 0;  // reserved; the experiments are deterministic

  void validate() const;
};

/// Plain numeric table with named columns; one row per degree.
struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  Index col_index(const std::string& name) const;
  std::vector<double> column(const std::string& name) const;
  bool empty() const { return rows.empty(); }
};

/// Run the configured experiment and return its convergence table;
/// writes CSV/plot files when paths are set in the config.
ResultTable run_experiment(const ExperimentConfig& config);

/// CSV with a snake_case header row; floating point uses 17 significant
/// digits so parsing reproduces the table exactly.
void write_csv(const ResultTable& table, const std::string& path);
void write_csv(const ResultTable& table, std::ostream& out);
ResultTable read_csv(const std::string& path);
ResultTable read_csv(std::istream& in);

/// Self-contained SVG with a log-scale error axis, one series per error
/// column plotted against the first column. Errors on an empty table.
void emit_plot(const ResultTable& table, const std::string& path);

}  // namespace cvarn

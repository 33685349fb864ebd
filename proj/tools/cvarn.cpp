// Command-line front end: polynomial fitting with derivative data on
// arbitrary grids, evaluation of fitted models, and the convergence
// experiments ex1..ex7.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical breakdown.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "cvarn/experiments.hpp"
#include "cvarn/fitting.hpp"
#include "cvarn/grids.hpp"

namespace {

using nlohmann::json;

struct FitArgs {
  std::string input;
  std::string out = "model.json";
  int degree = 0;
  std::string basis = "hermite";
};

struct EvalArgs {
  std::string model;
  std::string out;
  std::string points;  // "a:b:count" or a CSV file with an x column
  int order = 0;
};

struct ExperimentArgs {
  cvarn::ExperimentConfig config;
  std::string basis = "both";
};

// CSV with one sample per row: x, f, then one column per derivative order.
void read_samples(const std::string& path, Eigen::VectorXd& x,
                  std::vector<Eigen::VectorXd>& data_columns) {
  const cvarn::ResultTable table = cvarn::read_csv(path);
  if (table.columns.size() < 2)
    throw std::invalid_argument("fit: input needs at least columns x,f");
  const auto m = static_cast<cvarn::Index>(table.rows.size());
  if (m == 0) throw std::invalid_argument("fit: input has no rows");
  x.resize(m);
  data_columns.assign(table.columns.size() - 1, Eigen::VectorXd(m));
  for (cvarn::Index i = 0; i < m; ++i) {
    x[i] = table.rows[i][0];
    for (size_t c = 1; c < table.columns.size(); ++c)
      data_columns[c - 1][i] = table.rows[i][c];
  }
}

json to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (cvarn::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (cvarn::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const json& rows) {
  const auto r = static_cast<cvarn::Index>(rows.size());
  const auto c = r ? static_cast<cvarn::Index>(rows[0].size()) : 0;
  Eigen::MatrixXd m(r, c);
  for (cvarn::Index i = 0; i < r; ++i)
    for (cvarn::Index j = 0; j < c; ++j) m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return m;
}

int run_fit(const FitArgs& args) {
  Eigen::VectorXd x;
  std::vector<Eigen::VectorXd> data;
  read_samples(args.input, x, data);
  const auto kind = args.basis == "values" ? cvarn::BasisKind::ValuesOrthogonalized
                                           : cvarn::BasisKind::HermiteOrthogonalized;
  cvarn::PolyModel<double> model;
  if (data.size() == 1 && kind == cvarn::BasisKind::ValuesOrthogonalized) {
    model = cvarn::fit_values_only<double>(cvarn::NodeSet<double>(x), data[0], args.degree);
  } else {
    cvarn::HermiteData<double> hermite{cvarn::NodeSet<double>(x), data[0], {}};
    hermite.derivatives.assign(data.begin() + 1, data.end());
    model = cvarn::fit_hermite(hermite, args.degree, kind);
  }
  json j;
  j["field"] = "real";
  j["degree"] = model.degree();
  j["order_fit"] = model.order_fit;
  j["basis_kind"] =
      model.basis_kind == cvarn::BasisKind::HermiteOrthogonalized ? "hermite" : "values";
  j["residual"] = model.residual;
  j["coeffs"] = std::vector<double>(model.coeffs.begin(), model.coeffs.end());
  j["hessenberg"] = to_json(model.hessenberg);
  std::ofstream out(args.out);
  if (!out) throw std::runtime_error("fit: cannot open " + args.out);
  out << j.dump(2) << "\n";
  std::cout << "fitted degree " << model.degree() << " model, residual " << model.residual
            << " -> " << args.out << "\n";
  return 0;
}

int run_eval(const EvalArgs& args) {
  std::ifstream in(args.model);
  if (!in) throw std::runtime_error("eval: cannot open " + args.model);
  json j = json::parse(in);
  if (j.value("field", "real") != "real")
    throw std::invalid_argument("eval: only real models are stored by this tool");
  cvarn::PolyModel<double> model;
  const std::vector<double> coeffs = j["coeffs"].get<std::vector<double>>();
  model.coeffs = Eigen::Map<const Eigen::VectorXd>(coeffs.data(),
                                                   static_cast<cvarn::Index>(coeffs.size()));
  model.hessenberg = matrix_from_json(j["hessenberg"]);
  model.order_fit = j.value("order_fit", 0);
  model.basis_kind = j.value("basis_kind", "hermite") == std::string("values")
                         ? cvarn::BasisKind::ValuesOrthogonalized
                         : cvarn::BasisKind::HermiteOrthogonalized;

  Eigen::VectorXd s;
  if (args.points.find(':') != std::string::npos) {
    double a, b;
    long count;
    if (std::sscanf(args.points.c_str(), "%lf:%lf:%ld", &a, &b, &count) != 3 || count < 1)
      throw std::invalid_argument("eval: --points expects a:b:count or a CSV path");
    s = cvarn::equispaced_points(count, a, b);
  } else {
    Eigen::VectorXd x;
    std::vector<Eigen::VectorXd> cols;
    read_samples(args.points, x, cols);
    s = x;
  }

  const auto blocks = cvarn::evaluate(model, cvarn::NodeSet<double>(s), args.order);
  cvarn::ResultTable table;
  table.columns = {"s", "y"};
  for (int i = 1; i <= args.order; ++i) table.columns.push_back("y" + std::to_string(i));
  for (cvarn::Index r = 0; r < s.size(); ++r) {
    std::vector<double> row{s[r]};
    for (const auto& block : blocks) row.push_back(block[r]);
    table.rows.push_back(std::move(row));
  }
  if (args.out.empty())
    cvarn::write_csv(table, std::cout);
  else
    cvarn::write_csv(table, args.out);
  return 0;
}

int run_experiment_cmd(ExperimentArgs& args) {
  if (args.basis == "hermite")
    args.config.basis = cvarn::BasisSelect::Hermite;
  else if (args.basis == "values")
    args.config.basis = cvarn::BasisSelect::Values;
  else if (args.basis == "both")
    args.config.basis = cvarn::BasisSelect::Both;
  else
    throw std::invalid_argument("experiment: --basis must be hermite, values or both");
  const cvarn::ResultTable table = cvarn::run_experiment(args.config);
  if (args.config.out_csv.empty()) cvarn::write_csv(table, std::cout);
  std::cerr << args.config.experiment << ": " << table.rows.size() << " rows";
  if (!args.config.out_csv.empty()) std::cerr << " -> " << args.config.out_csv;
  if (!args.config.out_plot.empty()) std::cerr << ", plot -> " << args.config.out_plot;
  std::cerr << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"well-conditioned polynomial fitting and evaluation with derivatives"};
  app.require_subcommand(1);

  FitArgs fit_args;
  auto* fit = app.add_subcommand("fit", "fit a polynomial model to sampled data");
  fit->add_option("--input", fit_args.input, "CSV with columns x,f[,fp,...]")->required();
  fit->add_option("--degree,-n", fit_args.degree, "polynomial degree")->required();
  fit->add_option("--basis", fit_args.basis, "hermite|values")
      ->check(CLI::IsMember({"hermite", "values"}));
  fit->add_option("--out", fit_args.out, "model output path (JSON)");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "evaluate a fitted model");
  eval->add_option("--model", eval_args.model, "model JSON from `fit`")->required();
  eval->add_option("--points", eval_args.points, "a:b:count or CSV with an x column")
      ->required();
  eval->add_option("--order", eval_args.order, "highest derivative order to output");
  eval->add_option("--out", eval_args.out, "output CSV (stdout when omitted)");

  ExperimentArgs exp_args;
  auto* exp = app.add_subcommand("experiment", "run a convergence experiment (ex1..ex7)");
  exp->add_option("id", exp_args.config.experiment, "experiment id, ex1..ex7")->required();
  exp->add_option("--n-min", exp_args.config.n_min, "lowest degree");
  exp->add_option("--n-max", exp_args.config.n_max, "highest degree");
  exp->add_option("--step", exp_args.config.step, "degree increment");
  exp->add_option("--basis", exp_args.basis, "hermite|values|both")
      ->check(CLI::IsMember({"hermite", "values", "both"}));
  exp->add_flag("--baseline,!--no-baseline", exp_args.config.baseline,
                "include the naive (monomial) variant");
  exp->add_option("--points-factor", exp_args.config.points_factor,
                  "scale factor for the sampling counts");
  exp->add_option("--out", exp_args.config.out_csv, "CSV output path");
  exp->add_option("--plot", exp_args.config.out_plot, "SVG plot output path");
  exp->add_option("--seed", exp_args.config.seed,
                  "reserved; the experiments are deterministic");

  try {
    app.parse(argc, argv);
    if (fit->parsed()) return run_fit(fit_args);
    if (eval->parsed()) return run_eval(eval_args);
    return run_experiment_cmd(exp_args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const cvarn::BreakdownError& e) {
    std::cerr << "numerical breakdown: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

#include "cvarn/rect_eig.hpp"

#include <algorithm>
#include <numeric>

namespace cvarn {

namespace {

// Pairs from the projected square pencil (F, G), with residuals and
// filtering taken against the original rectangular problem.
EigPairs collect_pairs(const Eigen::MatrixXd& f, const Eigen::MatrixXd& g,
                       const RectGEVP& problem, const EigOptions& opts) {
  Eigen::GeneralizedEigenSolver<Eigen::MatrixXd> solver(f, g, true);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("rect_eig: generalized eigensolver failed to converge");

  const double norm_a = problem.A.norm();
  const double norm_b = problem.B.norm();
  const auto alphas = solver.alphas();
  const auto betas = solver.betas();
  const auto vectors = solver.eigenvectors();

  struct Pair {
    double lambda;
    double residual;
    Eigen::VectorXd beta;
  };
  std::vector<Pair> pairs;
  for (Index i = 0; i < alphas.size(); ++i) {
    if (betas[i] == 0.0) continue;
    const Complex lambda = alphas[i] / betas[i];
    if (!is_finite(lambda) || std::abs(lambda) > opts.max_magnitude) continue;
    if (std::abs(lambda.imag()) > opts.imag_tol * (1.0 + std::abs(lambda.real()))) continue;
    // rotate the complex eigenvector onto its dominant component and keep
    // the real part
    Eigen::VectorXcd v = vectors.col(i);
    Index imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    v *= std::abs(v[imax]) / v[imax];
    Eigen::VectorXd beta = v.real();
    const double nb = beta.norm();
    if (nb == 0.0) continue;
    const double lam = lambda.real();
    const double res = (problem.A * beta - lam * (problem.B * beta)).norm() / nb;
    if (res > opts.residual_factor * (norm_a + std::abs(lam) * norm_b)) continue;
    pairs.push_back({lam, res, std::move(beta)});
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const Pair& x, const Pair& y) { return x.lambda < y.lambda; });

  EigPairs out;
  out.lambdas.resize(static_cast<Index>(pairs.size()));
  out.residuals.resize(static_cast<Index>(pairs.size()));
  out.vectors.resize(problem.A.cols(), static_cast<Index>(pairs.size()));
  for (Index i = 0; i < out.count(); ++i) {
    out.lambdas[i] = pairs[i].lambda;
    out.residuals[i] = pairs[i].residual;
    out.vectors.col(i) = pairs[i].beta;
  }
  return out;
}

}  // namespace

EigPairs rect_eig_qr(const RectGEVP& problem, const EigOptions& opts) {
  problem.validate();
  const Index p = problem.B.cols();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(problem.B);
  Eigen::MatrixXd r = qr.matrixQR().topRows(p).triangularView<Eigen::Upper>();
  const Eigen::VectorXd diag = r.diagonal().cwiseAbs();
  if (diag.minCoeff() <=
      static_cast<double>(p) * std::numeric_limits<double>::epsilon() * diag.maxCoeff())
    throw std::runtime_error(
        "rect_eig_qr: B is (numerically) rank deficient; use rect_eig_svd");
  const Eigen::MatrixXd q_thin =
      qr.householderQ() * Eigen::MatrixXd::Identity(problem.B.rows(), p);
  return collect_pairs(q_thin.transpose() * problem.A, r, problem, opts);
}

EigPairs rect_eig_svd(const RectGEVP& problem, int keep, const EigOptions& opts) {
  problem.validate();
  const Index p = problem.A.cols();
  if (keep < 0) keep = problem.keep >= 0 ? problem.keep : static_cast<int>(p);
  Eigen::MatrixXd stacked(problem.A.rows(), 2 * p);
  stacked << problem.A, problem.B;
  if (keep > std::min(stacked.rows(), stacked.cols()))
    throw std::invalid_argument("rect_eig_svd: keep exceeds the stacked matrix dimensions");
  if (keep != p)
    throw std::invalid_argument(
        "rect_eig_svd: keep must equal the column count for a square projected pencil");
  Eigen::BDCSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeThinU);
  const Eigen::MatrixXd u = svd.matrixU().leftCols(keep);
  return collect_pairs(u.transpose() * problem.A, u.transpose() * problem.B, problem, opts);
}

EigPairs solve_rect_gevp(const RectGEVP& problem, const EigOptions& opts) {
  return problem.reduction == RectGEVP::Reduction::Qr ? rect_eig_qr(problem, opts)
                                                      : rect_eig_svd(problem, -1, opts);
}

}  // namespace cvarn

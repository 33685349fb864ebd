#include "cvarn/fourier.hpp"

#include <numbers>

namespace cvarn {

namespace {

Eigen::VectorXcd half_period_nodes(const Eigen::VectorXd& x) {
  Eigen::VectorXcd z(x.size());
  for (Index j = 0; j < x.size(); ++j) z[j] = std::polar(1.0, std::numbers::pi * x[j] / 2);
  return z;
}

}  // namespace

FourierModel fourier_fit_hermite(const Eigen::VectorXd& x, const Eigen::VectorXd& f,
                                 const Eigen::VectorXd& fp_scaled, int degree,
                                 BasisKind kind, const ArnoldiOptions& opts) {
  if (f.size() != x.size() || fp_scaled.size() != x.size())
    throw std::invalid_argument("fourier_fit_hermite: data lengths must match the grid");
  const Eigen::VectorXcd z = half_period_nodes(x);
  auto [q, h] = detail::basis_at_nodes<Complex>(NodeSet<Complex>(z), 1, degree, kind, opts);
  const Index m = x.size();
  const Eigen::MatrixXcd q0 = q.topRows(m);
  // z-scaled derivative block: samples of z q'(z), i.e. the x-derivative of
  // the modes up to the -(2/pi) factor carried by the data
  const Eigen::MatrixXcd q1 = z.asDiagonal() * q.bottomRows(m);
  // f       = Re(Q0 c)
  // fp_scaled = Im(diag(z) Q1 c)        with c = a + i b, b_0 = 0
  Eigen::MatrixXd sys(2 * m, 2 * degree + 1);
  sys.topLeftCorner(m, degree + 1) = q0.real();
  sys.topRightCorner(m, degree) = -q0.imag().rightCols(degree);
  sys.bottomLeftCorner(m, degree + 1) = q1.imag();
  sys.bottomRightCorner(m, degree) = q1.real().rightCols(degree);
  Eigen::VectorXd rhs(2 * m);
  rhs.head(m) = f;
  rhs.tail(m) = fp_scaled;
  FourierModel model;
  Eigen::VectorXd sol = detail::least_squares<Real>(sys, rhs, &model.residual);
  model.a = sol.head(degree + 1);
  model.b = Eigen::VectorXd::Zero(degree + 1);
  model.b.tail(degree) = sol.tail(degree);
  model.hessenberg = std::move(h);
  model.basis_kind = kind;
  return model;
}

FourierValues fourier_eval(const FourierModel& model, const Eigen::VectorXd& s) {
  const Eigen::VectorXcd zs = half_period_nodes(s);
  auto ev = confluent_eval_matrix<Complex>(model.hessenberg, NodeSet<Complex>(zs), 1);
  const Eigen::VectorXcd c = model.coeffs();
  FourierValues out;
  out.values = (ev.block(0) * c).real();
  out.scaled_derivatives = (zs.asDiagonal() * (ev.block(1) * c)).imag();
  return out;
}

}  // namespace cvarn

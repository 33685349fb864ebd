#include "cvarn/harmonic.hpp"

namespace cvarn {

HarmonicModel harmonic_fit(const BoundaryCurve& curve, const Eigen::VectorXd& f, int degree,
                           BasisKind kind, const ArnoldiOptions& opts) {
  if (f.size() != curve.size())
    throw std::invalid_argument("harmonic_fit: data length != curve sample count");
  auto [q, h] = detail::basis_at_nodes<Complex>(curve.nodes(), 1, degree, kind, opts);
  const Index m = curve.size();
  const auto q0 = q.topRows(m);
  // u = Re(Q0 (a + i b)) with b_0 = 0  =>  [Re Q0 | -Im Q0(:,2:)] (a; b_hat) = f
  Eigen::MatrixXd sys(m, 2 * degree + 1);
  sys.leftCols(degree + 1) = q0.real();
  sys.rightCols(degree) = -q0.imag().rightCols(degree);
  HarmonicModel model;
  Eigen::VectorXd sol = detail::least_squares<Real>(sys, f, &model.residual);
  model.a = sol.head(degree + 1);
  model.b = Eigen::VectorXd::Zero(degree + 1);
  model.b.tail(degree) = sol.tail(degree);
  model.hessenberg = std::move(h);
  model.basis_kind = kind;
  return model;
}

Eigen::VectorXd harmonic_eval(const HarmonicModel& model, const Eigen::VectorXcd& points) {
  auto ev = confluent_eval_matrix<Complex>(model.hessenberg, NodeSet<Complex>(points), 0);
  return (ev.w * model.coeffs()).real();
}

Eigen::VectorXd dtn_evaluate(const HarmonicModel& model, const BoundaryCurve& curve) {
  auto ev = confluent_eval_matrix<Complex>(model.hessenberg, curve.nodes(), 1);
  const Eigen::VectorXcd hp = ev.block(1) * model.coeffs();
  return (curve.normal.array() * hp.array()).real();
}

}  // namespace cvarn

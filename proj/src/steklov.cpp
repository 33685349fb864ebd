#include "cvarn/steklov.hpp"

namespace cvarn {

BoundaryBasis boundary_basis(const BoundaryCurve& curve, int degree, BasisKind kind,
                             const ArnoldiOptions& opts) {
  auto [q, h] = detail::basis_at_nodes<Complex>(curve.nodes(), 1, degree, kind, opts);
  BoundaryBasis basis;
  const Index m = curve.size();
  basis.values = q.topRows(m);
  basis.derivatives = q.bottomRows(m);
  basis.hessenberg = std::move(h);
  basis.kind = kind;
  return basis;
}

namespace {

RectGEVP assemble(const Eigen::MatrixXcd& q0, const Eigen::MatrixXcd& q1,
                  const BoundaryCurve& curve) {
  if (q0.rows() != curve.size())
    throw std::invalid_argument("steklov_assemble: basis rows != curve sample count");
  const int n = static_cast<int>(q0.cols()) - 1;
  const Eigen::MatrixXcd nu_q1 = curve.normal.asDiagonal() * q1;
  RectGEVP problem;
  problem.A.resize(q0.rows(), 2 * n + 1);
  problem.A.leftCols(n + 1) = nu_q1.real();
  problem.A.rightCols(n) = nu_q1.imag().rightCols(n);
  problem.B.resize(q0.rows(), 2 * n + 1);
  problem.B.leftCols(n + 1) = q0.real();
  problem.B.rightCols(n) = q0.imag().rightCols(n);
  return problem;
}

}  // namespace

RectGEVP steklov_assemble(const BoundaryBasis& basis, const BoundaryCurve& curve) {
  return assemble(basis.values, basis.derivatives, curve);
}

RectGEVP steklov_assemble(const ArnoldiBasis<Complex>& basis, const BoundaryCurve& curve) {
  if (basis.order < 1)
    throw std::invalid_argument("steklov_assemble: basis must carry a derivative block");
  return assemble(basis.block(0), basis.block(1), curve);
}

namespace {

RectGEVP mask_rhs(RectGEVP problem, const Eigen::Array<bool, Eigen::Dynamic, 1>& mask) {
  if (mask.size() != problem.B.rows())
    throw std::invalid_argument("sloshing_assemble: mask length != sample count");
  if (!mask.any()) throw std::invalid_argument("sloshing_assemble: empty mask");
  for (Index i = 0; i < mask.size(); ++i)
    if (!mask[i]) problem.B.row(i).setZero();
  problem.reduction = RectGEVP::Reduction::Svd;
  problem.keep = static_cast<int>(problem.B.cols());
  return problem;
}

}  // namespace

RectGEVP sloshing_assemble(const BoundaryBasis& basis, const BoundaryCurve& boundary,
                           const Eigen::Array<bool, Eigen::Dynamic, 1>& mask) {
  return mask_rhs(steklov_assemble(basis, boundary), mask);
}

RectGEVP sloshing_assemble(const ArnoldiBasis<Complex>& basis, const BoundaryCurve& boundary,
                           const Eigen::Array<bool, Eigen::Dynamic, 1>& mask) {
  return mask_rhs(steklov_assemble(basis, boundary), mask);
}

Eigen::VectorXcd steklov_coefficients(const Eigen::VectorXd& beta) {
  const Index n = (beta.size() - 1) / 2;
  if (beta.size() != 2 * n + 1)
    throw std::invalid_argument("steklov_coefficients: beta length must be odd");
  Eigen::VectorXcd c(n + 1);
  c[0] = beta[0];
  for (Index k = 1; k <= n; ++k) c[k] = Complex(beta[k], -beta[n + k]);
  return c;
}

Eigen::VectorXd eigenfunction_trace(const Eigen::MatrixXcd& hessenberg,
                                    const Eigen::VectorXcd& points,
                                    const Eigen::VectorXd& beta) {
  auto ev = confluent_eval_matrix<Complex>(hessenberg, NodeSet<Complex>(points), 0);
  return (ev.w * steklov_coefficients(beta)).real();
}

Eigen::VectorXd normalize_trace(Eigen::VectorXd p) {
  const double scale = p.cwiseAbs().maxCoeff();
  if (scale == 0.0) return p;
  p /= scale;
  for (Index i = 0; i < p.size(); ++i) {
    if (std::abs(p[i]) > 1.0 - 1e-8) {  // first extremum fixes the sign
      if (p[i] < 0) p = -p;
      break;
    }
  }
  return p;
}

}  // namespace cvarn

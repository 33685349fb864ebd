#pragma once

#include <vector>

#include "cvarn/arnoldi.hpp"

namespace cvarn {

/// Which data the basis was orthogonalized against. Hermite: the stacked
/// value/derivative columns (order >= 1). Values: the value columns only
/// (order 0), with derivative samples generated afterwards from the
/// Hessenberg recursion.
enum class BasisKind { HermiteOrthogonalized, ValuesOrthogonalized };

/// Function values and derivatives of orders 1..l sampled on a common grid.
template <typename Scalar>
struct HermiteData {
  NodeSet<Scalar> nodes;
  VectorX<Scalar> values;
  std::vector<VectorX<Scalar>> derivatives;

  int order() const { return static_cast<int>(derivatives.size()); }

  void validate() const {
    if (values.size() != nodes.size())
      throw std::invalid_argument("HermiteData: values length != node count");
    for (const auto& d : derivatives)
      if (d.size() != nodes.size())
        throw std::invalid_argument("HermiteData: derivative length != node count");
  }

  VectorX<Scalar> stacked() const {
    VectorX<Scalar> rhs((order() + 1) * nodes.size());
    rhs.head(nodes.size()) = values;
    for (int i = 0; i < order(); ++i)
      rhs.segment((i + 1) * nodes.size(), nodes.size()) = derivatives[i];
    return rhs;
  }
};

/// A fitted polynomial: coefficients in the orthogonalized basis plus the
/// Hessenberg matrix that regenerates the basis (and its derivatives of
/// any order) at new nodes.
template <typename Scalar>
struct PolyModel {
  VectorX<Scalar> coeffs;
  MatrixX<Scalar> hessenberg;
  int order_fit = 0;  // order used during orthogonalization; 0 for values-only
  BasisKind basis_kind = BasisKind::HermiteOrthogonalized;
  double residual = 0.0;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  void validate() const {
    if (coeffs.size() != hessenberg.cols() + 1)
      throw std::invalid_argument("PolyModel: coeffs length != hessenberg cols + 1");
    for (Index i = 0; i < coeffs.size(); ++i)
      if (!is_finite(coeffs[i])) throw std::invalid_argument("PolyModel: non-finite coeffs");
  }
};

namespace detail {

// Basis samples at the fitting nodes for the requested orthogonalization
// kind, wide enough for `order` derivative blocks.
template <typename Scalar>
std::pair<MatrixX<Scalar>, MatrixX<Scalar>> basis_at_nodes(const NodeSet<Scalar>& nodes,
                                                           int order, int degree,
                                                           BasisKind kind,
                                                           const ArnoldiOptions& opts) {
  if (kind == BasisKind::HermiteOrthogonalized) {
    auto basis = confluent_arnoldi(nodes, order, degree, opts);
    return {std::move(basis.q), std::move(basis.h)};
  }
  auto basis = confluent_arnoldi(nodes, 0, degree, opts);
  if (order == 0) return {std::move(basis.q), std::move(basis.h)};
  auto ev = confluent_eval_matrix(basis.h, nodes, order);
  return {std::move(ev.w), std::move(basis.h)};
}

template <typename Scalar>
VectorX<Scalar> least_squares(const MatrixX<Scalar>& a, const VectorX<Scalar>& rhs,
                              double* residual) {
  VectorX<Scalar> sol = a.colPivHouseholderQr().solve(rhs);
  if (residual) *residual = (a * sol - rhs).norm();
  return sol;
}

}  // namespace detail

/// Least-squares fit of stacked value/derivative data in the
/// orthogonalized basis. Requires (order+1)*m >= degree+1.
template <typename Scalar>
PolyModel<Scalar> fit_hermite(const HermiteData<Scalar>& data, int degree,
                              BasisKind kind = BasisKind::HermiteOrthogonalized,
                              const ArnoldiOptions& opts = {}) {
  data.validate();
  if ((data.order() + 1) * data.nodes.size() < degree + 1)
    throw std::invalid_argument("fit_hermite: fewer data rows than coefficients");
  auto [q, h] = detail::basis_at_nodes(data.nodes, data.order(), degree, kind, opts);
  PolyModel<Scalar> model;
  model.hessenberg = std::move(h);
  model.order_fit = kind == BasisKind::HermiteOrthogonalized ? data.order() : 0;
  model.basis_kind = kind;
  model.coeffs = detail::least_squares<Scalar>(q, data.stacked(), &model.residual);
  return model;
}

/// Fit function values only (order-0 basis); derivatives of any order stay
/// available through evaluate(), regenerated from the Hessenberg matrix.
template <typename Scalar>
PolyModel<Scalar> fit_values_only(const NodeSet<Scalar>& nodes, const VectorX<Scalar>& values,
                                  int degree, const ArnoldiOptions& opts = {}) {
  if (values.size() != nodes.size())
    throw std::invalid_argument("fit_values_only: values length != node count");
  if (nodes.size() < degree + 1)
    throw std::invalid_argument("fit_values_only: fewer nodes than coefficients");
  auto basis = confluent_arnoldi(nodes, 0, degree, opts);
  PolyModel<Scalar> model;
  model.order_fit = 0;
  model.basis_kind = BasisKind::ValuesOrthogonalized;
  model.coeffs = detail::least_squares<Scalar>(basis.q, values, &model.residual);
  model.hessenberg = std::move(basis.h);
  return model;
}

/// Fit p with p' ~ integrand in the least-squares sense: solve on the
/// derivative block restricted to columns 2..n+1 and prepend d_0 = 0, so
/// p is the antiderivative up to the constant fixed by the leading
/// coefficient. Requires m >= degree.
template <typename Scalar>
PolyModel<Scalar> fit_indefinite_integral(const NodeSet<Scalar>& nodes,
                                          const VectorX<Scalar>& integrand, int degree,
                                          BasisKind kind = BasisKind::HermiteOrthogonalized,
                                          const ArnoldiOptions& opts = {}) {
  if (integrand.size() != nodes.size())
    throw std::invalid_argument("fit_indefinite_integral: integrand length != node count");
  if (nodes.size() < degree)
    throw std::invalid_argument("fit_indefinite_integral: need at least degree nodes");
  auto [q, h] = detail::basis_at_nodes(nodes, 1, degree, kind, opts);
  const Index m = nodes.size();
  PolyModel<Scalar> model;
  model.order_fit = kind == BasisKind::HermiteOrthogonalized ? 1 : 0;
  model.basis_kind = kind;
  model.coeffs = VectorX<Scalar>::Zero(degree + 1);
  if (degree > 0) {
    MatrixX<Scalar> qd = q.block(m, 1, m, degree);
    model.coeffs.tail(degree) =
        detail::least_squares<Scalar>(qd, integrand, &model.residual);
  } else {
    model.residual = integrand.norm();
  }
  model.hessenberg = std::move(h);
  return model;
}

/// Values and derivatives 1..order_out of the fitted polynomial at new
/// nodes, one vector per derivative order.
template <typename Scalar>
std::vector<VectorX<Scalar>> evaluate(const PolyModel<Scalar>& model,
                                      const NodeSet<Scalar>& s, int order_out) {
  model.validate();
  auto ev = confluent_eval_matrix(model.hessenberg, s, order_out);
  VectorX<Scalar> y = ev.w * model.coeffs;
  std::vector<VectorX<Scalar>> blocks(order_out + 1);
  for (int i = 0; i <= order_out; ++i) blocks[i] = y.segment(i * s.size(), s.size());
  return blocks;
}

/// Monomial-coefficient least squares against the naive confluent matrix;
/// the without-orthogonalization baseline for the comparison experiments.
/// Expect rank warnings from the factorization at large degree.
template <typename Scalar>
VectorX<Scalar> naive_fit(const HermiteData<Scalar>& data, int degree) {
  data.validate();
  MatrixX<Scalar> a = naive_confluent_matrix(data.nodes, degree, data.order());
  return detail::least_squares<Scalar>(a, data.stacked(), nullptr);
}

template <typename Scalar>
std::vector<VectorX<Scalar>> naive_evaluate(const VectorX<Scalar>& monomial_coeffs,
                                            const NodeSet<Scalar>& s, int order_out) {
  const int degree = static_cast<int>(monomial_coeffs.size()) - 1;
  MatrixX<Scalar> b = naive_confluent_matrix(s, degree, order_out);
  VectorX<Scalar> y = b * monomial_coeffs;
  std::vector<VectorX<Scalar>> blocks(order_out + 1);
  for (int i = 0; i <= order_out; ++i) blocks[i] = y.segment(i * s.size(), s.size());
  return blocks;
}

}  // namespace cvarn

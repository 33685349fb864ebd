#pragma once

#include <iostream>
#include <limits>

#include "cvarn/types.hpp"

namespace cvarn {

/// Block lower-bidiagonal operator acting on stacked value/derivative
/// vectors: block 0 of the output is X*v0, block i is i*v_{i-1} + X*v_i,
/// where X = diag(nodes). Applied matrix-free; never formed densely.
template <typename Scalar>
struct ConfluentOperator {
  NodeSet<Scalar> base;
  int order = 0;  // highest derivative order carried in the stacked vectors

  Index dim() const { return (order + 1) * base.size(); }
};

template <typename Scalar>
VectorX<Scalar> apply_confluent(const ConfluentOperator<Scalar>& op,
                                const Eigen::Ref<const VectorX<Scalar>>& v) {
  const Index m = op.base.size();
  if (op.order < 0) throw std::invalid_argument("apply_confluent: order must be >= 0");
  if (v.size() != op.dim())
    throw std::invalid_argument("apply_confluent: vector length does not match (order+1)*m");
  const auto& x = op.base.values();
  VectorX<Scalar> out(v.size());
  out.head(m) = x.cwiseProduct(v.head(m));
  for (int i = 1; i <= op.order; ++i)
    out.segment(i * m, m) =
        Scalar(i) * v.segment((i - 1) * m, m) + x.cwiseProduct(v.segment(i * m, m)).eval();
  return out;
}

/// k-th power of the confluent operator applied to the start vector
/// (e; 0; ...; 0); equals column k+1 of the stacked derivative matrices
/// [V; V_(1); ...; V_(order)].
template <typename Scalar>
VectorX<Scalar> krylov_column(const NodeSet<Scalar>& nodes, int order, int k) {
  if (k < 0) throw std::invalid_argument("krylov_column: k must be >= 0");
  ConfluentOperator<Scalar> op{nodes, order};
  VectorX<Scalar> v = VectorX<Scalar>::Zero(op.dim());
  v.head(nodes.size()).setOnes();
  for (int i = 0; i < k; ++i) v = apply_confluent<Scalar>(op, v);
  return v;
}

struct ArnoldiOptions {
  /// Run a second orthogonalization pass per step. The default (off)
  /// follows the published single-pass recursion.
  bool reorthogonalize = false;
  /// Breakdown when h(k+1,k) <= breakdown_factor * eps * (largest scaled
  /// column norm seen so far).
  double breakdown_factor = 1e3;
  /// Print a warning for duplicate nodes with order 0 (breakdown is then
  /// certain once the step count reaches the number of distinct nodes).
  bool warn_duplicates = true;
};

/// Orthonormal basis of the confluent Krylov subspace together with the
/// Hessenberg matrix of the orthogonalization recursion.
///
/// q has (order+1)*m rows and degree+1 columns, orthonormal in the scaled
/// inner product <u,v> = u^H v / m; h is (degree+1) x degree upper
/// Hessenberg with positive subdiagonal, satisfying M q_minus = q h for
/// the confluent operator M.
template <typename Scalar>
struct ArnoldiBasis {
  MatrixX<Scalar> q;
  MatrixX<Scalar> h;
  int order = 0;
  Index m = 0;  // node count; q rows = (order+1)*m

  int degree() const { return static_cast<int>(q.cols()) - 1; }
  /// Rows of q holding the i-th derivative samples.
  auto block(int i) const { return q.middleRows(i * m, m); }
};

/// Arnoldi orthogonalization of the confluent Krylov columns, following
/// the published recursion: inner products are scaled by 1/m and the
/// normalization by 1/sqrt(m), so the limit basis polynomials are
/// independent of the node count.
template <typename Scalar>
ArnoldiBasis<Scalar> confluent_arnoldi(const NodeSet<Scalar>& nodes, int order, int degree,
                                       const ArnoldiOptions& opts = {}) {
  if (order < 0) throw std::invalid_argument("confluent_arnoldi: order must be >= 0");
  if (degree < 0) throw std::invalid_argument("confluent_arnoldi: degree must be >= 0");
  const Index m = nodes.size();
  const Index rows = (order + 1) * m;
  if (rows < degree + 1)
    throw std::invalid_argument(
        "confluent_arnoldi: (order+1)*m < degree+1, breakdown is certain");
  if (opts.warn_duplicates && order == 0 && nodes.has_duplicates())
    std::cerr << "confluent_arnoldi: duplicate nodes with order 0 guarantee breakdown; "
                 "use order >= 1 for data at coincident points\n";

  const double scale = std::sqrt(static_cast<double>(m));
  ConfluentOperator<Scalar> op{nodes, order};

  ArnoldiBasis<Scalar> basis;
  basis.order = order;
  basis.m = m;
  basis.q = MatrixX<Scalar>::Zero(rows, degree + 1);
  basis.h = MatrixX<Scalar>::Zero(degree + 1, degree);
  basis.q.col(0).head(m).setOnes();

  double max_col_norm = 1.0;  // the start column has scaled norm 1
  for (int k = 0; k < degree; ++k) {
    VectorX<Scalar> q = apply_confluent<Scalar>(op, basis.q.col(k));
    max_col_norm = std::max(max_col_norm, q.norm() / scale);
    for (int j = 0; j <= k; ++j) {
      const Scalar hjk = basis.q.col(j).dot(q) / Scalar(static_cast<double>(m));
      basis.h(j, k) = hjk;
      q -= hjk * basis.q.col(j);
    }
    if (opts.reorthogonalize) {
      for (int j = 0; j <= k; ++j) {
        const Scalar c = basis.q.col(j).dot(q) / Scalar(static_cast<double>(m));
        basis.h(j, k) += c;
        q -= c * basis.q.col(j);
      }
    }
    const double hnext = q.norm() / scale;
    if (!(hnext > opts.breakdown_factor * std::numeric_limits<double>::epsilon() *
                      max_col_norm))
      throw BreakdownError(k + 1, "confluent_arnoldi: breakdown at step " +
                                      std::to_string(k + 1) +
                                      " (subdiagonal entry " + std::to_string(hnext) + ")");
    basis.h(k + 1, k) = Scalar(hnext);
    basis.q.col(k + 1) = q / Scalar(hnext);
  }
  return basis;
}

/// Values and derivatives of the basis polynomials encoded by a Hessenberg
/// matrix, sampled at evaluation nodes. First column is (e; 0; ...; 0);
/// the remaining columns follow the same recursion as the fitting basis,
/// so S w_minus = w h for the confluent operator S at the eval nodes.
template <typename Scalar>
struct EvalMatrix {
  MatrixX<Scalar> w;
  int order = 0;
  Index count = 0;  // evaluation node count; w rows = (order+1)*count

  int degree() const { return static_cast<int>(w.cols()) - 1; }
  auto block(int i) const { return w.middleRows(i * count, count); }
};

/// Rebuild the basis recursion at new nodes from a Hessenberg matrix. The
/// matrix may come from an orthogonalization run of any order; the
/// requested order here only controls how many derivative blocks are
/// generated.
template <typename Scalar>
EvalMatrix<Scalar> confluent_eval_matrix(const MatrixX<Scalar>& h,
                                         const NodeSet<Scalar>& eval_nodes, int order) {
  if (order < 0) throw std::invalid_argument("confluent_eval_matrix: order must be >= 0");
  const int degree = static_cast<int>(h.cols());
  if (h.rows() != degree + 1)
    throw std::invalid_argument("confluent_eval_matrix: h must be (n+1) x n");
  const Index count = eval_nodes.size();
  ConfluentOperator<Scalar> op{eval_nodes, order};

  EvalMatrix<Scalar> ev;
  ev.order = order;
  ev.count = count;
  ev.w = MatrixX<Scalar>::Zero((order + 1) * count, degree + 1);
  ev.w.col(0).head(count).setOnes();
  for (int k = 0; k < degree; ++k) {
    VectorX<Scalar> w = apply_confluent<Scalar>(op, ev.w.col(k));
    for (int j = 0; j <= k; ++j) w -= h(j, k) * ev.w.col(j);
    const Scalar hnext = h(k + 1, k);
    if (!is_finite(hnext) || hnext == Scalar(0))
      throw BreakdownError(k + 1,
                           "confluent_eval_matrix: zero subdiagonal at step " +
                               std::to_string(k + 1));
    ev.w.col(k + 1) = w / hnext;
  }
  return ev;
}

/// Row-stacked [V; V_(1); ...; V_(order)] with V_{jk} = x_j^k and the
/// derivative rows obtained by repeated differentiation of the monomials.
/// The ill-conditioned baseline the orthogonalized basis is compared to.
template <typename Scalar>
MatrixX<Scalar> naive_confluent_matrix(const NodeSet<Scalar>& nodes, int degree, int order) {
  if (degree < 0 || order < 0)
    throw std::invalid_argument("naive_confluent_matrix: degree and order must be >= 0");
  const Index m = nodes.size();
  const auto& x = nodes.values();
  MatrixX<Scalar> a((order + 1) * m, degree + 1);
  a.topRows(m).col(0).setOnes();
  for (int k = 1; k <= degree; ++k)
    a.topRows(m).col(k) = a.topRows(m).col(k - 1).cwiseProduct(x);
  for (int l = 1; l <= order; ++l) {
    auto rows = a.middleRows(l * m, m);
    rows.setZero();
    for (int k = l; k <= degree; ++k) {
      double ff = 1.0;  // falling factorial k (k-1) ... (k-l+1)
      for (int i = 0; i < l; ++i) ff *= k - i;
      if (k - l == 0)
        rows.col(k).setConstant(Scalar(ff));
      else
        rows.col(k) = Scalar(ff) * a.topRows(m).col(k - l);
    }
  }
  return a;
}

/// Derivatives of the basis polynomials from the differentiated
/// three-term-style recursion
///   p'_{k+1}(x) = (p_k(x) + x p'_k(x) - sum_j p'_j(x) h(j,k)) / h(k+1,k),
/// using a Hessenberg matrix from a values-only (order 0) run. Exists to
/// certify that this route and the confluent evaluation recursion of
/// order 1 produce the same derivative matrix.
template <typename Scalar>
MatrixX<Scalar> derivative_recursion_matrix(const MatrixX<Scalar>& h,
                                            const NodeSet<Scalar>& eval_nodes) {
  const int degree = static_cast<int>(h.cols());
  if (h.rows() != degree + 1)
    throw std::invalid_argument("derivative_recursion_matrix: h must be (n+1) x n");
  const Index m = eval_nodes.size();
  const auto& x = eval_nodes.values();
  MatrixX<Scalar> p = MatrixX<Scalar>::Zero(m, degree + 1);   // values
  MatrixX<Scalar> dp = MatrixX<Scalar>::Zero(m, degree + 1);  // derivatives
  p.col(0).setOnes();
  for (int k = 0; k < degree; ++k) {
    VectorX<Scalar> v = x.cwiseProduct(p.col(k));
    VectorX<Scalar> dv = p.col(k) + x.cwiseProduct(dp.col(k)).eval();
    for (int j = 0; j <= k; ++j) {
      v -= h(j, k) * p.col(j);
      dv -= h(j, k) * dp.col(j);
    }
    const Scalar hnext = h(k + 1, k);
    if (!is_finite(hnext) || hnext == Scalar(0))
      throw BreakdownError(k + 1,
                           "derivative_recursion_matrix: zero subdiagonal at step " +
                               std::to_string(k + 1));
    p.col(k + 1) = v / hnext;
    dp.col(k + 1) = dv / hnext;
  }
  return dp;
}

}  // namespace cvarn

#pragma once

#include "cvarn/types.hpp"

namespace cvarn {

/// Rectangular generalized eigenvalue problem A beta = lambda B beta with
/// tall real A, B, solved by projecting onto a square pencil.
struct RectGEVP {
  enum class Reduction { Qr, Svd };

  Eigen::MatrixXd A;
  Eigen::MatrixXd B;
  Reduction reduction = Reduction::Qr;
  int keep = -1;  // SVD projection size; -1 means the column count

  void validate() const {
    if (A.rows() != B.rows() || A.cols() != B.cols())
      throw std::invalid_argument("RectGEVP: A and B must share their shape");
    if (A.rows() < A.cols())
      throw std::invalid_argument("RectGEVP: need at least as many rows as columns");
  }
};

/// Eigenvalues in ascending order with real coefficient eigenvectors
/// (columns) and the rectangular residuals ||A beta - lambda B beta|| / ||beta||.
struct EigPairs {
  Eigen::VectorXd lambdas;
  Eigen::MatrixXd vectors;
  Eigen::VectorXd residuals;

  Index count() const { return lambdas.size(); }
};

/// Filtering of the pairs returned by the projected square solve. The
/// continuous problems behind these pencils are self-adjoint, so
/// eigenvalues with a genuine imaginary part are discarded, as are pairs
/// whose rectangular residual exceeds
///   residual_factor * (||A||_F + |lambda| ||B||_F) * ||beta||.
/// The default keeps only pairs that solve the rectangular problem to
/// near machine precision; pass a large factor to keep every discrete
/// pair and judge convergence from the reported residuals instead.
struct EigOptions {
  double max_magnitude = 1e12;
  double imag_tol = 1e-6;
  double residual_factor = 1e-8;
};

/// Projection by economic QR of B: with B = Q R, solve the square pencil
/// (Q^T A, R). Requires B of full column rank; a rank-deficient B raises
/// an error pointing to rect_eig_svd.
EigPairs rect_eig_qr(const RectGEVP& problem, const EigOptions& opts = {});

/// Projection onto the leading `keep` left singular vectors U of the
/// stacked matrix [A, B]: solve (U^T A, U^T B). Handles rank-deficient B.
/// `keep` defaults to the column count (problem.keep, or the width of A),
/// which is also required for the projected pencil to be square.
EigPairs rect_eig_svd(const RectGEVP& problem, int keep = -1, const EigOptions& opts = {});

/// Dispatch on problem.reduction.
EigPairs solve_rect_gevp(const RectGEVP& problem, const EigOptions& opts = {});

}  // namespace cvarn

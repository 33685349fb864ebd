#pragma once

#include "cvarn/arnoldi.hpp"
#include "cvarn/boundary.hpp"
#include "cvarn/fitting.hpp"
#include "cvarn/rect_eig.hpp"

namespace cvarn {

/// Complex polynomial basis sampled on a boundary: values and z-derivatives
/// of the basis functions at the curve points, plus the Hessenberg matrix
/// that regenerates them elsewhere.
struct BoundaryBasis {
  Eigen::MatrixXcd values;       // m x (n+1)
  Eigen::MatrixXcd derivatives;  // m x (n+1)
  Eigen::MatrixXcd hessenberg;
  BasisKind kind = BasisKind::HermiteOrthogonalized;

  int degree() const { return static_cast<int>(values.cols()) - 1; }
};

BoundaryBasis boundary_basis(const BoundaryCurve& curve, int degree,
                             BasisKind kind = BasisKind::HermiteOrthogonalized,
                             const ArnoldiOptions& opts = {});

/// Pencil of the discrete eigenvalue condition d_nu u = lambda u on the
/// whole boundary, in the unknown beta = (a; -b_hat) for c = a + i b,
/// b_0 = 0:
///   A = [Re(diag(nu) Q1) | Im(diag(nu) Q1) cols 2..n+1]
///   B = [Re(Q0)          | Im(Q0)          cols 2..n+1]
/// so that B beta holds the boundary values of u.
RectGEVP steklov_assemble(const BoundaryBasis& basis, const BoundaryCurve& curve);
RectGEVP steklov_assemble(const ArnoldiBasis<Complex>& basis, const BoundaryCurve& curve);

/// Pencil of d_nu u = lambda (mask u): rows of B away from the masked part
/// of the boundary are zeroed, which makes B rank deficient, so the SVD
/// reduction with keep = 2n+1 is preset.
RectGEVP sloshing_assemble(const BoundaryBasis& basis, const BoundaryCurve& boundary,
                           const Eigen::Array<bool, Eigen::Dynamic, 1>& mask);
RectGEVP sloshing_assemble(const ArnoldiBasis<Complex>& basis, const BoundaryCurve& boundary,
                           const Eigen::Array<bool, Eigen::Dynamic, 1>& mask);

/// Complex basis coefficients c = a + i b recovered from beta = (a; -b_hat).
Eigen::VectorXcd steklov_coefficients(const Eigen::VectorXd& beta);

/// Boundary trace Re(W0 c) of the eigenfunction at arbitrary points, using
/// the Hessenberg matrix of the basis the pencil was assembled from.
Eigen::VectorXd eigenfunction_trace(const Eigen::MatrixXcd& hessenberg,
                                    const Eigen::VectorXcd& points,
                                    const Eigen::VectorXd& beta);

/// Scale to unit max norm with the first extremum positive.
Eigen::VectorXd normalize_trace(Eigen::VectorXd p);

}  // namespace cvarn

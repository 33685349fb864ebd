#pragma once

#include "cvarn/fitting.hpp"

namespace cvarn {

/// Truncated Fourier series on [-2,2] fitted to data on [-1,1] through the
/// substitution z = e^{i pi x / 2}: f(x) ~ Re sum_k c_k z^k with
/// c_k = a_k + i b_k, b_0 = 0. Derivatives are carried in the scaled form
/// -(2/pi) f'(x) = Im sum_k k c_k z^k; no interface applies the scaling
/// silently.
struct FourierModel {
  Eigen::VectorXd a;
  Eigen::VectorXd b;
  Eigen::MatrixXcd hessenberg;
  BasisKind basis_kind = BasisKind::HermiteOrthogonalized;
  double residual = 0.0;

  int degree() const { return static_cast<int>(a.size()) - 1; }
  Eigen::VectorXcd coeffs() const { return a + Complex(0, 1) * b; }
};

/// Fit function values f(x_j) and scaled derivatives -(2/pi) f'(x_j)
/// simultaneously, solving the real block system that splits the complex
/// coefficients into (a, b).
FourierModel fourier_fit_hermite(const Eigen::VectorXd& x, const Eigen::VectorXd& f,
                                 const Eigen::VectorXd& fp_scaled, int degree,
                                 BasisKind kind = BasisKind::HermiteOrthogonalized,
                                 const ArnoldiOptions& opts = {});

struct FourierValues {
  Eigen::VectorXd values;
  Eigen::VectorXd scaled_derivatives;  // -(2/pi) p'(s)
};

FourierValues fourier_eval(const FourierModel& model, const Eigen::VectorXd& s);

}  // namespace cvarn

#pragma once

#include <numbers>

#include "cvarn/types.hpp"

namespace cvarn {

/// m Chebyshev extreme points of [-1,1], ascending:
/// x_j = cos((m-j) pi / (m-1)), j = 1..m. Requires m >= 2.
inline Eigen::VectorXd chebyshev_points(Index m) {
  if (m < 2) throw std::invalid_argument("chebyshev_points: m >= 2 required");
  Eigen::VectorXd x(m);
  for (Index j = 1; j <= m; ++j)
    x[j - 1] = std::cos(static_cast<double>(m - j) * std::numbers::pi /
                        static_cast<double>(m - 1));
  return x;
}

inline Eigen::VectorXd chebyshev_points(Index m, double a, double b) {
  return (0.5 * (a + b) + 0.5 * (b - a) * chebyshev_points(m).array()).matrix();
}

/// m Chebyshev points of the first kind on (a,b), ascending; the endpoints
/// are never included.
inline Eigen::VectorXd chebyshev_first_kind_points(Index m, double a = -1.0,
                                                   double b = 1.0) {
  if (m < 1) throw std::invalid_argument("chebyshev_first_kind_points: m >= 1 required");
  Eigen::VectorXd x(m);
  for (Index j = 1; j <= m; ++j)
    x[m - j] = 0.5 * (a + b) +
               0.5 * (b - a) * std::cos((2.0 * j - 1.0) * std::numbers::pi / (2.0 * m));
  return x;
}

inline Eigen::VectorXd equispaced_points(Index m, double a, double b) {
  if (m < 1) throw std::invalid_argument("equispaced_points: m >= 1 required");
  if (m == 1) return Eigen::VectorXd::Constant(1, 0.5 * (a + b));
  return Eigen::VectorXd::LinSpaced(m, a, b);
}

}  // namespace cvarn

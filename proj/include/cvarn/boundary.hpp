#pragma once

#include <functional>

#include "cvarn/types.hpp"

namespace cvarn {

/// Sampled closed boundary curve: points z(t_j), tangents z'(t_j) and unit
/// outward normals nu = nu1 + i nu2. Curves are oriented counterclockwise
/// so that nu = -i z'/|z'| points outward.
struct BoundaryCurve {
  Eigen::VectorXd t;
  Eigen::VectorXcd z;
  Eigen::VectorXcd dz;
  Eigen::VectorXcd normal;

  Index size() const { return z.size(); }
  NodeSet<Complex> nodes() const { return NodeSet<Complex>(z); }
  void validate() const;
};

BoundaryCurve sample_curve(const std::function<Complex(double)>& z,
                           const std::function<Complex(double)>& dz,
                           const Eigen::VectorXd& t);

/// Built-in curves, sampled at m equispaced parameters on [0, 2pi).
BoundaryCurve unit_circle(Index m);
BoundaryCurve ellipse_curve(Index m, double rx = 1.0, double ry = 0.2);
/// The wavy blob r(t) = 0.7 + 0.25 cos(4t-2) + 0.05 cos(8t-4), z = r e^{it}.
BoundaryCurve blob_curve(Index m);

/// Boundary of the unit square (0,1)^2 sampled side by side (bottom,
/// right, top, left, counterclockwise) with first-kind Chebyshev points
/// per side, so corners are never sampled. `side` holds 0..3 per sample.
struct SquareBoundary {
  BoundaryCurve curve;
  Eigen::ArrayXi side;

  Eigen::Array<bool, Eigen::Dynamic, 1> top_mask() const { return side == 2; }
};

SquareBoundary unit_square(Index per_side);

}  // namespace cvarn

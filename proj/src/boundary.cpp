#include "cvarn/boundary.hpp"

#include <numbers>

#include "cvarn/grids.hpp"

namespace cvarn {

void BoundaryCurve::validate() const {
  if (z.size() < 1) throw std::invalid_argument("BoundaryCurve: no samples");
  if (dz.size() != z.size() || normal.size() != z.size() || t.size() != z.size())
    throw std::invalid_argument("BoundaryCurve: sample arrays must share their length");
  for (Index j = 0; j < z.size(); ++j) {
    if (dz[j] == Complex(0, 0))
      throw std::invalid_argument("BoundaryCurve: vanishing tangent at a sample");
    if (std::abs(std::abs(normal[j]) - 1.0) > 1e-14)
      throw std::invalid_argument("BoundaryCurve: normals must have unit length");
  }
}

BoundaryCurve sample_curve(const std::function<Complex(double)>& z,
                           const std::function<Complex(double)>& dz,
                           const Eigen::VectorXd& t) {
  BoundaryCurve curve;
  curve.t = t;
  curve.z.resize(t.size());
  curve.dz.resize(t.size());
  curve.normal.resize(t.size());
  for (Index j = 0; j < t.size(); ++j) {
    curve.z[j] = z(t[j]);
    curve.dz[j] = dz(t[j]);
    curve.normal[j] = Complex(0, -1) * curve.dz[j] / std::abs(curve.dz[j]);
  }
  curve.validate();
  return curve;
}

namespace {

Eigen::VectorXd circle_angles(Index m) {
  Eigen::VectorXd t(m);
  for (Index j = 0; j < m; ++j)
    t[j] = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
  return t;
}

}  // namespace

BoundaryCurve unit_circle(Index m) {
  return sample_curve([](double t) { return std::polar(1.0, t); },
                      [](double t) { return Complex(0, 1) * std::polar(1.0, t); },
                      circle_angles(m));
}

BoundaryCurve ellipse_curve(Index m, double rx, double ry) {
  return sample_curve(
      [=](double t) { return Complex(rx * std::cos(t), ry * std::sin(t)); },
      [=](double t) { return Complex(-rx * std::sin(t), ry * std::cos(t)); },
      circle_angles(m));
}

BoundaryCurve blob_curve(Index m) {
  auto r = [](double t) { return 0.7 + 0.25 * std::cos(4 * t - 2) + 0.05 * std::cos(8 * t - 4); };
  auto rp = [](double t) { return -std::sin(4 * t - 2) - 0.4 * std::sin(8 * t - 4); };
  return sample_curve(
      [=](double t) { return std::polar(1.0, t) * r(t); },
      [=](double t) { return std::polar(1.0, t) * Complex(rp(t), r(t)); },
      circle_angles(m));
}

SquareBoundary unit_square(Index per_side) {
  const Eigen::VectorXd s = chebyshev_first_kind_points(per_side, 0.0, 1.0);
  const Index m = 4 * per_side;
  SquareBoundary sq;
  sq.curve.t.resize(m);
  sq.curve.z.resize(m);
  sq.curve.dz.resize(m);
  sq.curve.normal.resize(m);
  sq.side.resize(m);
  // counterclockwise, arc parameter t in [0,4): z(t) walks bottom, right,
  // top, left with |z'| = 1 on each side
  const Complex tangents[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Complex corners[4] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  for (int side = 0; side < 4; ++side) {
    for (Index j = 0; j < per_side; ++j) {
      const Index idx = side * per_side + j;
      sq.curve.t[idx] = side + s[j];
      sq.curve.z[idx] = corners[side] + s[j] * tangents[side];
      sq.curve.dz[idx] = tangents[side];
      sq.curve.normal[idx] = Complex(0, -1) * tangents[side];
      sq.side[idx] = side;
    }
  }
  sq.curve.validate();
  return sq;
}

}  // namespace cvarn

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "cvarn/fourier.hpp"
#include "cvarn/grids.hpp"
#include "cvarn/harmonic.hpp"

using namespace cvarn;

namespace {

Eigen::VectorXd curve_data(const BoundaryCurve& curve, double (*f)(const Complex&)) {
  Eigen::VectorXd out(curve.size());
  for (Index j = 0; j < curve.size(); ++j) out[j] = f(curve.z[j]);
  return out;
}

}  // namespace

TEST_CASE("built-in curves carry unit outward normals orthogonal to the tangent") {
  for (const BoundaryCurve& curve :
       {unit_circle(64), ellipse_curve(80), blob_curve(100), unit_square(25).curve}) {
    for (Index j = 0; j < curve.size(); ++j) {
      CHECK(std::abs(std::abs(curve.normal[j]) - 1.0) <= 1e-14);
      const Complex tangent = curve.dz[j] / std::abs(curve.dz[j]);
      // tangent . normal as plane vectors
      const double dot = (std::conj(tangent) * curve.normal[j]).real();
      CHECK(std::abs(dot) <= 1e-13);
    }
  }
  // circle: the normal is the point itself
  const BoundaryCurve circle = unit_circle(32);
  CHECK((circle.normal - circle.z).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("square boundary masks the top side") {
  const SquareBoundary sq = unit_square(10);
  CHECK(sq.curve.size() == 40);
  const auto mask = sq.top_mask();
  CHECK(mask.count() == 10);
  for (Index j = 0; j < sq.curve.size(); ++j)
    if (mask[j]) {
      CHECK(sq.curve.z[j].imag() == doctest::Approx(1.0));
      CHECK(sq.curve.normal[j] == Complex(0, 1));
    }
}

TEST_CASE("harmonic fit recovers a pure mode in the values basis") {
  const BoundaryCurve circle = unit_circle(40);
  const auto model = harmonic_fit(circle, circle.z.real(), 1,
                                  BasisKind::ValuesOrthogonalized);
  // on the full circle the order-0 basis is the monomials themselves
  CHECK(model.a(0) == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(std::abs(model.a(1) - 1.0) <= 1e-13);
  CHECK(model.b.cwiseAbs().maxCoeff() <= 1e-13);
  CHECK(model.b(0) == 0.0);
}

TEST_CASE("harmonic fit of a constant") {
  const BoundaryCurve circle = unit_circle(30);
  const auto model = harmonic_fit(circle, Eigen::VectorXd::Ones(30), 3);
  CHECK(model.a(0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(model.a.tail(3).cwiseAbs().maxCoeff() <= 1e-13);
  CHECK(model.b.cwiseAbs().maxCoeff() <= 1e-13);
  CHECK(model.b(0) == 0.0);
  CHECK(dtn_evaluate(model, circle).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("normal derivative of Re z on the unit circle is cos(theta)") {
  const BoundaryCurve circle = unit_circle(50);
  for (BasisKind kind :
       {BasisKind::HermiteOrthogonalized, BasisKind::ValuesOrthogonalized}) {
    const auto model = harmonic_fit(circle, circle.z.real(), 4, kind);
    const Eigen::VectorXd dtn = dtn_evaluate(model, circle);
    CHECK((dtn - circle.z.real()).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("polynomial boundary data reproduces the closed-form normal derivative") {
  // h(z) of degree 5 with fixed coefficients; u = Re h on the blob
  const Eigen::VectorXcd coeff = [] {
    Eigen::VectorXcd c(6);
    c << Complex(0.3, 0.0), Complex(-1.1, 0.4), Complex(0.2, -0.8), Complex(0.05, 0.3),
        Complex(-0.4, 0.1), Complex(0.15, -0.2);
    return c;
  }();
  auto h = [&](const Complex& z) {
    Complex acc = 0;
    for (int k = 5; k >= 0; --k) acc = acc * z + coeff[k];
    return acc;
  };
  auto hp = [&](const Complex& z) {
    Complex acc = 0;
    for (int k = 5; k >= 1; --k) acc = acc * z + double(k) * coeff[k];
    return acc;
  };
  const int n = 8;
  const BoundaryCurve curve = blob_curve(10 * n);
  Eigen::VectorXd f(curve.size());
  for (Index j = 0; j < curve.size(); ++j) f[j] = h(curve.z[j]).real();
  const BoundaryCurve fine = blob_curve(333);
  Eigen::VectorXd want(fine.size());
  for (Index j = 0; j < fine.size(); ++j)
    want[j] = (fine.normal[j] * hp(fine.z[j])).real();
  for (BasisKind kind :
       {BasisKind::HermiteOrthogonalized, BasisKind::ValuesOrthogonalized}) {
    const auto model = harmonic_fit(curve, f, n, kind);
    CHECK((dtn_evaluate(model, fine) - want).cwiseAbs().maxCoeff() <= 1e-11);
    Eigen::VectorXd u_fine(fine.size());
    for (Index j = 0; j < fine.size(); ++j) u_fine[j] = h(fine.z[j]).real();
    CHECK((harmonic_eval(model, fine.z) - u_fine).cwiseAbs().maxCoeff() <= 1e-11);
    CHECK(model.b(0) == 0.0);
  }
}

TEST_CASE("constant Fourier data gives the constant mode") {
  const Eigen::VectorXd x = chebyshev_points(40);
  const auto model = fourier_fit_hermite(x, Eigen::VectorXd::Ones(40),
                                         Eigen::VectorXd::Zero(40), 0);
  CHECK(model.a.size() == 1);
  CHECK(model.a(0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(model.b(0) == 0.0);
  const auto values = fourier_eval(model, equispaced_points(17, -1.0, 1.0));
  CHECK((values.values.array() - 1.0).abs().maxCoeff() <= 1e-13);
  CHECK(values.scaled_derivatives.cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE("a single Fourier mode is recovered exactly") {
  const Eigen::VectorXd x = chebyshev_points(60);
  const Eigen::VectorXd f = (std::numbers::pi / 2 * x.array()).cos();
  const Eigen::VectorXd fp = (std::numbers::pi / 2 * x.array()).sin();
  const auto model = fourier_fit_hermite(x, f, fp, 1);
  CHECK(model.b.cwiseAbs().maxCoeff() <= 1e-13);
  // map the two basis coefficients back to mode coefficients through the
  // recursion: q0 = 1, q1(z) = (z - h00)/h10
  const Complex c1 = model.coeffs()(1) / model.hessenberg(1, 0);
  const Complex c0 = model.coeffs()(0) - c1 * model.hessenberg(0, 0);
  CHECK(std::abs(c0) <= 1e-13);
  CHECK(std::abs(c1 - 1.0) <= 1e-13);

  const Eigen::VectorXd s = equispaced_points(101, -1.0, 1.0);
  const auto values = fourier_eval(model, s);
  const Eigen::VectorXd want = (std::numbers::pi / 2 * s.array()).cos();
  const Eigen::VectorXd want_p = (std::numbers::pi / 2 * s.array()).sin();
  CHECK((values.values - want).cwiseAbs().maxCoeff() <= 1e-13);
  CHECK((values.scaled_derivatives - want_p).cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE("Fourier extension error decreases with the degree") {
  const Eigen::VectorXd x = chebyshev_points(200);
  auto f = [](double t) { return 1.0 / (10.0 - 9.0 * t); };
  auto fps = [](double t) {
    const double d = 10.0 - 9.0 * t;
    return -(2.0 / std::numbers::pi) * 9.0 / (d * d);
  };
  const Eigen::VectorXd s = equispaced_points(400, -1.0, 1.0);
  double prev_f = 1e100, prev_fp = 1e100;
  for (int n : {10, 20, 40}) {
    const auto model = fourier_fit_hermite(x, x.unaryExpr(f), x.unaryExpr(fps), n);
    CHECK(model.b(0) == 0.0);
    const auto values = fourier_eval(model, s);
    const double ef = (values.values - s.unaryExpr(f)).cwiseAbs().maxCoeff();
    const double efp =
        (values.scaled_derivatives - s.unaryExpr(fps)).cwiseAbs().maxCoeff();
    CHECK(ef < prev_f);
    CHECK(efp < prev_fp);
    prev_f = ef;
    prev_fp = efp;
  }
  CHECK(prev_f <= 1e-8);
}

TEST_CASE("fit at the nodes stays within the least-squares residual") {
  const Eigen::VectorXd x = chebyshev_points(80);
  auto f = [](double t) { return std::exp(t) / (2.0 + t); };
  auto fp = [](double t) {
    return std::exp(t) * (1.0 + t) / ((2.0 + t) * (2.0 + t));
  };
  Eigen::VectorXd fps(x.size());
  for (Index i = 0; i < x.size(); ++i) fps[i] = -(2.0 / std::numbers::pi) * fp(x[i]);
  const auto model = fourier_fit_hermite(x, x.unaryExpr(f), fps, 12);
  const auto values = fourier_eval(model, x);
  const double res = std::sqrt((values.values - x.unaryExpr(f)).squaredNorm() +
                               (values.scaled_derivatives - fps).squaredNorm());
  CHECK(res <= model.residual * (1.0 + 1e-8) + 1e-13);
}

TEST_CASE("data length mismatches are rejected") {
  const Eigen::VectorXd x = chebyshev_points(10);
  CHECK_THROWS_AS(
      fourier_fit_hermite(x, Eigen::VectorXd::Zero(9), Eigen::VectorXd::Zero(10), 2),
      std::invalid_argument);
  const BoundaryCurve circle = unit_circle(12);
  CHECK_THROWS_AS(harmonic_fit(circle, Eigen::VectorXd::Zero(11), 2),
                  std::invalid_argument);
}

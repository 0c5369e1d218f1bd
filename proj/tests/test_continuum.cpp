#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "hardylab/continuum.hpp"
#include "hardylab/error.hpp"

using namespace hardylab;

TEST_CASE("hyperbolic weight") {
  CHECK(weight_hyperbolic(4, 1.0) == doctest::Approx(3.043046245724733).epsilon(1e-14));
  for (int d = 3; d <= 8; ++d) CHECK(weight_hyperbolic(d, 50.0) == doctest::Approx((d - 1) * (d - 1) / 4.0).epsilon(1e-3));
}

TEST_CASE("model, harmonic and hyperbolic formulas coincide on sinh models") {
  for (int d = 3; d <= 8; ++d) {
    const DensitySpec sinh_model = model_density([](long double r) { return std::sinh(r); },
                                                 [](long double r) { return std::cosh(r); },
                                                 [](long double r) { return std::sinh(r); }, d, "sinh");
    const DensitySpec hyp = hyperbolic_density(d);
    for (double r = 0.1; r <= 10.0; r += 0.05) {
      const double w = weight_hyperbolic(d, r);
      CHECK(std::fabs(weight_model(sinh_model, d, r) - w) <= 1e-12 * std::max(1.0, w));
      CHECK(std::fabs(weight_harmonic(hyp, r) - w) <= 1e-12 * std::max(1.0, w));
    }
    CHECK(check_model_optimality_condition(sinh_model, d, 1.0));
  }
}

TEST_CASE("Damek-Ricci closed form") {
  CHECK(weight_damek_ricci(2, 1, 1.0) == doctest::Approx(1.9896581789662147).epsilon(1e-14));
  for (auto [p, q] : {std::pair{2, 1}, {3, 1}, {2, 2}, {4, 1}}) {
    const DensitySpec s = damek_ricci_density(p, q);
    for (double r = 0.1; r <= 10.0; r += 0.05)
      CHECK(std::fabs(weight_damek_ricci(p, q, r) - weight_harmonic(s, r)) <= 1e-10);
    CHECK(weight_damek_ricci(p, q, 50.0) == doctest::Approx((p + 2.0 * q) * (p + 2.0 * q) / 16).epsilon(1e-3));
  }
  // (p, q) = (0, d−1) is hyperbolic space
  for (double r : {0.3, 1.0, 4.0}) CHECK(weight_damek_ricci(0, 3, r) == doctest::Approx(weight_hyperbolic(4, r)).epsilon(1e-13));
  CHECK_THROWS_AS(weight_damek_ricci(1, 1, 1.0), Error);
}

TEST_CASE("Euclidean weight") {
  const DensitySpec e = euclidean_density(3);
  // 1/(4r²) + ¼(2(d−1)(d−2) − (d−1)²)/r² = (d−2)²/(4r²)
  CHECK(weight_harmonic(e, 2.0) == doctest::Approx(1.0 / 16).epsilon(1e-14));
}

TEST_CASE("residuals converge at second order") {
  const DensitySpec s = damek_ricci_density(2, 1);
  auto w = [](long double r) { return weight_damek_ricci_ld(2, 1, r); };
  for (Branch b : {Branch::sqrt_u, Branch::sqrt_u_log}) {
    const double a = harmonicity_residual(s, w, 0.5, 5.0, 1e-3, b);
    const double c = harmonicity_residual(s, w, 0.5, 5.0, 5e-4, b);
    CHECK(a / c == doctest::Approx(4.0).epsilon(0.05));
  }
  const DensitySpec e = euclidean_density(4);
  auto we = [&](long double r) { return weight_harmonic_ld(e, r); };
  const double a = harmonicity_residual(e, we, 0.5, 5.0, 1e-3, Branch::sqrt_u);
  const double c = harmonicity_residual(e, we, 0.5, 5.0, 5e-4, Branch::sqrt_u);
  CHECK(a / c == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("stencil must stay away from the pole") {
  const DensitySpec s = hyperbolic_density(3);
  auto w = [](long double r) { return weight_hyperbolic_ld(3, r); };
  try {
    (void)harmonicity_residual(s, w, 1e-4, 1.0, 1e-3, Branch::sqrt_u);
    FAIL("expected singularity-at-origin");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::singularity_at_origin);
  }
}

TEST_CASE("numeric and tabulated densities") {
  const DensitySpec n = numeric_density([](long double r) { return std::pow(std::sinh(r), 3.0L); }, "sinh^3");
  CHECK_FALSE(n.analytic_derivatives);
  CHECK(weight_harmonic(n, 1.5) == doctest::Approx(weight_hyperbolic(4, 1.5)).epsilon(1e-6));

  const std::string path = "hardylab_density_test.txt";
  {
    std::ofstream f(path);
    f.precision(17);
    for (int i = 0; i <= 2000; ++i) {
      const double r = 0.2 + 0.005 * i;
      f << r << ' ' << std::pow(std::sinh(r), 2.0) << '\n';
    }
  }
  const DensitySpec t = table_density(path);
  CHECK(weight_harmonic(t, 3.0) == doctest::Approx(weight_hyperbolic(3, 3.0)).epsilon(1e-4));
  std::remove(path.c_str());
  CHECK_THROWS_AS(table_density("no/such/file"), Error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "generators.hpp"
#include "lnewton/error.hpp"
#include "lnewton/extremal.hpp"
#include "lnewton/variational.hpp"

using namespace lnewton;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an lnewton::Error");
  return ErrorCode::DomainError;
}

std::vector<double> radii(double lo, double hi, int n) {
  std::vector<double> r(n);
  for (int k = 0; k < n; ++k) r[k] = lo + (hi - lo) * k / (n - 1);
  return r;
}

}  // namespace

TEST_CASE("one-dimensional residuals") {
  const std::vector<double> rs = radii(0.05, 1.0, 40);
  CHECK(el_residual_1d(make_flat(1.0), rs).max_abs == 0.0);
  CHECK(el_residual_1d(solve_extremal({1.0, 0.5}), rs).max_abs < 1e-6);
  CHECK(el_residual_1d(make_extremal_profile(solve_extremal({1.0, 0.5})), rs).max_abs < 1e-6);
  CHECK(el_residual_1d(make_hyperbolic_cap(1.0, 1.0), rs).max_abs > 0.1);
}

TEST_CASE("two-dimensional residual examples") {
  const Domain2D box = Domain2D::rectangle(-1.0, 1.0, -1.0, 1.0);
  const Grid2D plane = sample_grid([](Vec2 x) { return 0.3 * x.x + 0.4 * x.y + 1.0; }, box, 0.05);
  const ResidualGrid flat = el_residual_2d(plane, LagrangianSpec::lorentzian());
  CHECK(flat.max_abs <= 1e-12);
  CHECK(flat.evaluated == 39 * 39);
  CHECK(std::isnan(flat.at(0, 0)));

  const Grid2D bowl = sample_grid([](Vec2 x) { return 0.1 * (x.x * x.x + x.y * x.y); }, box, 0.05);
  const ResidualGrid r = el_residual_2d(bowl, LagrangianSpec::lorentzian());
  CHECK(r.max_abs >= 0.4 - 1e-10);
  // centre node: u_xx = u_yy = 0.2 exactly for a quadratic, Du = 0
  CHECK(r.at(20, 20) == doctest::Approx(0.4).epsilon(1e-10));

  const Grid2D steep = sample_grid([](Vec2 x) { return 2.0 * x.x; }, box, 0.1);
  CHECK(code_of([&] { el_residual_2d(steep, LagrangianSpec::lorentzian()); }) == ErrorCode::NotAdmissible);
  CHECK_NOTHROW(el_residual_2d(steep, LagrangianSpec::euclidean()));
}

TEST_CASE("operator in expanded form") {
  gen::Rng rng(61);
  for (int k = 0; k < 200; ++k) {
    const Vec2 g = gen::gradient(rng);
    const double uxx = gen::uniform(rng, -2, 2), uyy = gen::uniform(rng, -2, 2), uxy = gen::uniform(rng, -2, 2);
    const double expanded = (1 + 3 * g.x * g.x - g.y * g.y) * uxx + (1 - g.x * g.x + 3 * g.y * g.y) * uyy +
                            8 * g.x * g.y * uxy;
    CHECK(el_operator(g, uxx, uyy, uxy, LagrangianSpec::lorentzian()) ==
          doctest::Approx(expanded).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("residual csv") {
  const Domain2D box = Domain2D::rectangle(0.0, 0.2, 0.0, 0.2);
  const Grid2D g = sample_grid([](Vec2 x) { return 0.1 * x.x; }, box, 0.1);
  std::ostringstream out;
  write_residual_csv(out, g, el_residual_2d(g, LagrangianSpec::lorentzian()));
  const std::string csv = out.str();
  CHECK(csv.rfind("i,j,x,y,residual\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
}

TEST_CASE("residual refinement on the extremal") {
  const ParametricExtremal e = solve_extremal({1.0, 0.5});
  const std::vector<RefinementLevel> levels = extremal_residual_refinement(e, 0.5, 0.95, 0.02, 3);
  REQUIRE(levels.size() == 3);
  CHECK(levels[1].max_residual < levels[0].max_residual / 3.0);
  CHECK(levels[2].max_residual < levels[1].max_residual / 3.0);
  const std::vector<RefinementLevel> exact{{1.0, 1.0}, {0.5, 0.25}, {0.25, 0.0625}};
  CHECK(convergence_order(exact) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("ellipticity examples") {
  const EllipticityReport zero = ellipticity({0, 0}, LagrangianSpec::lorentzian());
  CHECK(zero.lambda_min == doctest::Approx(1.0));
  CHECK(zero.lambda_max == doctest::Approx(1.0));
  const Vec2 half{std::sqrt(0.25), std::sqrt(0.25)};
  const EllipticityReport l = ellipticity(half, LagrangianSpec::lorentzian());
  CHECK(l.lambda_min == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(l.lambda_max == doctest::Approx(2.5).epsilon(1e-14));
  const EllipticityReport e = ellipticity(half, LagrangianSpec::euclidean());
  CHECK(e.lambda_min == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(e.epsilon == 1);
  CHECK(code_of([] { ellipticity({1.0, 0.0}, LagrangianSpec::lorentzian()); }) == ErrorCode::NotAdmissible);
}

TEST_CASE("property: eigenvalues match closed forms") {
  gen::Rng rng(62);
  for (int k = 0; k < 1000; ++k) {
    const Vec2 g = gen::gradient(rng);
    for (LagrangianSpec spec : {LagrangianSpec::lorentzian(), LagrangianSpec::euclidean()}) {
      const EllipticityReport a = ellipticity(g, spec);
      const EllipticityReport b = ellipticity_closed_form(g, spec);
      CHECK(std::abs(a.lambda_min - b.lambda_min) <= 1e-12);
      CHECK(std::abs(a.lambda_max - b.lambda_max) <= 1e-12);
      if (spec.epsilon == -1) CHECK(a.lambda_min > 0.0);
    }
  }
}

TEST_CASE("separable candidates") {
  const Domain2D box = Domain2D::rectangle(-0.5, 0.5, -0.5, 0.5);
  CHECK(separable_falsify({0.1, 0.0, 0.0, 0.0}, box).falsified);
  CHECK(separable_falsify({0.2, 0.0, -0.2, 0.0}, box).falsified);
  const SeparableVerdict linear = separable_falsify({0.0, 0.3, 0.0, -0.2}, box);
  CHECK_FALSE(linear.falsified);
  CHECK(linear.max_abs_residual == 0.0);
  CHECK(linear.admissible_nodes == 41 * 41);
  // f'' + g'' = 0 but the quartic term survives away from the axes
  CHECK(separable_residual({0.2, 0.0, -0.2, 0.0}, {0.3, 0.1}) ==
        doctest::Approx(4.0 * (0.06 * 0.06 * 0.2 - 0.02 * 0.02 * 0.2)).epsilon(1e-12));
}

TEST_CASE("Legendre and Weierstrass") {
  CHECK(legendre_check(1.0, 0.0) == 2.0);
  CHECK(legendre_check(1.0, 0.5) == doctest::Approx(2.0 * 1.75 / 0.421875).epsilon(1e-15));
  CHECK(legendre_check(1.0, 0.5) == doctest::Approx(8.2963).epsilon(1e-5));
  CHECK(code_of([] { legendre_check(0.0, 0.5); }) == ErrorCode::DomainError);
  CHECK(code_of([] { legendre_check(1.0, 1.0); }) == ErrorCode::DomainError);
  CHECK(weierstrass_excess(1.0, 0.3, 0.3) == 0.0);
  CHECK(weierstrass_excess(1.0, 0.2, 0.5) == doctest::Approx(31.0 / 192.0).epsilon(1e-13));
  CHECK(weierstrass_excess_factored(1.0, 0.2, 0.5) == doctest::Approx(31.0 / 192.0).epsilon(1e-15));
}

TEST_CASE("property: strong minimum conditions") {
  gen::Rng rng(63);
  for (int k = 0; k < 10000; ++k) {
    const double r = gen::uniform(rng, 0.01, 10.0);
    const double up = gen::uniform(rng, -0.99, 0.99);
    const double vp = gen::uniform(rng, -0.99, 0.99);
    CHECK(legendre_check(r, up) > 0.0);
    const double a = weierstrass_excess(r, up, vp);
    const double b = weierstrass_excess_factored(r, up, vp);
    CHECK(b > 0.0);
    const double fp = 2.0 * r * up / std::pow(1.0 - up * up, 2);
    const double scale = std::max({1.0, radial_lagrangian(r, up), radial_lagrangian(r, vp), std::abs((vp - up) * fp)});
    CHECK(std::abs(a - b) <= 1e-12 * scale);
  }
}

TEST_CASE("direct minimization") {
  const BoundaryData b{1.0, 0.5};
  const ParametricExtremal e = solve_extremal(b);
  const DirectMinimizeResult r = direct_minimize(b, 512, 100000);
  const double E = extremal_resistance(e);
  CHECK(r.energy >= E);
  CHECK(r.energy - E < 1e-2);
  REQUIRE(r.nodes.size() == 513);
  CHECK(r.heights.front() == 0.0);
  CHECK(r.heights.back() == doctest::Approx(0.5).epsilon(1e-12));
  double dist = 0.0;
  for (std::size_t j = 1; j < r.nodes.size(); ++j) dist = std::max(dist, std::abs(r.heights[j] - eval_at_r(e, r.nodes[j]).u));
  CHECK(dist < 5e-3);
  for (std::size_t k = 1; k < r.energy_history.size(); ++k) CHECK(r.energy_history[k] < r.energy_history[k - 1]);

  const DirectMinimizeResult small = direct_minimize({1.0, 1e-4}, 64, 100000);
  CHECK(small.energy == doctest::Approx(std::numbers::pi).epsilon(1e-6));

  CHECK(code_of([&] { direct_minimize(b, 16, 100); }) == ErrorCode::DomainError);
  CHECK(code_of([&] { direct_minimize(b, 512, 1); }) == ErrorCode::NonConvergence);
}

TEST_CASE("maximum principle probe") {
  CHECK(max_principle_probe(solve_extremal({1.0, 0.5})));
  CHECK(max_principle_probe(make_flat(1.0)));
  const RadialProfile bump = make_custom(
      1.0, "bump", [](double r) { return 0.1 * std::sin(std::numbers::pi * r); },
      [](double r) { return 0.1 * std::numbers::pi * std::cos(std::numbers::pi * r); });
  CHECK_FALSE(max_principle_probe(bump));
}

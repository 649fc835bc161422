#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "generators.hpp"
#include "lnewton/error.hpp"
#include "lnewton/extremal.hpp"
#include "lnewton/ssc.hpp"

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

const Domain2D kDisk = Domain2D::disk({0, 0}, 1.0);
const Domain2D kBox = Domain2D::rectangle(-1.0, 1.0, -1.0, 1.0);

}  // namespace

TEST_CASE("final slope") {
  CHECK(final_slope({0.5, 0.0}) == 1.25);
  CHECK(final_slope({0.0, 0.999999}) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(code_of([] { final_slope({0, 0}); }) == ErrorCode::ZeroGradient);
  CHECK(code_of([] { final_slope({1, 0}); }) == ErrorCode::NotSpacelike);
  double previous = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 1000; ++k) {
    const double s = final_slope({k / 1000.0, 0.0});
    CHECK(s > 1.0);
    CHECK(s < previous);
    previous = s;
  }
}

TEST_CASE("t grid") {
  const std::vector<double> t = default_t_grid(kDisk);
  REQUIRE(t.size() == 64);
  CHECK(t.front() == doctest::Approx(2e-4));
  CHECK(t.back() == 8.0);
  for (std::size_t k = 1; k < t.size(); ++k) CHECK(t[k] > t[k - 1]);
  CHECK(code_of([] { log_t_grid(0.0, 1.0, 3); }) == ErrorCode::DomainError);
}

TEST_CASE("flat field margins are t/2") {
  const SscProbe p = ssc_check(radial_field(make_flat(1.0)), kDisk, {0.2, 0.3}, default_t_grid(kDisk));
  REQUIRE(p.margins.size() == 64);
  for (std::size_t k = 0; k < 64; ++k) CHECK(p.margins[k] == doctest::Approx(0.5 * p.t_grid[k]));
  CHECK(p.holds());
}

TEST_CASE("steep cone satisfies the condition") {
  const SscSweep s = ssc_sweep(radial_field(make_cone(1.0, 0.9)), kDisk, 100, 7);
  CHECK(s.probes.size() == 100);
  CHECK(s.worst_margin >= 0.0);
}

TEST_CASE("oscillatory field") {
  Field2D wave;
  wave.value = [](Vec2 x) { return 0.19 * std::sin(5.0 * x.x); };
  wave.gradient = [](Vec2 x) { return Vec2{0.95 * std::cos(5.0 * x.x), 0.0}; };
  CHECK(ssc_sweep(wave, kBox, 100, 8).worst_margin >= 0.0);

  // 0.3 sin(5x) is not spacelike where |cos(5x)| > 2/3
  Field2D steep;
  steep.value = [](Vec2 x) { return 0.3 * std::sin(5.0 * x.x); };
  steep.gradient = [](Vec2 x) { return Vec2{1.5 * std::cos(5.0 * x.x), 0.0}; };
  CHECK(code_of([&] { ssc_check(steep, kBox, {0.0, 0.0}, 1.0, 8); }) == ErrorCode::NotSpacelike);
}

TEST_CASE("grid-backed fields stop at the boundary") {
  const Grid2D g = sample_grid(radial_field(make_hyperbolic_cap(1.0, 1.0)).value, kBox, 0.05);
  const Field2D f = field_from_grid(g);
  const SscProbe p = ssc_check(f, kBox, {0.5, 0.5}, default_t_grid(kBox));
  CHECK(p.vacuous > 0);
  CHECK(p.margins.size() + p.vacuous == 64);
  CHECK(p.holds());
}

TEST_CASE("small t limit") {
  const Field2D u = radial_field(make_hyperbolic_cap(1.0, 0.7));
  const Vec2 x{0.4, -0.3};
  const double d2 = norm_sq(u.gradient(x));
  const SscProbe p = ssc_check(u, kDisk, x, std::vector<double>{1e-6});
  CHECK(p.margins.front() / (0.5e-6 * (1.0 - d2)) == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("identity") {
  const SscIdentity a = ssc_identity_check(0.5, 0.5);
  CHECK(a.difference == 0.0);
  CHECK(a.value == 0.75);
  const SscIdentity b = ssc_identity_check(0.9, -0.9);
  CHECK(std::abs(b.difference) < 1e-15);
  CHECK(b.value == doctest::Approx(3.43).epsilon(1e-14));
  gen::Rng rng(71);
  for (int k = 0; k < 10000; ++k) {
    const SscIdentity id = ssc_identity_check(gen::uniform(rng, -1, 1), gen::uniform(rng, -1, 1));
    CHECK(std::abs(id.difference) <= 8.0 * std::numeric_limits<double>::epsilon());
    CHECK(id.value > 0.0);
  }
}

TEST_CASE("property: the corpus satisfies the condition") {
  std::vector<std::pair<Field2D, Domain2D>> corpus;
  for (double rho : {0.2, 1.0, 3.0}) corpus.emplace_back(radial_field(make_hyperbolic_cap(1.0, rho)), kDisk);
  for (double lambda : {0.1, 0.5, 0.99}) corpus.emplace_back(radial_field(make_cone(1.0, lambda)), kDisk);
  for (int n : {1, 3, 10}) {
    corpus.emplace_back(radial_field(make_truncated_cone(1.0, 0.5, n)), kDisk);
    corpus.emplace_back(radial_field(make_truncated_cap(1.0, 0.5, n)), kDisk);
  }
  for (double M : {0.2, 0.5, 0.9}) corpus.emplace_back(radial_field(make_extremal_profile(solve_extremal({1.0, M}))), kDisk);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) corpus.emplace_back(random_trigonometric_field(seed), kBox);
  for (const auto& [field, domain] : corpus) CHECK(ssc_sweep(field, domain, 100, 9).worst_margin >= -1e-12);
}

TEST_CASE("property: random trigonometric fields are spacelike") {
  gen::Rng rng(72);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Field2D f = random_trigonometric_field(seed, 6);
    for (int k = 0; k < 500; ++k) {
      const Vec2 x{gen::uniform(rng, -5, 5), gen::uniform(rng, -5, 5)};
      CHECK(norm(f.gradient(x)) <= 0.95 + 1e-12);
      const double h = 1e-6;
      CHECK((f.value(x + Vec2{h, 0}) - f.value(x - Vec2{h, 0})) / (2 * h) ==
            doctest::Approx(f.gradient(x).x).epsilon(1e-6).scale(1.0));
    }
  }
  CHECK(code_of([] { random_trigonometric_field(1, 0); }) == ErrorCode::DomainError);
}

TEST_CASE("probe csv") {
  const SscProbe p = ssc_check(radial_field(make_flat(1.0)), kDisk, {0.1, 0.1}, std::vector<double>{0.5, 1.0});
  std::ostringstream out;
  write_probe_csv(out, {p});
  CHECK(out.str() == "x,y,t,margin\n0.1,0.1,0.5,0.25\n0.1,0.1,1,0.5\n");
}

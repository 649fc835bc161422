#include "lnewton/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "lnewton/error.hpp"
#include "lnewton/extremal.hpp"
#include "lnewton/lorentz.hpp"
#include "lnewton/resistance.hpp"
#include "lnewton/ssc.hpp"
#include "lnewton/variational.hpp"

namespace lnewton {

namespace {

constexpr double kPi = std::numbers::pi;

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Du uniformly distributed in the open disk of radius `rmax`.
Vec2 random_gradient(Rng& rng, double rmax) {
  const double r = rmax * std::sqrt(uniform(rng, 0.0, 1.0));
  const double phi = uniform(rng, 0.0, 2.0 * kPi);
  return {r * std::cos(phi), r * std::sin(phi)};
}

std::string fmt(const char* label, double value) {
  std::ostringstream s;
  s.precision(3);
  s << label << ' ' << value;
  return s.str();
}

/// Runs `body`; a thrown Error becomes a failed check.
CheckResult guarded(const std::string& name, const std::function<CheckResult()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {name, false, std::string("threw: ") + e.what()};
  }
}

// ---- core -------------------------------------------------------------------

void core_suite(const InvariantOptions& o, std::vector<CheckResult>& out) {
  const double s = o.tolerance_scale;
  out.push_back(guarded("core.normal_unit_timelike", [&] {
    Rng rng(o.seed);
    double worst = 0.0;
    bool classified = true;
    for (int k = 0; k < 1000; ++k) {
      const GraphPointData g = graph_point(random_gradient(rng, 0.999));
      worst = std::max(worst, std::abs(lorentz_inner(g.normal, g.normal) + 1.0));
      classified = classified && classify(g.normal) == CausalType::Timelike && g.cosh_theta >= 1.0;
      worst = std::max(worst, std::abs(g.cosh_theta + lorentz_inner(kE3, g.normal)) / g.cosh_theta);
    }
    return CheckResult{"core.normal_unit_timelike", classified && worst <= kNumTolerance * s,
                       fmt("max |<N,N>+1|, cosh mismatch:", worst)};
  }));
  out.push_back(guarded("core.reverse_cauchy_schwarz", [&] {
    Rng rng(o.seed + 1);
    int violations = 0;
    for (int k = 0; k < 1000; ++k) {
      const Vec2 a = random_gradient(rng, 0.99);
      const Vec2 b = random_gradient(rng, 0.99);
      const double ta = uniform(rng, 0.1, 10.0);
      const double tb = uniform(rng, 0.1, 10.0);
      const Vec3L v{ta * a.x, ta * a.y, ta};
      const Vec3L w{tb * b.x, tb * b.y, -tb};
      const double vw = lorentz_inner(v, w);
      if (!(vw * vw > lorentz_inner(v, v) * lorentz_inner(w, w))) ++violations;
    }
    return CheckResult{"core.reverse_cauchy_schwarz", violations == 0,
                       std::to_string(violations) + " violations in 1000 pairs"};
  }));
  out.push_back(guarded("core.cosh_blowup", [&] {
    double previous = 1.0;
    bool increasing = true;
    for (int k = 1; k <= 40; ++k) {
      const double c = graph_point({1.0 - std::ldexp(1.0, -k), 0.0}).cosh_theta;
      increasing = increasing && c > previous;
      previous = c;
    }
    return CheckResult{"core.cosh_blowup", increasing && previous > 1e5, fmt("cosh at k=40:", previous)};
  }));
  out.push_back(guarded("core.reflection_decomposition", [&] {
    Rng rng(o.seed + 2);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
      Vec2 g = random_gradient(rng, 0.95);
      if (norm(g) < 1e-6) g = {1e-6, 0.0};
      const TangentNormalFrame f = tangent_normal_frame(g);
      const Vec3L vf = reflect_particle(g);
      const Vec3L expected = (-f.sinh_theta) * f.tangent - f.cosh_theta * f.normal;
      const Vec3L sum = vf + kE3;
      const Vec3L twice_tangent = (-2.0 * f.sinh_theta) * f.tangent;
      const double scale = f.cosh_theta * f.cosh_theta;
      worst = std::max({worst, std::abs(lorentz_inner(f.tangent, f.tangent) - 1.0),
                        std::abs(lorentz_inner(f.tangent, f.normal)),
                        lorentz_norm(vf - expected) / scale, lorentz_norm(sum - twice_tangent) / scale,
                        std::abs(momentum_transfer(g) - 2.0 * scale) / scale});
    }
    return CheckResult{"core.reflection_decomposition", worst <= kNumTolerance * s,
                       fmt("worst frame residual:", worst)};
  }));
}

// ---- resistance (and profiles) ---------------------------------------------

void resistance_suite(const InvariantOptions& o, std::vector<CheckResult>& out) {
  const double s = o.tolerance_scale;
  const double tol = kDefaultTolerance;
  out.push_back(guarded("resistance.closed_form_vs_quadrature", [&] {
    Rng rng(o.seed + 10);
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      const double R = uniform(rng, 0.2, 5.0);
      const RadialProfile ps[] = {make_flat(R), make_cone(R, uniform(rng, 0.01, 0.95)),
                                  make_hyperbolic_cap(R, uniform(rng, 0.1, 5.0))};
      for (const RadialProfile& p : ps) {
        const double closed = resistance_closed_form(p).value;
        const double quad = resistance_radial(p, tol).value;
        worst = std::max(worst, std::abs(quad - closed) / (tol + 1e-12 * closed));
      }
    }
    return CheckResult{"resistance.closed_form_vs_quadrature", worst <= s,
                       fmt("worst |quad - closed| / (tol + 1e-12 E):", worst)};
  }));
  out.push_back(guarded("resistance.cap_disk_ratio", [&] {
    const double ratio = resistance_radial(make_hyperbolic_cap(1.0, 1.0), 1e-12).value /
                         resistance_radial(make_flat(1.0), 1e-12).value;
    return CheckResult{"resistance.cap_disk_ratio", std::abs(ratio - 1.5) <= 1e-10 * s, fmt("ratio:", ratio)};
  }));
  out.push_back(guarded("resistance.cone_monotone_in_slope", [&] {
    double previous = 0.0;
    bool increasing = true;
    for (int k = 1; k < 100; ++k) {
      const double E = resistance_closed_form(make_cone(1.0, k / 100.0)).value;
      increasing = increasing && E > previous;
      previous = E;
    }
    return CheckResult{"resistance.cone_monotone_in_slope", increasing, "lambda = 0.01 .. 0.99"};
  }));
  out.push_back(guarded("resistance.area_lower_bound", [&] {
    Rng rng(o.seed + 11);
    bool ok = true;
    for (int k = 0; k < 1000; ++k) {
      ok = ok && LagrangianSpec::lorentzian().density(random_gradient(rng, 0.999)) >= 1.0;
    }
    const double flat = resistance_radial(make_flat(2.0), tol).value;
    const double cap = resistance_radial(make_hyperbolic_cap(2.0, 0.7), tol).value;
    ok = ok && std::abs(flat - 4.0 * kPi) <= tol * s && cap > 4.0 * kPi;
    return CheckResult{"resistance.area_lower_bound", ok, fmt("E[flat] - area:", flat - 4.0 * kPi)};
  }));
  out.push_back(guarded("resistance.grid_2d_cross_validation", [&] {
    const RadialProfile cap = make_hyperbolic_cap(1.0, 1.0);
    const double tol2 = 1e-8;
    const ResistanceReport q2 =
        resistance_grid_2d(radial_field(cap), Domain2D::disk({0.0, 0.0}, 1.0), LagrangianSpec::lorentzian(), tol2);
    const double q1 = resistance_radial(cap, tol).value;
    return CheckResult{"resistance.grid_2d_cross_validation", std::abs(q2.value - q1) <= (tol2 + tol) * s,
                       fmt("|E_2d - E_1d|:", std::abs(q2.value - q1))};
  }));
  out.push_back(guarded("resistance.dilation", [&] {
    const RadialProfile ps[] = {make_cone(1.0, 0.6), make_hyperbolic_cap(1.0, 0.8),
                                make_truncated_cone(1.0, 0.5, 3)};
    double worst = 0.0;
    for (const RadialProfile& p : ps) {
      for (double c : {0.5, 2.0, 3.0}) {
        worst = std::max(worst, std::abs(dilation_check(p, c).ratio / (c * c) - 1.0));
      }
    }
    return CheckResult{"resistance.dilation", worst <= 1e-6 * s, fmt("worst relative deviation from c^2:", worst)};
  }));
  out.push_back(guarded("resistance.truncated_sequence_increasing", [&] {
    std::vector<int> ns(64);
    for (int n = 1; n <= 64; ++n) ns[n - 1] = n;
    const std::vector<DivergenceRow> rows = divergence_scan(1.0, 0.5, ns);
    bool increasing = true;
    double worst = 0.0;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k > 0) increasing = increasing && rows[k].E_total > rows[k - 1].E_total;
      worst = std::max(worst, std::abs(rows[k].E_quadrature - rows[k].E_total));
    }
    return CheckResult{"resistance.truncated_sequence_increasing", increasing && worst <= tol * s,
                       fmt("E(64)/E(1):", rows.back().E_total / rows.front().E_total)};
  }));
  out.push_back(guarded("profiles.consistency", [&] {
    const ParametricExtremal e = solve_extremal({1.0, 0.5});
    const RadialProfile ps[] = {make_flat(1.0), make_hyperbolic_cap(1.0, 0.5), make_cone(1.0, 0.7),
                                make_truncated_cone(1.0, 0.5, 4), make_truncated_cap(1.0, 0.5, 4),
                                make_extremal_profile(e)};
    double worst = 0.0;
    bool continuous = true;
    for (const RadialProfile& p : ps) {
      const double h = 1e-6;
      for (int k = 1; k < 100; ++k) {
        const double r = 0.01 * k;
        bool near_kink = false;
        for (double a : p.kinks()) near_kink = near_kink || std::abs(r - a) < 2.0 * h;
        if (near_kink) continue;
        const double fd = (p.value(r + h) - p.value(r - h)) / (2.0 * h);
        worst = std::max(worst, std::abs(fd - p.slope(r)));
      }
      for (double a : p.kinks()) {
        continuous = continuous && std::abs(p.value(std::nextafter(a, 0.0)) - p.value(std::nextafter(a, 2.0))) <= 1e-12;
      }
    }
    return CheckResult{"profiles.consistency", continuous && worst <= 1e-6 * s,
                       fmt("worst |finite difference - slope|:", worst)};
  }));
  out.push_back(guarded("profiles.height_bound", [&] {
    const RadialProfile ps[] = {make_flat(1.0), make_hyperbolic_cap(1.0, 0.3), make_cone(1.0, 0.9)};
    bool ok = true;
    for (const RadialProfile& p : ps) ok = ok && certify_spacelike(p).spacelike && height_bound_check(p);
    return CheckResult{"profiles.height_bound", ok, "flat, cap, cone with u(R) = 0"};
  }));
}

// ---- variational (and extremal) --------------------------------------------

void variational_suite(const InvariantOptions& o, std::vector<CheckResult>& out) {
  const double s = o.tolerance_scale;
  out.push_back(guarded("extremal.first_integral", [&] {
    Rng rng(o.seed + 20);
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const double R = uniform(rng, 0.5, 3.0);
      const ParametricExtremal e = solve_extremal({R, uniform(rng, 0.05, 0.95) * R});
      for (int i = 1; i <= 100; ++i) {
        const double r = 5.0 * R * i / 100.0;
        const double p = p_of_r(e, r, 0.0);
        worst = std::max(worst, std::abs(first_integral(r, p) / e.c1 - 1.0));
      }
    }
    return CheckResult{"extremal.first_integral", worst <= 1e-8 * s, fmt("worst relative deviation:", worst)};
  }));
  out.push_back(guarded("extremal.round_trip_and_regularity", [&] {
    const ParametricExtremal e = solve_extremal({1.0, 0.5});
    double worst = 0.0;
    bool regular = true;
    for (int k = 1; k <= 100; ++k) {
      const double p = 0.01 + 0.99 * k / 100.0;
      worst = std::max(worst, std::abs(p_of_r(e, curve_at_p(e, p).r) - p));
      if (p < 1.0) regular = regular && radius_derivative(e, p) < 0.0;
    }
    return CheckResult{"extremal.round_trip_and_regularity", regular && worst <= 10.0 * kRootTolerance * s,
                       fmt("worst |p_of_r(r(p)) - p|:", worst)};
  }));
  out.push_back(guarded("extremal.shape", [&] {
    const ParametricExtremal e = solve_extremal({1.0, 0.5});
    bool ok = true;
    double previous_u = 0.0;
    double worst_d2u = -std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 1000; ++k) {
      const ExtremalEvaluation v = eval_at_r(e, k / 1000.0);
      ok = ok && v.u > previous_u && v.u <= e.M * (1.0 + 1e-12);
      worst_d2u = std::max(worst_d2u, v.d2u);
      previous_u = v.u;
    }
    double previous_p = 1.0;
    for (int k = 0; k <= 20; ++k) {
      const ExtremalEvaluation v = eval_at_r(e, std::ldexp(1.0, k));
      ok = ok && v.du < previous_p && (k == 0 || v.u > previous_u);
      previous_p = v.du;
      previous_u = v.u;
    }
    ok = ok && previous_p < 1e-5 && worst_d2u <= 1e-12;
    return CheckResult{"extremal.shape", ok, fmt("u' at r = 2^20 R:", previous_p)};
  }));
  out.push_back(guarded("extremal.scale_covariance", [&] {
    const ParametricExtremal base = solve_extremal({1.0, 0.5});
    double worst = 0.0;
    for (double c : {0.5, 2.0, 3.0}) {
      const ParametricExtremal e = solve_extremal({c, 0.5 * c});
      worst = std::max({worst, std::abs(e.p_R - base.p_R), std::abs(e.c1 / (c * base.c1) - 1.0),
                        std::abs(extremal_resistance(e) / (c * c * extremal_resistance(base)) - 1.0)});
    }
    return CheckResult{"extremal.scale_covariance", worst <= 1e-12 * s, fmt("worst deviation:", worst)};
  }));
  out.push_back(guarded("extremal.closed_form_vs_p_quadrature", [&] {
    double worst = 0.0;
    for (int k = 1; k <= 9; ++k) {
      const ParametricExtremal e = solve_extremal({1.0, k / 10.0});
      worst = std::max(worst, std::abs(extremal_resistance_quadrature(e).value - extremal_resistance(e)));
    }
    return CheckResult{"extremal.closed_form_vs_p_quadrature", worst <= 1e-8 * s, fmt("worst difference:", worst)};
  }));
  out.push_back(guarded("variational.linear_residual_zero", [&] {
    const Domain2D box = Domain2D::rectangle(-1.0, 1.0, -1.0, 1.0);
    const Grid2D g = sample_grid([](Vec2 x) { return 0.3 * x.x - 0.4 * x.y + 0.1; }, box, 0.05);
    const double worst = el_residual_2d(g, LagrangianSpec::lorentzian()).max_abs;
    return CheckResult{"variational.linear_residual_zero", worst <= 1e-12 * s, fmt("max residual:", worst)};
  }));
  out.push_back(guarded("variational.residual_order", [&] {
    const ParametricExtremal e = solve_extremal({1.0, 0.5});
    const std::vector<RefinementLevel> levels = extremal_residual_refinement(e, 0.5, 0.95, 0.01, 3);
    const double order = convergence_order(levels);
    return CheckResult{"variational.residual_order", std::abs(order - 2.0) <= 0.2 * s, fmt("order:", order)};
  }));
  out.push_back(guarded("variational.ellipticity", [&] {
    Rng rng(o.seed + 21);
    double worst = 0.0;
    bool positive = true;
    for (int k = 0; k < 1000; ++k) {
      const Vec2 g = random_gradient(rng, 0.999);
      for (LagrangianSpec spec : {LagrangianSpec::lorentzian(), LagrangianSpec::euclidean()}) {
        const EllipticityReport a = ellipticity(g, spec);
        const EllipticityReport b = ellipticity_closed_form(g, spec);
        worst = std::max({worst, std::abs(a.lambda_min - b.lambda_min), std::abs(a.lambda_max - b.lambda_max)});
        if (spec.epsilon == -1) positive = positive && a.lambda_min > 0.0;
      }
    }
    const double mixed = ellipticity({std::sqrt(0.5), 0.0}, LagrangianSpec::euclidean()).lambda_min;
    return CheckResult{"variational.ellipticity", positive && mixed < 0.0 && worst <= 1e-12 * s,
                       fmt("worst eigenvalue mismatch:", worst)};
  }));
  out.push_back(guarded("variational.strong_minimum", [&] {
    Rng rng(o.seed + 22);
    bool positive = true;
    double worst = 0.0;
    for (int k = 0; k < 10000; ++k) {
      const double r = uniform(rng, 0.01, 10.0);
      const double up = uniform(rng, -0.99, 0.99);
      double vp = uniform(rng, -0.99, 0.99);
      if (vp == up) vp = -up;
      const double a = weierstrass_excess(r, up, vp);
      const double b = weierstrass_excess_factored(r, up, vp);
      positive = positive && legendre_check(r, up) > 0.0 && b > 0.0;
      const double f_up = radial_lagrangian(r, up);
      const double f_vp = radial_lagrangian(r, vp);
      const double f_p = 2.0 * r * up / ((1.0 - up * up) * (1.0 - up * up));
      const double scale = std::max({1.0, std::abs(f_up), std::abs(f_vp), std::abs((vp - up) * f_p)});
      worst = std::max(worst, std::abs(a - b) / scale);
    }
    return CheckResult{"variational.strong_minimum", positive && worst <= 1e-12 * s,
                       fmt("worst scaled two-path difference:", worst)};
  }));
  out.push_back(guarded("variational.separable_candidates", [&] {
    const Domain2D box = Domain2D::rectangle(-0.3, 0.3, -0.3, 0.3);
    const SeparableVerdict quadratic = separable_falsify({0.5, 0.1, -0.2, 0.05}, box);
    const SeparableVerdict linear = separable_falsify({0.0, 0.3, 0.0, -0.4}, box);
    const Grid2D g = sample_grid([](Vec2 x) { return 0.3 * x.x - 0.4 * x.y; }, box, 0.05);
    const double linear_2d = el_residual_2d(g, LagrangianSpec::lorentzian()).max_abs;
    return CheckResult{"variational.separable_candidates",
                       quadratic.falsified && !linear.falsified && linear_2d <= 1e-12 * s,
                       fmt("quadratic max residual:", quadratic.max_abs_residual)};
  }));
  out.push_back(guarded("variational.direct_minimize", [&] {
    const BoundaryData b{1.0, 0.5};
    const DirectMinimizeResult r = direct_minimize(b, 512, 100000);
    bool monotone = true;
    for (std::size_t k = 1; k < r.energy_history.size(); ++k) {
      monotone = monotone && r.energy_history[k] < r.energy_history[k - 1];
    }
    const ParametricExtremal e = solve_extremal(b);
    const double E = extremal_resistance(e);
    return CheckResult{"variational.direct_minimize", monotone && r.energy >= E && r.energy - E <= 1e-2 * s,
                       fmt("E_discrete - E_extremal:", r.energy - E)};
  }));
  out.push_back(guarded("variational.max_principle", [&] {
    const ParametricExtremal e = solve_extremal({1.0, 0.5});
    const bool ok = max_principle_probe(e) && max_principle_probe(make_hyperbolic_cap(1.0, 0.5)) &&
                    max_principle_probe(make_flat(1.0));
    return CheckResult{"variational.max_principle", ok, "extremal, cap, flat"};
  }));
}

// ---- ssc --------------------------------------------------------------------

struct CorpusEntry {
  std::string label;
  Field2D field;
  Domain2D domain;
};

std::vector<CorpusEntry> ssc_corpus(unsigned long long seed) {
  const Domain2D disk = Domain2D::disk({0.0, 0.0}, 1.0);
  std::vector<CorpusEntry> corpus;
  const auto radial = [&](const std::string& label, const RadialProfile& p) {
    corpus.push_back({label, radial_field(p), disk});
  };
  radial("flat", make_flat(1.0));
  radial("cap rho=0.3", make_hyperbolic_cap(1.0, 0.3));
  radial("cap rho=1", make_hyperbolic_cap(1.0, 1.0));
  radial("cone 0.5", make_cone(1.0, 0.5));
  radial("cone 0.9", make_cone(1.0, 0.9));
  radial("truncated cone n=4", make_truncated_cone(1.0, 0.5, 4));
  radial("truncated cap n=4", make_truncated_cap(1.0, 0.5, 4));
  radial("extremal M=0.5", make_extremal_profile(solve_extremal({1.0, 0.5})));
  radial("extremal M=0.9", make_extremal_profile(solve_extremal({1.0, 0.9})));
  const Domain2D box = Domain2D::rectangle(-1.0, 1.0, -1.0, 1.0);
  Field2D wave;
  // 0.3 sin(5x) reaches slope 1.5; this amplitude keeps |Du| <= 0.95.
  wave.value = [](Vec2 x) { return 0.19 * std::sin(5.0 * x.x); };
  wave.gradient = [](Vec2 x) { return Vec2{0.95 * std::cos(5.0 * x.x), 0.0}; };
  corpus.push_back({"0.19 sin(5x)", wave, box});
  for (int k = 0; k < 3; ++k) {
    corpus.push_back({"trigonometric #" + std::to_string(k), random_trigonometric_field(seed + k), box});
  }
  corpus.push_back({"bilinear grid cap", field_from_grid(sample_grid(radial_field(make_hyperbolic_cap(1.0, 1.0)).value, box, 0.05)),
                    box});
  return corpus;
}

void ssc_suite(const InvariantOptions& o, std::vector<CheckResult>& out) {
  const double s = o.tolerance_scale;
  out.push_back(guarded("ssc.identity", [&] {
    Rng rng(o.seed + 30);
    double worst = 0.0;
    bool positive = true;
    for (int k = 0; k < 10000; ++k) {
      const SscIdentity id = ssc_identity_check(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
      worst = std::max(worst, std::abs(id.difference));
      positive = positive && id.value > 0.0;
    }
    return CheckResult{"ssc.identity", positive && worst <= 16.0 * std::numeric_limits<double>::epsilon() * s,
                       fmt("max |LHS - RHS|:", worst)};
  }));
  out.push_back(guarded("ssc.final_slope", [&] {
    bool ok = true;
    double previous = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 1000; ++k) {
      const double sp = final_slope({k / 1000.0, 0.0});
      ok = ok && sp > 1.0 && sp < previous;
      previous = sp;
    }
    return CheckResult{"ssc.final_slope", ok && previous - 1.0 < 1e-6, fmt("s_p at |Du| = 0.999:", previous)};
  }));
  out.push_back(guarded("ssc.corpus_sweep", [&] {
    double worst = std::numeric_limits<double>::infinity();
    std::string worst_label;
    for (const CorpusEntry& c : ssc_corpus(o.seed)) {
      const SscSweep sweep = ssc_sweep(c.field, c.domain, 100, o.seed + 31);
      if (sweep.worst_margin < worst) {
        worst = sweep.worst_margin;
        worst_label = c.label;
      }
    }
    return CheckResult{"ssc.corpus_sweep", worst >= -1e-12 * s,
                       fmt("worst margin:", worst) + " (" + worst_label + ")"};
  }));
  out.push_back(guarded("ssc.small_t_limit", [&] {
    const Field2D u = radial_field(make_hyperbolic_cap(1.0, 1.0));
    const Domain2D disk = Domain2D::disk({0.0, 0.0}, 1.0);
    double worst = 0.0;
    for (Vec2 x : {Vec2{0.3, 0.1}, Vec2{-0.5, 0.6}, Vec2{0.9, 0.0}}) {
      const double t = 1e-5;
      const double d2 = norm_sq(u.gradient(x));
      const SscProbe p = ssc_check(u, disk, x, std::vector<double>{t});
      worst = std::max(worst, std::abs(p.margins.front() / (0.5 * t * (1.0 - d2)) - 1.0));
    }
    return CheckResult{"ssc.small_t_limit", worst <= 1e-3 * s, fmt("worst relative deviation:", worst)};
  }));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"core", "resistance", "variational", "ssc", "all"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const InvariantOptions& options) {
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw Error(ErrorCode::DomainError, "unknown suite '" + suite + "'");
  }
  if (all || suite == "core") core_suite(options, out);
  if (all || suite == "resistance") resistance_suite(options, out);
  if (all || suite == "variational") variational_suite(options, out);
  if (all || suite == "ssc") ssc_suite(options, out);
  return out;
}

}  // namespace lnewton

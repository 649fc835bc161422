#include "lnewton/resistance.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "lnewton/error.hpp"
#include "lnewton/extremal.hpp"
#include "lnewton/quadrature.hpp"

namespace lnewton {

namespace {

constexpr double kPi = std::numbers::pi;
// Below this relative size the target is roundoff, not truncation error.
constexpr double kRelativeFloor = 1e-12;

void require_tolerance(double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::DomainError, "tolerance must be positive");
}

ResistanceReport from_quadrature(const QuadratureResult& q, double scale, double tol,
                                 ResistanceMethod method) {
  ResistanceReport report{scale * q.value, method, scale * q.abs_error, std::nullopt};
  if (!q.converged || report.abs_error_estimate > tol + kRelativeFloor * std::abs(report.value)) {
    std::ostringstream msg;
    msg << "error estimate " << report.abs_error_estimate << " exceeds " << tol << " after "
        << q.intervals << " panels";
    throw Error(ErrorCode::ToleranceNotMet, msg.str());
  }
  return report;
}

// pi a^4/(a^2 - M^2) and the annulus term for the truncated cone.
std::pair<double, double> truncated_cone_parts(double R, const TruncatedConeShape& s) {
  const double a2 = s.a * s.a;
  return {kPi * a2 * a2 / ((s.a - s.M) * (s.a + s.M)), kPi * (R - s.a) * (R + s.a)};
}

std::pair<double, double> truncated_cap_parts(double R, const TruncatedCapShape& s) {
  const double a2 = s.a * s.a;
  const double rho2 = s.rho * s.rho;
  return {kPi * a2 * (a2 + 2.0 * rho2) / (2.0 * rho2), kPi * (R - s.a) * (R + s.a)};
}

}  // namespace

double LagrangianSpec::density(Vec2 gradient) const {
  const double denom = 1.0 + epsilon * norm_sq(gradient);
  if (!(denom > 0.0)) {
    std::ostringstream msg;
    msg << "|Du|^2 = " << norm_sq(gradient) << " is not admissible for eps = " << epsilon;
    throw Error(ErrorCode::NotAdmissible, msg.str());
  }
  return 1.0 / denom;
}

bool LagrangianSpec::admissible(Vec2 gradient) const { return 1.0 + epsilon * norm_sq(gradient) > 0.0; }

const char* to_string(ResistanceMethod method) noexcept {
  switch (method) {
    case ResistanceMethod::ClosedForm: return "closed_form";
    case ResistanceMethod::Quadrature1D: return "quadrature_1d";
    case ResistanceMethod::Quadrature2D: return "quadrature_2d";
  }
  return "unknown";
}

nlohmann::json to_json(const ResistanceReport& report) {
  nlohmann::json j{{"value", report.value},
                   {"method", to_string(report.method)},
                   {"abs_error_estimate", report.abs_error_estimate}};
  if (report.sloped_part) j["sloped_part"] = *report.sloped_part;
  return j;
}

ResistanceReport resistance_radial(const RadialProfile& p, double tol) {
  require_tolerance(tol);
  const QuadratureOptions options{.abs_tol = tol / (2.0 * kPi), .rel_tol = kRelativeFloor, .max_intervals = 50000};
  if (const auto& rp = p.reparametrization()) {
    const QuadratureResult q = integrate(rp->integrand, rp->lower, rp->upper, options);
    return from_quadrature(q, 2.0 * kPi, tol, ResistanceMethod::Quadrature1D);
  }
  const auto integrand = [&p](double r) {
    const double gap = p.lorentz_gap(r);
    if (!(gap >= kEdgeTolerance)) {
      std::ostringstream msg;
      msg << "1 - u'^2 = " << gap << " at interior node r = " << r;
      throw Error(ErrorCode::SingularIntegrand, msg.str());
    }
    return r / gap;
  };
  const std::vector<double> points = p.breakpoints();
  const QuadratureResult q = integrate(integrand, points, options);
  return from_quadrature(q, 2.0 * kPi, tol, ResistanceMethod::Quadrature1D);
}

bool has_closed_form(const RadialProfile& p) {
  return !std::holds_alternative<CustomShape>(p.shape());
}

ResistanceReport resistance_closed_form(const RadialProfile& p) {
  const double R = p.outer_radius();
  const double R2 = R * R;
  ResistanceReport report{0.0, ResistanceMethod::ClosedForm, 0.0, std::nullopt};
  const ProfileShape& shape = p.shape();
  if (std::holds_alternative<FlatShape>(shape)) {
    report.value = kPi * R2;
  } else if (const auto* cap = std::get_if<HyperbolicCapShape>(&shape)) {
    const double rho2 = cap->rho * cap->rho;
    report.value = kPi * R2 * (2.0 * rho2 + R2) / (2.0 * rho2);
  } else if (const auto* cone = std::get_if<ConeShape>(&shape)) {
    report.value = kPi * R2 / ((1.0 - cone->lambda) * (1.0 + cone->lambda));
  } else if (const auto* tc = std::get_if<TruncatedConeShape>(&shape)) {
    const auto [sloped, annulus] = truncated_cone_parts(R, *tc);
    report.value = sloped + annulus;
    report.sloped_part = sloped;
  } else if (const auto* tcap = std::get_if<TruncatedCapShape>(&shape)) {
    const auto [sloped, annulus] = truncated_cap_parts(R, *tcap);
    report.value = sloped + annulus;
    report.sloped_part = sloped;
  } else if (const auto* ext = std::get_if<ExtremalShape>(&shape)) {
    report.value = extremal_resistance(*ext->handle);
  } else {
    throw Error(ErrorCode::NoClosedForm, "no closed form for profile kind " + p.kind_name());
  }
  return report;
}

ResistanceReport resistance_grid_2d(const Field2D& u, const Domain2D& domain, LagrangianSpec spec,
                                    double tol) {
  require_tolerance(tol);
  const auto density = [&](Vec2 x) { return spec.density(u.gradient(x)); };

  // Outer variable t with chord [lo(t), hi(t)] in y and Jacobian dx/dt.
  std::array<double, 3> outer_points{};
  std::function<double(double)> x_of;
  std::function<double(double)> jacobian;
  std::function<std::pair<double, double>(double)> chord;
  double outer_length = 0.0;
  if (domain.kind == Domain2D::Kind::Disk) {
    const Vec2 c = domain.centre;
    const double R = domain.radius;
    outer_points = {-0.5 * kPi, 0.0, 0.5 * kPi};
    x_of = [c, R](double phi) { return c.x + R * std::sin(phi); };
    jacobian = [R](double phi) { return R * std::cos(phi); };
    chord = [c, R](double phi) {
      const double w = R * std::cos(phi);
      return std::pair{c.y - w, c.y + w};
    };
    outer_length = 2.0 * R;
  } else {
    const double y0 = domain.y0;
    const double y1 = domain.y1;
    outer_points = {domain.x0, domain.centre.x, domain.x1};
    x_of = [](double x) { return x; };
    jacobian = [](double) { return 1.0; };
    chord = [y0, y1](double) { return std::pair{y0, y1}; };
    outer_length = domain.x1 - domain.x0;
  }

  const double inner_tol = 0.5 * tol / outer_length;
  const double centre_y = domain.centre.y;
  double worst_inner_error = 0.0;
  bool inner_ok = true;
  const auto outer = [&](double t) {
    const double x = x_of(t);
    const auto [lo, hi] = chord(t);
    if (!(hi > lo)) return 0.0;
    const std::array<double, 3> inner_points{lo, std::clamp(centre_y, lo, hi), hi};
    const QuadratureResult q = integrate([&](double y) { return density({x, y}); }, inner_points,
                                         {.abs_tol = inner_tol, .max_intervals = 5000});
    inner_ok = inner_ok && q.converged;
    worst_inner_error = std::max(worst_inner_error, q.abs_error);
    return jacobian(t) * q.value;
  };
  const QuadratureResult q =
      integrate(outer, outer_points, {.abs_tol = 0.5 * tol, .max_intervals = 5000});
  ResistanceReport report{q.value, ResistanceMethod::Quadrature2D,
                          q.abs_error + outer_length * worst_inner_error, std::nullopt};
  if (!q.converged || !inner_ok || report.abs_error_estimate > tol) {
    std::ostringstream msg;
    msg << "2D error estimate " << report.abs_error_estimate << " exceeds " << tol;
    throw Error(ErrorCode::ToleranceNotMet, msg.str());
  }
  return report;
}

ResistanceReport resistance_grid_2d(const Grid2D& grid, LagrangianSpec spec) {
  const auto cell_sum = [&](int stride) {
    const double h = stride * grid.h;
    std::vector<double> terms;
    for (int j = 0; j + stride < grid.ny; j += stride) {
      for (int i = 0; i + stride < grid.nx; i += stride) {
        if (!(grid.inside(i, j) && grid.inside(i + stride, j) && grid.inside(i, j + stride) &&
              grid.inside(i + stride, j + stride))) {
          continue;
        }
        const double u00 = grid.at(i, j);
        const double u10 = grid.at(i + stride, j);
        const double u01 = grid.at(i, j + stride);
        const double u11 = grid.at(i + stride, j + stride);
        const Vec2 gradient{((u10 + u11) - (u00 + u01)) / (2.0 * h), ((u01 + u11) - (u00 + u10)) / (2.0 * h)};
        terms.push_back(spec.density(gradient) * h * h);
      }
    }
    return compensated_sum(terms);
  };
  const double fine = cell_sum(1);
  const bool can_coarsen = grid.nx >= 3 && grid.ny >= 3 && (grid.nx - 1) % 2 == 0 && (grid.ny - 1) % 2 == 0;
  const double error = can_coarsen ? std::abs(fine - cell_sum(2)) / 3.0 : 0.0;
  return {fine, ResistanceMethod::Quadrature2D, error, std::nullopt};
}

DilationResult dilation_check(const RadialProfile& p, double c, double tol) {
  const RadialProfile v = dilate(p, c);
  const double E_u = resistance_radial(p, tol).value;
  const double E_v = resistance_radial(v, tol * c * c).value;
  return {E_u, E_v, E_v / E_u};
}

std::vector<DivergenceRow> divergence_scan(double R, double M, const std::vector<int>& n_list,
                                           double tol) {
  validate({R, M});
  std::vector<DivergenceRow> rows;
  int previous = 0;
  for (int n : n_list) {
    if (n <= previous) throw Error(ErrorCode::BadBoundaryData, "n_list must be strictly increasing and positive");
    previous = n;
    const RadialProfile u = make_truncated_cone(R, M, n);
    const ResistanceReport closed = resistance_closed_form(u);
    const ResistanceReport quad = resistance_radial(u, tol);
    const auto& shape = std::get<TruncatedConeShape>(u.shape());
    rows.push_back({n, shape.a, *closed.sloped_part, closed.value, quad.value, quad.abs_error_estimate});
  }
  return rows;
}

}  // namespace lnewton

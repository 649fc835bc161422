#include "lnewton/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lnewton/error.hpp"

namespace lnewton {

Domain2D Domain2D::rectangle(double x0, double x1, double y0, double y1) {
  if (!(x1 > x0 && y1 > y0)) throw Error(ErrorCode::DomainError, "empty rectangle");
  Domain2D d;
  d.kind = Kind::Rectangle;
  d.x0 = x0;
  d.x1 = x1;
  d.y0 = y0;
  d.y1 = y1;
  d.centre = {0.5 * (x0 + x1), 0.5 * (y0 + y1)};
  return d;
}

Domain2D Domain2D::disk(Vec2 centre, double radius) {
  if (!(radius > 0.0)) throw Error(ErrorCode::DomainError, "disk radius must be positive");
  Domain2D d;
  d.kind = Kind::Disk;
  d.centre = centre;
  d.radius = radius;
  d.x0 = centre.x - radius;
  d.x1 = centre.x + radius;
  d.y0 = centre.y - radius;
  d.y1 = centre.y + radius;
  return d;
}

bool Domain2D::contains(Vec2 p) const {
  if (kind == Kind::Disk) return norm_sq(p - centre) <= radius * radius;
  return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1;
}

double Domain2D::diameter() const {
  if (kind == Kind::Disk) return 2.0 * radius;
  return std::hypot(x1 - x0, y1 - y0);
}

double Domain2D::area() const {
  if (kind == Kind::Disk) return std::numbers::pi * radius * radius;
  return (x1 - x0) * (y1 - y0);
}

Field2D radial_field(const RadialProfile& p) {
  Field2D f;
  f.value = [p](Vec2 x) { return p.value(norm(x)); };
  f.gradient = [p](Vec2 x) -> Vec2 {
    const double r = norm(x);
    if (r == 0.0) return {0.0, 0.0};
    return (p.slope(r) / r) * x;
  };
  f.extends = p.extends();
  return f;
}

Grid2D sample_grid(const std::function<double(Vec2)>& u, const Domain2D& domain, double h) {
  if (!(h > 0.0)) throw Error(ErrorCode::DomainError, "grid spacing must be positive");
  Grid2D g;
  g.h = h;
  g.x0 = domain.x0;
  g.y0 = domain.y0;
  g.nx = static_cast<int>(std::floor((domain.x1 - domain.x0) / h + 1e-9)) + 1;
  g.ny = static_cast<int>(std::floor((domain.y1 - domain.y0) / h + 1e-9)) + 1;
  g.values.assign(static_cast<std::size_t>(g.nx) * g.ny, 0.0);
  g.mask.assign(g.values.size(), 0);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const Vec2 x = g.node(i, j);
      g.at(i, j) = u(x);
      g.mask[static_cast<std::size_t>(j) * g.nx + i] = domain.contains(x) ? 1 : 0;
    }
  }
  return g;
}

Field2D field_from_grid(const Grid2D& grid) {
  // Locate the cell holding x and its local coordinates (s, t) in [0, 1]^2.
  const auto locate = [grid](Vec2 x, int& i, int& j, double& s, double& t) {
    const double fx = (x.x - grid.x0) / grid.h;
    const double fy = (x.y - grid.y0) / grid.h;
    if (fx < 0.0 || fy < 0.0 || fx > grid.nx - 1 || fy > grid.ny - 1) {
      throw Error(ErrorCode::DomainError, "grid field evaluated outside its box");
    }
    i = std::min(static_cast<int>(fx), grid.nx - 2);
    j = std::min(static_cast<int>(fy), grid.ny - 2);
    s = fx - i;
    t = fy - j;
  };
  Field2D f;
  f.value = [grid, locate](Vec2 x) {
    int i, j;
    double s, t;
    locate(x, i, j, s, t);
    return (1 - s) * (1 - t) * grid.at(i, j) + s * (1 - t) * grid.at(i + 1, j) +
           (1 - s) * t * grid.at(i, j + 1) + s * t * grid.at(i + 1, j + 1);
  };
  f.gradient = [grid, locate](Vec2 x) -> Vec2 {
    int i, j;
    double s, t;
    locate(x, i, j, s, t);
    const double gx = ((1 - t) * (grid.at(i + 1, j) - grid.at(i, j)) +
                       t * (grid.at(i + 1, j + 1) - grid.at(i, j + 1))) / grid.h;
    const double gy = ((1 - s) * (grid.at(i, j + 1) - grid.at(i, j)) +
                       s * (grid.at(i + 1, j + 1) - grid.at(i + 1, j))) / grid.h;
    return {gx, gy};
  };
  f.extends = false;
  return f;
}

}  // namespace lnewton

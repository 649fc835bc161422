#pragma once

#include <functional>
#include <vector>

#include "lnewton/lorentz.hpp"
#include "lnewton/profiles.hpp"

namespace lnewton {

/// Rectangle [x0, x1] x [y0, y1] or a closed disk.
struct Domain2D {
  enum class Kind { Rectangle, Disk };

  Kind kind = Kind::Rectangle;
  double x0 = -1.0, x1 = 1.0, y0 = -1.0, y1 = 1.0;
  Vec2 centre{};
  double radius = 1.0;

  static Domain2D rectangle(double x0, double x1, double y0, double y1);
  static Domain2D disk(Vec2 centre, double radius);

  bool contains(Vec2 p) const;
  double diameter() const;
  double area() const;
};

/// A C^1 (or piecewise C^1) height function with its gradient.
/// `extends` says whether value/gradient may be evaluated outside the domain.
struct Field2D {
  std::function<double(Vec2)> value;
  std::function<Vec2(Vec2)> gradient;
  bool extends = true;
};

/// u(x, y) = p(|(x, y)|). The gradient at the axis is taken as 0.
Field2D radial_field(const RadialProfile& p);

/// Uniform grid sample: values(i, j) = u(x0 + i h, y0 + j h), i < nx, j < ny.
/// `mask` marks nodes inside the domain; all true for a rectangle.
struct Grid2D {
  int nx = 0;
  int ny = 0;
  double h = 0.0;
  double x0 = 0.0;
  double y0 = 0.0;
  std::vector<double> values;
  std::vector<char> mask;

  double& at(int i, int j) { return values[static_cast<std::size_t>(j) * nx + i]; }
  double at(int i, int j) const { return values[static_cast<std::size_t>(j) * nx + i]; }
  bool inside(int i, int j) const { return mask[static_cast<std::size_t>(j) * nx + i] != 0; }
  Vec2 node(int i, int j) const { return {x0 + i * h, y0 + j * h}; }
};

/// Samples `u` on the grid of spacing h covering the domain's bounding box.
Grid2D sample_grid(const std::function<double(Vec2)>& u, const Domain2D& domain, double h);

/// Bilinear interpolant of the grid; does not extend past the grid's box.
Field2D field_from_grid(const Grid2D& grid);

}  // namespace lnewton

#pragma once

#include <complex>
#include <string>
#include <vector>

#include "pvreg/geometry.hpp"

namespace pvreg {

/// Position and first two parameter derivatives of the boundary curve.
struct CurvePoint {
  Vec2 pos;
  Vec2 d1;
  Vec2 d2;
  double speed() const { return norm(d1); }
  /// Outward unit normal for a positively oriented curve.
  Vec2 normal() const { return perp(d1) / speed(); }
  double curvature() const { return cross(d1, d2) / std::pow(speed(), 3); }
};

/// Quadrature node over the domain.
struct AreaNode {
  Vec2 x;
  double w;
};

/// Bounded simply connected planar domain with a smooth boundary given by a
/// truncated complex Fourier series z(t) = sum_k c_k e^{ikt}, t in [0, 2pi).
/// Disks are flagged so analytic formulas can be used.
class Domain {
 public:
  enum class Kind { kUnitDisk, kParametric };

  static Domain unit_disk();
  static Domain disk(const Vec2& center, double radius);
  static Domain ellipse(const Vec2& center, double semi_x, double semi_y);
  /// Samples at uniform parameter t_j = 2 pi j / N, positively oriented.
  static Domain from_samples(const std::vector<Vec2>& samples);

  Kind kind() const { return kind_; }
  bool is_disk() const { return disk_; }
  Vec2 center() const { return center_; }
  double radius() const { return radius_; }
  const std::string& name() const { return name_; }

  CurvePoint curve(double t) const;
  std::vector<CurvePoint> boundary_nodes(int n) const;

  double diameter() const { return diameter_; }
  double area() const { return area_; }
  double bigR() const { return big_r_; }
  void set_bigR(double r);

  /// Axis-aligned bounding box: (min corner, max corner).
  std::pair<Vec2, Vec2> bbox() const { return {lo_, hi_}; }

  /// Strict interior test.
  bool contains(const Vec2& x) const;
  /// Interior or within tol of the boundary.
  bool contains_closed(const Vec2& x, double tol = 1e-12) const;
  /// Parameter of the closest boundary point.
  double closest_parameter(const Vec2& x) const;
  /// Unsigned distance to the boundary.
  double boundary_distance(const Vec2& x) const;

  /// Sorted crossing coordinates of the boundary with the line
  /// {y = value} (axis 0, returns x values) or {x = value} (axis 1).
  std::vector<double> line_crossings(int axis, double value) const;

  /// Quadrature over the domain for star-shaped domains (about the centroid).
  std::vector<AreaNode> area_quadrature(int n_t, int n_r) const;

 private:
  Domain() = default;
  void finalize();

  Kind kind_ = Kind::kParametric;
  bool disk_ = false;
  std::string name_;
  Vec2 center_{};
  double radius_ = 0.0;
  std::vector<int> modes_;
  std::vector<std::complex<double>> coef_;
  std::vector<Vec2> table_;  // dense samples for searches
  double diameter_ = 0.0;
  double area_ = 0.0;
  double big_r_ = 0.0;
  Vec2 lo_{}, hi_{};
};

}  // namespace pvreg

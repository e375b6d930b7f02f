#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Sparse>

#include "pvreg/domain.hpp"

namespace pvreg {

enum class BoundaryTreatment { kShortleyWeller, kMaskOnly };
BoundaryTreatment parse_boundary(const std::string& s);
std::string to_string(BoundaryTreatment b);

enum class NodeKind : std::uint8_t { kExterior, kInterior, kBoundaryAdjacent };

/// Region of fine spacing around a point; spacing grows geometrically away
/// from it along each axis.
struct Refinement {
  Vec2 center;
  double radius = 0.0;
  double h = 0.0;
};

struct GridSpec {
  double h = 0.02;  // spacing (coarse spacing when refinements are present)
  std::vector<Refinement> refine;
  double growth = 1.08;
  BoundaryTreatment boundary = BoundaryTreatment::kShortleyWeller;
};

/// Arms in the order east, west, north, south.
enum Dir { kEast = 0, kWest = 1, kNorth = 2, kSouth = 3 };

struct Stencil {
  std::array<int, 4> nb{-1, -1, -1, -1};  // unknown index, or -1 for a boundary value
  std::array<double, 4> arm{};
  std::array<Vec2, 4> foot{};  // position of the neighbour or of the boundary crossing
};

/// Tensor-product grid restricted to the domain. Unknowns are the nodes strictly
/// inside; boundary values enter through the arm lengths.
class Grid {
 public:
  Grid(const Domain& domain, GridSpec spec);

  const Domain& domain() const { return *domain_; }
  const GridSpec& spec() const { return spec_; }
  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& ys() const { return ys_; }
  int nx() const { return static_cast<int>(xs_.size()); }
  int ny() const { return static_cast<int>(ys_.size()); }
  int size() const { return static_cast<int>(col_.size()); }

  /// Unknown index at (i, j), or -1.
  int index(int i, int j) const { return map_[static_cast<std::size_t>(j) * xs_.size() + static_cast<std::size_t>(i)]; }
  NodeKind kind(int i, int j) const;
  int col(int k) const { return col_[static_cast<std::size_t>(k)]; }
  int row(int k) const { return row_[static_cast<std::size_t>(k)]; }
  Vec2 node(int k) const { return {xs_[static_cast<std::size_t>(col(k))], ys_[static_cast<std::size_t>(row(k))]}; }
  const Stencil& stencil(int k) const { return st_[static_cast<std::size_t>(k)]; }
  bool regular(int k) const;  // all four neighbours are unknowns
  /// Control-volume area of node k (cut at the boundary).
  double area(int k) const { return area_[static_cast<std::size_t>(k)]; }
  /// Largest spacing in either axis over the square of half-width r at z.
  double local_spacing(const Vec2& z, double r) const;
  double min_spacing() const;
  double max_spacing() const;

  /// Sparse -Lap_h with homogeneous Dirichlet data.
  const Eigen::SparseMatrix<double>& laplacian() const { return lap_; }
  /// -Lap_h applied to interior values with boundary data bc(x).
  Eigen::VectorXd apply(const Eigen::VectorXd& u,
                        const std::function<double(const Vec2&)>& bc = {}) const;

  /// Samples f at every unknown, in parallel.
  Eigen::VectorXd sample(const std::function<double(const Vec2&)>& f, int threads = 0) const;
  /// Bilinear interpolation with zero extension outside the unknowns.
  double interpolate(const Eigen::VectorXd& u, const Vec2& x) const;
  /// Area-weighted L2 and max norms.
  double norm_l2(const Eigen::VectorXd& v) const;

 private:
  void build_axes();
  void build_nodes();
  void assemble();

  std::shared_ptr<const Domain> domain_;
  GridSpec spec_;
  std::vector<double> xs_, ys_;
  std::vector<int> map_;
  std::vector<int> col_, row_;
  std::vector<Stencil> st_;
  std::vector<double> area_;
  Eigen::SparseMatrix<double> lap_;
};

/// Axis coordinates marched outward from `origin` so that the spacing follows
/// min(h, h_k + (growth - 1) max(0, |x - c_k| - r_k)). Mirror symmetric about
/// origin when the refinements are.
std::vector<double> graded_axis(double lo, double hi, double origin, double h,
                                const std::vector<std::array<double, 3>>& fine, double growth);

/// Runs body(k) for k in [0, n) over worker threads with disjoint ranges.
void parallel_for(int n, int threads, const std::function<void(int, int)>& range_body);

/// A field on a grid: the variable w (rescaled problem) or u (original problem).
struct GridField {
  std::shared_ptr<const Grid> grid;
  Eigen::VectorXd values;
  std::string variable = "w";
  double eps = 0.0;
  double delta = 0.0;
  double p = 2.0;
};

/// Resolution check of the cores: spacing at each core must be at most s/8;
/// between s/8 and s/4 a warning is returned, above s/4 a ResolutionError.
std::vector<std::string> check_resolution(const Grid& grid, const std::vector<Vec2>& centers,
                                          const std::vector<double>& radii);

}  // namespace pvreg

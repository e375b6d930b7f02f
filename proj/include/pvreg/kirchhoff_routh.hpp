#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pvreg/background.hpp"
#include "pvreg/green.hpp"
#include "pvreg/vortex_system.hpp"

namespace pvreg {

/// Kirchhoff-Routh function with psi_0 = -q:
/// W = 1/2 sum_{i != k} c_i c_k G(z_i, z_k) + 1/2 sum kappa_i^2 H(z_i, z_i) - sum c_i q(z_i),
/// c_i = sign_i kappa_i.
double kr_value(const VortexSystem& vs, const GreenEvaluator& ge, const HarmonicBackground& q);

/// Gradient ordered (x_1, y_1, x_2, y_2, ...), positive vortices first.
Eigen::VectorXd kr_grad(const VortexSystem& vs, const GreenEvaluator& ge,
                        const HarmonicBackground& q);

/// Symmetrized central differences of kr_grad.
Eigen::MatrixXd kr_hessian(const VortexSystem& vs, const GreenEvaluator& ge,
                           const HarmonicBackground& q, double step = 0.0);

/// The Phi functional assembled from g and barG.
double phi_value(const VortexSystem& vs, const GreenEvaluator& ge, const HarmonicBackground& q);

struct CriticalOptions {
  double tol = 1e-10;  // scaled by max kappa^2
  int max_iter = 200;
  double degeneracy = 1e-8;
  int max_projection_failures = 20;
};

struct CriticalPointReport {
  std::vector<Vec2> zstar;
  double grad_norm = 0.0;
  std::vector<double> eigenvalues;
  std::string classification;  // nondegenerate-min | -max | -saddle | degenerate
  int iterations = 0;
  double value = 0.0;
  std::vector<std::string> warnings;
};

std::string classify(const std::vector<double>& eigenvalues, double threshold_rel);

/// Levenberg-Marquardt / trust-region Newton on the gradient system, with
/// projection onto the admissible set.
CriticalPointReport find_critical(const VortexSystem& vs, const GreenEvaluator& ge,
                                  const HarmonicBackground& q, const std::vector<Vec2>& z0,
                                  const CriticalOptions& opts = {});

/// Multi-start search; seeds are run as independent tasks and distinct
/// critical points are returned (duplicates merged).
std::vector<CriticalPointReport> find_critical_multistart(
    const VortexSystem& vs, const GreenEvaluator& ge, const HarmonicBackground& q,
    const std::vector<std::vector<Vec2>>& seeds, const CriticalOptions& opts, int threads);

/// Admissible random configurations drawn with a fixed seed.
std::vector<std::vector<Vec2>> random_seeds(const VortexSystem& vs, const Domain& d, int count,
                                            std::uint64_t seed);

struct LandscapeRow {
  Vec2 x;
  double w;
};

/// W as a function of the position of vortex `index`, others held fixed,
/// sampled on an n x n grid over the bounding box (admissible points only).
std::vector<LandscapeRow> kr_landscape(const VortexSystem& vs, const GreenEvaluator& ge,
                                       const HarmonicBackground& q, int index, int n);

}  // namespace pvreg

#pragma once

#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pvreg/ansatz.hpp"
#include "pvreg/background.hpp"
#include "pvreg/grid.hpp"
#include "pvreg/vortex_system.hpp"

namespace pvreg {

enum class Variable { kW, kU };
Variable parse_variable(const std::string& s);
std::string to_string(Variable v);

/// Discrete problem  c (-Lap_h) v = F(v),  with
/// F(v) = sum_i sign_i chi_i (sign_i (v - beta q) - level_i)_+^p.
/// For w: c = delta^2, beta = 2 pi/|ln eps|, level = kappa.
/// For u: c = eps^2,   beta = 1,             level = kappa |ln eps| / 2 pi.
struct EllipticProblem {
  std::shared_ptr<const Grid> grid;
  Variable variable = Variable::kW;
  double eps = 0.0;
  double delta = 0.0;
  double p = 2.0;
  double c = 0.0;
  double beta = 0.0;
  Eigen::VectorXd shift;          // beta q at the nodes
  std::vector<int> owner;         // vortex index per node, -1 outside all subdomains
  std::vector<int> sign;          // per vortex
  std::vector<double> level;      // per vortex
  std::vector<double> subdomain;  // per vortex radius
  std::vector<Vec2> centers;      // per vortex
  double jacobian_cap = 1e12;

  /// Factor converting this variable to w.
  double to_w() const;
};

EllipticProblem make_problem(std::shared_ptr<const Grid> grid, const VortexSystem& vs,
                             const HarmonicBackground& q, double eps, double p, Variable var,
                             int threads = 0);

/// Signed threshold excess of the owning vortex at node k for value v.
double node_excess(const EllipticProblem& pb, int k, double v);

/// F(v) at every node.
Eigen::VectorXd rhs_eval(const EllipticProblem& pb, const Eigen::VectorXd& v);
/// c (-Lap_h) v - F(v).
Eigen::VectorXd residual_eval(const EllipticProblem& pb, const Eigen::VectorXd& v);

struct SolveOptions {
  double tol = 1e-10;  // relative to the norm of F
  int max_iter = 50;
  int picard_max_iter = 500;
  bool chord = true;  // Picard with the Jacobian frozen at the initial field
  int divergence_window = 5;
  int threads = 0;
};

struct SolveReport {
  std::string method;
  int iterations = 0;
  std::vector<double> residual_l2;
  std::vector<double> residual_max;
  std::vector<double> damping;
  bool converged = false;
  double rhs_norm = 0.0;
  double correction_norm = 0.0;  // max |w - ansatz|, filled by the caller
  double contraction_factor = 0.0;
  std::string message;
};

/// Semismooth Newton with backtracking on the area-weighted residual norm.
GridField solve_newton(const EllipticProblem& pb, const Eigen::VectorXd& initial,
                       const SolveOptions& opts, SolveReport& report);

/// Fixed-point iteration v <- v - J0^{-1} r(v) (chord) or v <- (c A)^{-1} F(v).
GridField solve_picard(const EllipticProblem& pb, const Eigen::VectorXd& initial,
                       const SolveOptions& opts, SolveReport& report);

/// The ansatz at the grid nodes in the problem's variable.
Eigen::VectorXd ansatz_initial(const EllipticProblem& pb, const AnsatzField& af, int threads = 0);

/// Warm start on a new grid: new ansatz plus the previous correction carried by
/// interpolation.
Eigen::VectorXd warm_start(const GridField& previous, const Eigen::VectorXd& previous_ansatz,
                           const EllipticProblem& next, const Eigen::VectorXd& next_ansatz);

/// Grid resolution policy for a set of cores.
struct GridPolicy {
  double h = 0.01;              // coarse spacing
  double growth = 1.03;
  int core_cells = 0;           // cells per core radius; 0 selects the automatic rule
  int min_core_cells = 24;
  double resolution_scale = 25.0;
  double refine_factor = 2.0;   // fine region radius in units of s
  bool graded = true;
  BoundaryTreatment boundary = BoundaryTreatment::kShortleyWeller;
};

/// Cells per core radius under the policy for the given cores.
int cells_per_core(const GridPolicy& policy, const CoreParameters& cores);
GridSpec grid_for_cores(const GridPolicy& policy, const VortexSystem& vs, const CoreParameters& cores);

}  // namespace pvreg

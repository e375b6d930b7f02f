#pragma once

#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pvreg/domain.hpp"

namespace pvreg {

enum class GreenBackend { kImages, kBoundaryIntegral };

GreenBackend parse_backend(const std::string& s);
std::string to_string(GreenBackend b);

/// Double-layer density on the Nystrom nodes.
struct LayerDensity {
  Eigen::VectorXd mu;
};

/// Regular part H(., y) for one fixed source y, ready for repeated evaluation.
struct SourceDensity {
  Vec2 y;
  LayerDensity layer;  // unused by the images backend
};

/// Dirichlet Green function of -Lap on the domain,
/// G(x, y) = (1/2pi) ln(1/|x - y|) + H(x, y).
/// Immutable after construction; all methods are thread-safe.
class GreenEvaluator {
 public:
  GreenEvaluator(const Domain& domain, GreenBackend backend, int quadrature_order = 512);

  const Domain& domain() const { return *domain_; }
  GreenBackend backend() const { return backend_; }
  int quadrature_order() const { return n_; }
  double bigR() const { return domain_->bigR(); }

  double G(const Vec2& x, const Vec2& y) const;
  double H(const Vec2& x, const Vec2& y) const;
  /// Robin function H(x, x).
  double robin(const Vec2& x) const;
  /// g(x, z) = ln R - 2 pi H(x, z); x = z allowed.
  double g(const Vec2& x, const Vec2& z) const;
  /// ln(R/|x-y|) - g(x, y) = 2 pi G(x, y).
  double barG(const Vec2& x, const Vec2& y) const;

  /// Gradients with respect to the first argument.
  Vec2 grad_G(const Vec2& x, const Vec2& y) const;
  Vec2 grad_H(const Vec2& x, const Vec2& y) const;
  Vec2 grad_g(const Vec2& x, const Vec2& z) const;
  /// Gradient of x -> H(x, x).
  Vec2 grad_robin(const Vec2& x) const;

  SourceDensity density(const Vec2& y) const;
  double H(const SourceDensity& s, const Vec2& x) const;
  Vec2 grad_H(const SourceDensity& s, const Vec2& x) const;

  /// Interior Dirichlet solve: boundary values at the Nystrom nodes.
  LayerDensity solve_dirichlet(const Eigen::VectorXd& boundary_values) const;
  double eval_layer(const LayerDensity& d, const Vec2& x) const;
  Vec2 grad_layer(const LayerDensity& d, const Vec2& x) const;
  /// Parameters t_j of the Nystrom nodes.
  const std::vector<double>& node_parameters() const { return nodes_->t; }

 private:
  struct Nodes {
    std::vector<double> t;
    std::vector<Vec2> pos;
    std::vector<Vec2> normal;
    std::vector<double> weight;
    double max_panel = 0.0;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu;
  };

  void check_inside(const Vec2& x, const char* what) const;
  double layer_sum(const LayerDensity& d, const Vec2& x, double mu_star, bool subtract) const;
  double trig_interp(const Eigen::VectorXd& mu, double t) const;
  bool near_boundary(const Vec2& x) const;

  std::shared_ptr<const Domain> domain_;
  GreenBackend backend_;
  int n_;
  std::shared_ptr<const Nodes> nodes_;
};

}  // namespace pvreg

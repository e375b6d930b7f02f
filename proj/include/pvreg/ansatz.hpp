#pragma once

#include <string>
#include <vector>

#include "pvreg/background.hpp"
#include "pvreg/green.hpp"
#include "pvreg/radial_profile.hpp"
#include "pvreg/vortex_system.hpp"

namespace pvreg {

/// delta = eps (2 pi / |ln eps|)^{(p-1)/2}
double delta_from_eps(double eps, double p);

/// Per-vortex core radius s and plateau level a (combined index: positive
/// vortices first), plus mu = a / ln(R/s).
struct CoreParameters {
  double eps = 0.0;
  double delta = 0.0;
  double p = 2.0;
  double bigR = 0.0;
  double slope = 0.0;  // |phi'(1)|
  std::vector<double> s;
  std::vector<double> a;
  std::vector<double> mu;
  std::vector<double> radius_residual;  // core-radius equation, relative
  std::vector<double> level_residual;   // plateau-level equation
  int iterations = 0;
  bool multiple = false;
  std::vector<std::string> warnings;

  double log_eps() const;  // |ln eps|
  double core_amplitude(int i) const;  // (delta / s_i)^{2/(p-1)}
  double max_residual() const;
};

/// Truncated profile W_{delta,a} centred at z: a + (delta/s)^{2/(p-1)} phi(r/s)
/// for r <= s, a ln(r/R)/ln(s/R) for s <= r <= R.
double w_delta_eval(double delta, double a, double s, const Vec2& z, const RadialProfile& rp,
                    double bigR, const Vec2& x);

/// Outer minus inner radial slope of W_{delta,a} at r = s.
double w_delta_slope_jump(double delta, double a, double s, const RadialProfile& rp, double bigR);

/// Root in (0, R) of (delta/s)^{2/(p-1)} phi'(1) = a / ln(s/R).
double solve_s(double delta, double a, double bigR, const RadialProfile& rp);

/// Relative residual of the core-radius equation at s.
double core_radius_residual(double delta, double a, double s, double bigR, const RadialProfile& rp);

struct CoreOptions {
  double tol = 1e-13;
  int max_iter = 200;
  bool check_multiplicity = true;
};

/// Alternating scheme: s from the core-radius equation given a, then a from
/// the (linear in a) plateau-level system given s.
CoreParameters solve_core_system(const VortexSystem& vs, const GreenEvaluator& ge,
                                 const HarmonicBackground& q, double eps, const RadialProfile& rp,
                                 const CoreOptions& opts = {});

/// Leading terms of the plateau-level expansion in 1/ln(R/eps).
double level_expansion(const VortexSystem& vs, const GreenEvaluator& ge,
                       const HarmonicBackground& q, double eps, int i);

/// Sum of projected profiles, positive minus negative.
class AnsatzField {
 public:
  AnsatzField(VortexSystem vs, const GreenEvaluator& ge, HarmonicBackground q, RadialProfile rp,
              CoreParameters cores);

  const VortexSystem& vortices() const { return vs_; }
  const CoreParameters& cores() const { return cores_; }
  const RadialProfile& profile() const { return rp_; }
  const GreenEvaluator& green() const { return ge_; }
  const HarmonicBackground& background() const { return q_; }

  /// Checked evaluation (x must lie in the closed domain).
  double eval(const Vec2& x) const;
  double eval_unchecked(const Vec2& x) const;
  /// Projected profile of vortex i (unsigned).
  double summand(int i, const Vec2& x) const;
  Vec2 grad(const Vec2& x) const;
  /// Exact -delta^2 Lap of the field: sum sign_i (W_i - a_i)_+^p.
  double source(const Vec2& x) const;
  /// Threshold excess of vortex i for a field value w at x:
  /// sign_i (w - 2 pi q(x)/|ln eps|) - kappa_i.
  double excess(int i, const Vec2& x, double w) const;

 private:
  VortexSystem vs_;
  GreenEvaluator ge_;
  HarmonicBackground q_;
  RadialProfile rp_;
  CoreParameters cores_;
  std::vector<SourceDensity> dens_;
};

struct SupportBracket {
  double inner = 0.0;  // s (1 - T s)
  double outer = 0.0;  // s (1 + s^sigma)
  double empirical_inner = 0.0;
  double empirical_outer = 0.0;
  bool ok = false;
};

struct SupportOptions {
  double T = 10.0;
  double sigma = 0.1;
  double L = 5.0;
  int rays = 32;
};

/// Predicted support brackets, verified by sampling the ansatz along rays.
/// Throws NumericalError with the empirical bracket when verification fails.
std::vector<SupportBracket> support_predict(const AnsatzField& af, const SupportOptions& opts = {},
                                            bool throw_on_failure = true);

}  // namespace pvreg

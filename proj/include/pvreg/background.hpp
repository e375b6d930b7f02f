#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pvreg/green.hpp"

namespace pvreg {

/// Harmonic background q = -psi_0 on the domain.
class HarmonicBackground {
 public:
  enum class Kind { kZero, kFourierDisk, kHarmonicPolynomial, kBoundaryDensity };

  /// q = offset.
  static HarmonicBackground zero(double offset = 0.0);
  /// q = offset + sum_k (r/rho)^k (a_k cos k theta + b_k sin k theta),
  /// coefficients laid out as [a_1, b_1, a_2, b_2, ...].
  static HarmonicBackground fourier_disk(const Vec2& center, double radius,
                                         std::vector<double> coefficients, double offset = 0.0);
  /// q = offset + sum_k (a_k Re z^k + b_k Im z^k) - mean over the domain.
  static HarmonicBackground harmonic_polynomial(const Domain& domain,
                                                std::vector<double> coefficients,
                                                double offset = 0.0);

  Kind kind() const { return kind_; }
  double offset() const { return offset_; }
  const std::vector<double>& coefficients() const { return coef_; }
  bool is_zero() const;

  double value(const Vec2& x) const;
  Vec2 grad(const Vec2& x) const;

 private:
  friend HarmonicBackground background_from_flux(const GreenEvaluator&,
                                                 const std::vector<double>&, double);
  Kind kind_ = Kind::kZero;
  double offset_ = 0.0;
  double shift_ = 0.0;  // subtracted mean
  std::vector<double> coef_;
  Vec2 center_{};
  double radius_ = 1.0;
  std::shared_ptr<const GreenEvaluator> green_;
  LayerDensity layer_;
};

/// q from the outward boundary flux v_n sampled at uniform curve parameters
/// t_j = 2 pi j / N. Normalized to mean zero over the domain, plus offset.
HarmonicBackground background_from_flux(const GreenEvaluator& ge, const std::vector<double>& vn,
                                        double offset = 0.0);

/// Evaluate sampled flux data at parameter t by trigonometric interpolation.
double flux_at(const std::vector<double>& vn, double t);

}  // namespace pvreg

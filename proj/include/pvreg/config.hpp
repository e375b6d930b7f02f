#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "pvreg/ansatz.hpp"
#include "pvreg/elliptic.hpp"
#include "pvreg/kirchhoff_routh.hpp"
#include "pvreg/radial_profile.hpp"

namespace pvreg {

struct DomainConfig {
  std::string kind = "unit_disk";  // unit_disk | disk | ellipse | samples
  Vec2 center{};
  double radius = 1.0;
  Vec2 semi_axes{1.0, 1.0};
  std::vector<Vec2> samples;
  double bigR = 0.0;  // 0 selects twice the diameter
  std::string backend = "auto";  // auto | images | boundary-integral
  int quadrature_order = 512;
};

struct BackgroundConfig {
  std::string kind = "zero";  // zero | flux | polynomial | fourier
  std::vector<double> vn;
  std::vector<double> coefficients;
  double offset = 0.0;
};

struct EquilibriumConfig {
  bool solve = true;  // false: use the configured positions as given
  std::vector<std::vector<Vec2>> seeds;  // extra starts, positives first
  int random_seeds = 0;
  CriticalOptions options;
  int landscape = 0;  // probe grid size per axis, 0 disables
  int landscape_vortex = 0;
};

struct SolverConfig {
  std::string method = "newton";  // newton | picard
  SolveOptions options;
  Variable variable = Variable::kW;
  double jacobian_cap = 1e12;
  bool continuation = true;
  // Core centres per eps: "reduced" moves them to the critical point of the
  // reduced energy, "equilibrium" keeps the point-vortex equilibrium.
  std::string positions = "reduced";
};

struct RunConfig {
  DomainConfig domain;
  VortexSystem vortices;
  BackgroundConfig background;
  EquilibriumConfig equilibrium;
  ProfileOptions profile;
  double p = 2.0;
  std::vector<double> eps;  // descending
  GridPolicy grid;
  SolverConfig solver;
  SupportOptions support;
  std::string output = "out";
  std::uint64_t seed = 1;
  int threads = 0;

  nlohmann::json effective;  // the validated input, defaults not expanded
  std::string hash;
};

/// FNV-1a over the compact dump of the (key-sorted) JSON.
std::string config_hash(const nlohmann::json& j);

/// Strict parse: unknown keys, wrong types and out-of-range values raise ConfigError.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

Domain build_domain(const DomainConfig& c);
GreenBackend resolve_backend(const DomainConfig& c, const Domain& d);
HarmonicBackground build_background(const BackgroundConfig& c, const Domain& d,
                                    const GreenEvaluator& ge);
/// Configured outward flux at boundary parameter t; derived from q when the
/// background is not given by flux samples.
std::function<double(double)> boundary_flux(const BackgroundConfig& c, const Domain& d,
                                            const HarmonicBackground& q);

}  // namespace pvreg

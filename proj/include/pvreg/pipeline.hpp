#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pvreg/config.hpp"
#include "pvreg/diagnostics.hpp"

namespace pvreg {

std::string tool_version();

/// %.17g
std::string fmt17(double x);

/// Writes to a sibling temporary file, then renames over the target.
void atomic_write(const std::filesystem::path& path, const std::string& content);

/// Simple CSV builder; the first line carries the config hash.
class CsvWriter {
 public:
  CsvWriter(const std::string& hash, const std::vector<std::string>& header);
  void row(const std::vector<double>& values);
  void row(const std::vector<std::string>& cells);
  const std::string& str() const { return buf_; }

 private:
  std::string buf_;
};

/// Reads a CSV written by CsvWriter: returns the rows and the config hash.
std::vector<std::vector<double>> read_csv(const std::filesystem::path& path, std::string* hash = nullptr);

struct StageRecord {
  std::string name;
  std::vector<std::string> artifacts;
  double wall_seconds = 0.0;
  std::string status = "ok";  // ok | failed | partial
  std::string message;
};

struct RunManifest {
  std::string config_hash;
  std::string version;
  std::vector<StageRecord> stages;
  nlohmann::json to_json() const;
};

/// Per-eps state carried from the core stage through verification.
struct EpsRun {
  int index = 0;
  double eps = 0.0;
  VortexSystem vortices;  // core centres used for this eps
  double position_shift = 0.0;  // max distance from the equilibrium
  CoreParameters cores;
  std::vector<SupportBracket> brackets;
  std::shared_ptr<const Grid> grid;
  std::optional<EllipticProblem> problem;
  Eigen::VectorXd ansatz;  // problem variable
  std::optional<GridField> field;
  SolveReport report;
  double correction_max = 0.0;  // in w
  std::vector<std::string> warnings;
  std::string error;
  std::string failed_stage;
};

/// The equilibrium -> profile -> cores -> solve -> verify chain.
class Pipeline {
 public:
  explicit Pipeline(RunConfig cfg);

  const RunConfig& config() const { return cfg_; }
  const Domain& domain() const { return *domain_; }
  const GreenEvaluator& green() const { return *ge_; }
  const HarmonicBackground& background() const { return q_; }
  const VortexSystem& vortices() const { return vs_; }
  const RadialProfile& profile() const { return rp_; }
  std::vector<EpsRun>& runs() { return runs_; }
  const RunManifest& manifest() const { return manifest_; }
  const std::filesystem::path& out_dir() const { return out_; }
  /// When set, per-eps failures are recorded and the remaining entries attempted.
  void set_tolerant(bool t) { tolerant_ = t; }
  bool any_failed() const;

  void equilibrium(bool write = true);
  void profile_stage(bool write = true);
  void cores(bool write = true);
  void solve(bool write = true);
  /// Loads the field files written by solve() for each eps.
  void load_fields();
  void verify(bool write = true);
  void write_manifest();

  /// Name of the stage that is running or failed last.
  const std::string& current_stage() const { return stage_; }

 private:
  StageRecord& begin(const std::string& name);
  void end(StageRecord& rec, double t0);
  std::string artifact(const std::string& name, const std::string& content);
  void build_problem(EpsRun& r);
  nlohmann::json base_json() const;

  RunConfig cfg_;
  std::filesystem::path out_;
  std::shared_ptr<Domain> domain_;
  std::shared_ptr<GreenEvaluator> ge_;
  HarmonicBackground q_;
  VortexSystem vs_;
  RadialProfile rp_;
  bool have_profile_ = false;
  bool have_equilibrium_ = false;
  std::vector<EpsRun> runs_;
  RunManifest manifest_;
  std::string stage_;
  bool tolerant_ = false;
  StageRecord* rec_ = nullptr;
};

}  // namespace pvreg

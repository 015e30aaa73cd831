#ifndef TAPERGP_EXPERIMENTS_HPP
#define TAPERGP_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tapergp/config.hpp"
#include "tapergp/covmodel.hpp"
#include "tapergp/taper.hpp"
#include "tapergp/types.hpp"

namespace tapergp {

enum class ScenarioMode { estimate, mspe_curve, predict, theorem1, theorem2, simulate };

ScenarioMode scenario_mode_from_name(const std::string& name);
std::string scenario_mode_name(ScenarioMode mode);

struct Scenario {
  std::string name;
  ScenarioMode mode = ScenarioMode::estimate;
  std::string model = "A";
  TaperFamily family = TaperFamily::wendland1;
  std::vector<double> gammas;      // may contain inf
  std::vector<int> m_list;         // grid sizes; zipped with gammas for the
                                   // theorem modes, crossed otherwise
  double delta = 1.0;
  double spacing = 1.0;
  std::uint64_t seed = 1;
  int n_rep = 100;
  int n_mc = 100;                  // theorem2 integration sites
  bool plugin = false;             // predict with one-taper ML estimates
  std::string theta_grid = "axis"; // axis | lattice (theorem1)
  double theta_scale = 0.2;
  int budget = 2000;               // optimizer evaluations per fit
  int threads = 0;                 // 0 = hardware
  int dense_cap = kDefaultDenseCap;
  std::optional<std::string> locations_csv;
  std::uint64_t config_hash = 0;
  std::vector<std::pair<std::string, double>> param_overrides;

  void validate() const;  // throws ConfigError
};

Scenario scenario_from_config(const Config& cfg);

// Tidy result table; cells are preformatted so CSV bytes are reproducible.
struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  int col(const std::string& name) const;  // -1 when absent
  void write_csv(const std::string& path) const;
  std::string to_csv() const;
};

std::string fmt_num(double v);

ResultTable run_scenario(const Scenario& s);

// Per-group {5,25,50,75,95}% quantiles (type-7 interpolation) of value_cols.
ResultTable summarize(const ResultTable& table, const std::vector<std::string>& group_cols,
                      const std::vector<std::string>& value_cols);

// Writes <out>/<name>.csv plus <out>/<name>_meta.txt (seed, config hash,
// version, columns). Returns the CSV path.
std::string write_scenario_outputs(const Scenario& s, const ResultTable& table,
                                   const std::string& out_dir);

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tapergp

#endif

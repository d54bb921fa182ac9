#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace cellsched {

// Scenario parameters shared by every scheduler. Validated on construction
// via validate(); all schedulers assume a valid config.
struct ScenarioConfig {
  int Q = 1;                        // cells
  int K = 1;                        // users
  int M = 1;                        // subcarriers
  double B = 15e3;                  // per-subcarrier bandwidth [Hz]
  double N0 = 1e-17;                // noise PSD [W/Hz]
  double cell_radius = 500.0;       // [m]
  double pathloss_exponent = 3.5;
  double pathloss_ref_gain = 1.0;   // linear gain at 1 m
  double min_distance = 35.0;       // [m], users keep this far from every BS
  double fading_correlation = 0.0;  // AR(1) coefficient across subcarriers
  double p_max = 1.0;               // per-subcarrier power cap [W]
  std::uint64_t seed = 0;
  bool unit_fading = false;         // debug knob: freeze fading power at 1

  // Throws ConfigError naming the offending field.
  void validate() const;
};

// One fading/geometry draw. Immutable after generate_scenario(); shareable
// across threads.
struct ChannelRealization {
  // gains[k](m, q): linear power gain user k <- cell q on subcarrier m
  std::vector<Eigen::MatrixXd> gains;
  std::vector<Eigen::Vector2d> user_positions;
  std::vector<Eigen::Vector2d> cell_positions;
  std::vector<int> home_cell;  // nearest cell per user, ties to lowest index
  ScenarioConfig config;

  int users() const { return static_cast<int>(gains.size()); }
  int carriers() const { return config.M; }
  int cells() const { return config.Q; }
};

// Floor applied to every channel gain so Eq.-style power ratios stay finite.
inline constexpr double kGainFloor = 1e-30;

// ref_gain * distance^(-exponent); throws std::domain_error below min_distance.
double pathloss_gain(double distance, double exponent, double ref_gain,
                     double min_distance = 0.0);

// argmin distance over cells, ties to the lowest cell index
int nearest_cell(const Eigen::Vector2d& pos,
                 const std::vector<Eigen::Vector2d>& cells);

// Deterministic function of (config.seed, drop_id): cells on a square grid
// with inter-site distance 2*cell_radius, users uniform in per-cell disks,
// Rayleigh fading with AR(1) correlation across subcarriers.
ChannelRealization generate_scenario(const ScenarioConfig& config,
                                     std::uint64_t drop_id);

}  // namespace cellsched

#include "cellsched/scenario.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cellsched/errors.hpp"
#include "cellsched/rng.hpp"

namespace cellsched {

namespace {

// stream tags keep placement and fading draws in disjoint substreams
constexpr std::uint64_t kStreamPlacement = 0x706c6163ULL;  // "plac"
constexpr std::uint64_t kStreamFading = 0x66616465ULL;     // "fade"

void require(bool ok, const std::string& field, const std::string& why) {
  if (!ok) throw ConfigError("scenario." + field + ": " + why);
}

}  // namespace

void ScenarioConfig::validate() const {
  require(Q >= 1, "Q", "must be >= 1");
  require(K >= 1, "K", "must be >= 1");
  require(M >= 1, "M", "must be >= 1");
  require(B > 0, "B", "must be > 0");
  require(N0 > 0, "N0", "must be > 0");
  require(cell_radius > 0, "cell_radius", "must be > 0");
  require(pathloss_exponent > 0, "pathloss_exponent", "must be > 0");
  require(pathloss_ref_gain > 0, "pathloss_ref_gain", "must be > 0");
  require(min_distance > 0, "min_distance", "must be > 0");
  require(min_distance < cell_radius, "min_distance",
          "must be < cell_radius");
  require(fading_correlation >= 0 && fading_correlation < 1,
          "fading_correlation", "must be in [0, 1)");
  require(p_max > 0, "p_max", "must be > 0");
}

double pathloss_gain(double distance, double exponent, double ref_gain,
                     double min_distance) {
  if (distance < min_distance) {
    throw std::domain_error("pathloss_gain: distance " +
                            std::to_string(distance) + " below minimum " +
                            std::to_string(min_distance));
  }
  return ref_gain * std::pow(distance, -exponent);
}

int nearest_cell(const Eigen::Vector2d& pos,
                 const std::vector<Eigen::Vector2d>& cells) {
  int best = 0;
  double best_d2 = (pos - cells[0]).squaredNorm();
  for (int q = 1; q < static_cast<int>(cells.size()); ++q) {
    const double d2 = (pos - cells[q]).squaredNorm();
    if (d2 < best_d2) {
      best_d2 = d2;
      best = q;
    }
  }
  return best;
}

ChannelRealization generate_scenario(const ScenarioConfig& config,
                                     std::uint64_t drop_id) {
  config.validate();
  const int Q = config.Q, K = config.K, M = config.M;

  ChannelRealization ch;
  ch.config = config;

  // square grid, inter-site distance 2*cell_radius, row-major fill
  const int side = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(Q))));
  ch.cell_positions.reserve(Q);
  for (int q = 0; q < Q; ++q) {
    const double x = 2.0 * config.cell_radius * (q % side);
    const double y = 2.0 * config.cell_radius * (q / side);
    ch.cell_positions.emplace_back(x, y);
  }

  // users: pick a cell uniformly, then a uniform point in its disk, redrawn
  // until the point clears min_distance from every BS
  ch.user_positions.reserve(K);
  ch.home_cell.reserve(K);
  for (int k = 0; k < K; ++k) {
    SplitMix64 rng(stream_seed(config.seed, drop_id, kStreamPlacement,
                               static_cast<std::uint64_t>(k)));
    Eigen::Vector2d pos;
    for (;;) {
      const int cell = static_cast<int>(rng.below(static_cast<std::uint64_t>(Q)));
      const double r = config.cell_radius * std::sqrt(rng.uniform());
      const double a = 6.283185307179586476925286766559 * rng.uniform();
      pos = ch.cell_positions[cell] +
            Eigen::Vector2d(r * std::cos(a), r * std::sin(a));
      bool clear = true;
      for (const auto& c : ch.cell_positions) {
        if ((pos - c).norm() < config.min_distance) {
          clear = false;
          break;
        }
      }
      if (clear) break;
    }
    ch.user_positions.push_back(pos);
    ch.home_cell.push_back(nearest_cell(pos, ch.cell_positions));
  }

  // Rayleigh fading, AR(1) across adjacent subcarriers per (user, cell) link:
  // h[m+1] = rho*h[m] + sqrt(1-rho^2)*w, h and w ~ CN(0,1), gain = |h|^2
  const double rho = config.fading_correlation;
  const double innov = std::sqrt(1.0 - rho * rho);
  ch.gains.assign(K, Eigen::MatrixXd(M, Q));
  for (int k = 0; k < K; ++k) {
    for (int q = 0; q < Q; ++q) {
      const double dist = (ch.user_positions[k] - ch.cell_positions[q]).norm();
      const double pl = pathloss_gain(dist, config.pathloss_exponent,
                                      config.pathloss_ref_gain,
                                      config.min_distance);
      if (config.unit_fading) {
        for (int m = 0; m < M; ++m) {
          ch.gains[k](m, q) = std::max(pl, kGainFloor);
        }
        continue;
      }
      SplitMix64 rng(stream_seed(config.seed, drop_id, kStreamFading,
                                 static_cast<std::uint64_t>(k),
                                 static_cast<std::uint64_t>(q)));
      double re, im;
      rng.gaussian_pair(re, im);
      double hr = re * M_SQRT1_2, hi = im * M_SQRT1_2;
      for (int m = 0; m < M; ++m) {
        ch.gains[k](m, q) = std::max(pl * (hr * hr + hi * hi), kGainFloor);
        if (m + 1 < M) {
          rng.gaussian_pair(re, im);
          hr = rho * hr + innov * re * M_SQRT1_2;
          hi = rho * hi + innov * im * M_SQRT1_2;
        }
      }
    }
  }
  return ch;
}

}  // namespace cellsched

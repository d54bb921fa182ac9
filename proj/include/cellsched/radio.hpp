#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "cellsched/scenario.hpp"

namespace cellsched {

// Transmit power per (subcarrier m, cell q), watts. Row m, column q.
using PowerMatrix = Eigen::MatrixXd;

// Fixed transmission format: spectral efficiency eta0 and the linear SINR
// target gamma = 2^eta0 - 1 it requires.
struct SinrTarget {
  double eta0;
  double gamma;

  static SinrTarget from_eta0(double eta0);
};

// One scheduled downlink link: cell q serves user k on subcarrier m.
struct Link {
  int k;
  int m;
  int q;
};

struct PowerControlResult {
  PowerMatrix power;                          // M x Q, zero where inactive
  std::vector<Link> surviving;                // links that met the target
  std::vector<std::pair<int, int>> switched_off;  // (m, q) of dropped links
  int iterations = 0;                         // fixed-point steps, all phases
};

// Multiple-access interference seen by user k on subcarrier m when served by
// cell q: sum over j != q of p(m, j) * G[k](m, j).
double mai(const ChannelRealization& ch, const PowerMatrix& p, int k, int m,
           int q);

double sinr(const ChannelRealization& ch, const PowerMatrix& p, int k, int m,
            int q);

// log2(1 + sinr), bits/s/Hz
double rate(const ChannelRealization& ch, const PowerMatrix& p, int k, int m,
            int q);

// Flat-interference approximation of the rate, used when per-user
// interference feedback is unavailable.
double rate_approx(double g_serving, double p_serving, double i_flat, double B,
                   double N0);

// Power that meets the SINR target given gain and interference;
// throws std::domain_error when g <= 0.
double required_power(const SinrTarget& target, double g, double interference,
                      double B, double N0);

// Synchronous fixed-point power control with per-subcarrier cap. Links that
// cannot meet gamma*(1 - tol) at p_max are switched off and iteration
// restarts until every survivor meets the target. At most one active link
// per (m, q).
PowerControlResult iterative_power_control(const ChannelRealization& ch,
                                           const std::vector<Link>& links,
                                           const SinrTarget& target,
                                           double p_max, double tol = 1e-8,
                                           int max_iter = 500);

}  // namespace cellsched

#include "cellsched/radio.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cellsched/errors.hpp"

namespace cellsched {

SinrTarget SinrTarget::from_eta0(double eta0) {
  if (!(eta0 > 0)) throw ConfigError("eta0: must be > 0");
  return SinrTarget{eta0, std::exp2(eta0) - 1.0};
}

double mai(const ChannelRealization& ch, const PowerMatrix& p, int k, int m,
           int q) {
  double acc = 0.0;
  for (int j = 0; j < ch.cells(); ++j) {
    if (j == q) continue;
    acc += p(m, j) * ch.gains[k](m, j);
  }
  return acc;
}

double sinr(const ChannelRealization& ch, const PowerMatrix& p, int k, int m,
            int q) {
  const double noise = ch.config.B * ch.config.N0;
  return ch.gains[k](m, q) * p(m, q) / (mai(ch, p, k, m, q) + noise);
}

double rate(const ChannelRealization& ch, const PowerMatrix& p, int k, int m,
            int q) {
  return std::log2(1.0 + sinr(ch, p, k, m, q));
}

double rate_approx(double g_serving, double p_serving, double i_flat, double B,
                   double N0) {
  return std::log2(1.0 + g_serving * p_serving / (i_flat + B * N0));
}

double required_power(const SinrTarget& target, double g, double interference,
                      double B, double N0) {
  if (!(g > 0)) {
    throw std::domain_error("required_power: channel gain must be > 0");
  }
  return target.gamma * (B * N0 + interference) / g;
}

PowerControlResult iterative_power_control(const ChannelRealization& ch,
                                           const std::vector<Link>& links,
                                           const SinrTarget& target,
                                           double p_max, double tol,
                                           int max_iter) {
  const int M = ch.carriers(), Q = ch.cells();
  {
    Eigen::MatrixXi seen = Eigen::MatrixXi::Zero(M, Q);
    for (const Link& l : links) {
      if (seen(l.m, l.q)++) {
        throw std::invalid_argument(
            "iterative_power_control: multiple links on one (m, q)");
      }
    }
  }

  PowerControlResult out;
  out.power = PowerMatrix::Zero(M, Q);
  std::vector<Link> active = links;
  const double B = ch.config.B, N0 = ch.config.N0;
  const double floor_sinr = target.gamma * (1.0 - tol);

  while (!active.empty()) {
    // synchronous fixed point p <- min(p_max, required_power(mai(p)))
    for (int it = 0; it < max_iter; ++it) {
      ++out.iterations;
      double max_rel = 0.0;
      std::vector<double> fresh(active.size());
      for (std::size_t i = 0; i < active.size(); ++i) {
        const Link& l = active[i];
        const double interference = mai(ch, out.power, l.k, l.m, l.q);
        const double req =
            required_power(target, ch.gains[l.k](l.m, l.q), interference, B, N0);
        fresh[i] = std::min(p_max, req);
        const double old = out.power(l.m, l.q);
        const double scale = std::max({old, fresh[i], 1e-300});
        max_rel = std::max(max_rel, std::abs(fresh[i] - old) / scale);
      }
      for (std::size_t i = 0; i < active.size(); ++i) {
        out.power(active[i].m, active[i].q) = fresh[i];
      }
      if (max_rel < tol) break;
    }

    // drop links that still miss the target; capped ones first, and if the
    // iteration budget ran out before the cap bound anyone, the worst link
    std::vector<std::size_t> failing;
    for (std::size_t i = 0; i < active.size(); ++i) {
      const Link& l = active[i];
      if (sinr(ch, out.power, l.k, l.m, l.q) < floor_sinr) failing.push_back(i);
    }
    if (failing.empty()) break;

    std::vector<std::size_t> drop;
    for (std::size_t i : failing) {
      if (out.power(active[i].m, active[i].q) >= p_max) drop.push_back(i);
    }
    if (drop.empty()) {
      std::size_t worst = failing.front();
      double worst_sinr = sinr(ch, out.power, active[worst].k, active[worst].m,
                               active[worst].q);
      for (std::size_t i : failing) {
        const double s = sinr(ch, out.power, active[i].k, active[i].m,
                              active[i].q);
        if (s < worst_sinr) {
          worst_sinr = s;
          worst = i;
        }
      }
      drop.push_back(worst);
    }
    for (auto it = drop.rbegin(); it != drop.rend(); ++it) {
      const Link& l = active[*it];
      out.power(l.m, l.q) = 0.0;
      out.switched_off.emplace_back(l.m, l.q);
      active.erase(active.begin() + static_cast<std::ptrdiff_t>(*it));
    }
  }

  out.surviving = std::move(active);
  return out;
}

}  // namespace cellsched

#include "celent/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <tuple>

#include "celent/error.hpp"
#include "parallel.hpp"

namespace celent {
namespace {

// Step used by compare, as a fraction of the fastest rate.
constexpr double kCompareStepFraction = 0.02;
constexpr double kCompareMaxStep = 1e-3;
constexpr double kMaxDrawTime = 30.0;

double rate_scale(const SpectralData& s, double kappa) noexcept {
  const Matrix2 l = drift_matrix(s);
  return std::max({std::abs(s.mu_plus), std::abs(s.mu_minus), kappa, std::abs(l.a11),
                   std::abs(l.a12), std::abs(l.a21), std::abs(l.a22)});
}

MomentState rk4_step(const Matrix2& l, const DiffusionData& d, const MomentState& s, double h) {
  const auto shifted = [&](const MomentRate& k, double f) {
    return MomentState{s.t + f * h, s.n_a + f * h * k.dn_a, s.n_b + f * h * k.dn_b,
                       s.c_ab + f * h * k.dc_ab};
  };
  const MomentRate k1 = moment_rhs(l, d, s);
  const MomentRate k2 = moment_rhs(l, d, shifted(k1, 0.5));
  const MomentRate k3 = moment_rhs(l, d, shifted(k2, 0.5));
  const MomentRate k4 = moment_rhs(l, d, shifted(k3, 1.0));
  MomentState out;
  out.t = s.t + h;
  out.n_a = s.n_a + h / 6.0 * (k1.dn_a + 2.0 * k2.dn_a + 2.0 * k3.dn_a + k4.dn_a);
  out.n_b = s.n_b + h / 6.0 * (k1.dn_b + 2.0 * k2.dn_b + 2.0 * k3.dn_b + k4.dn_b);
  out.c_ab = s.c_ab + h / 6.0 * (k1.dc_ab + 2.0 * k2.dc_ab + 2.0 * k3.dc_ab + k4.dc_ab);
  return out;
}

std::size_t steps_for(double span, double dt) {
  return static_cast<std::size_t>(std::ceil(span / dt - 1e-9));
}

}  // namespace

MomentRate moment_rhs(const Matrix2& l, const DiffusionData& d, const MomentState& s) noexcept {
  MomentRate r;
  r.dn_a = -2.0 * l.a11 * s.n_a - 2.0 * l.a12 * s.c_ab + d.d_aa;
  r.dn_b = -2.0 * l.a22 * s.n_b - 2.0 * l.a21 * s.c_ab + d.d_bb;
  r.dc_ab = -(l.a11 + l.a22) * s.c_ab - l.a21 * s.n_a - l.a12 * s.n_b + d.d_ab;
  return r;
}

double max_stable_step(const SpectralData& s, double kappa) noexcept {
  return 0.1 / rate_scale(s, kappa);
}

MomentState advance(const Matrix2& lambda, const DiffusionData& d, MomentState from, double t_to,
                    double dt) noexcept {
  const double span = t_to - from.t;
  if (span <= 0.0) return from;
  const std::size_t n = steps_for(span, dt);
  const double h = span / static_cast<double>(n);
  const double t0 = from.t;
  for (std::size_t i = 0; i < n; ++i) {
    from = rk4_step(lambda, d, from, h);
    from.t = t0 + h * static_cast<double>(i + 1);
  }
  from.t = t_to;
  return from;
}

std::vector<MomentState> integrate_moments(const SystemParams& p, double t_end, double dt,
                                           Stability stability) {
  if (std::isnan(t_end) || t_end < 0.0) {
    throw Error(ErrorCode::kNegativeTime, "t_end = " + std::to_string(t_end));
  }
  const SystemParams v = validate_params(p);
  const DerivedParams dp = derive_dimensionless(v);
  const SpectralData s = spectral_data(dp, v, stability);
  const double limit = max_stable_step(s, v.kappa);
  if (!(dt > 0.0) || dt > limit) {
    throw Error(ErrorCode::kStepTooLarge,
                "dt = " + std::to_string(dt) + " exceeds " + std::to_string(limit));
  }
  const Matrix2 l = drift_matrix(s);
  const DiffusionData d = noise_strengths(dp, v);

  std::vector<MomentState> out{MomentState{}};
  if (t_end == 0.0) return out;
  const std::size_t n = steps_for(t_end, dt);
  const double h = t_end / static_cast<double>(n);
  out.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    MomentState next = rk4_step(l, d, out.back(), h);
    next.t = (i + 1 == n) ? t_end : h * static_cast<double>(i + 1);
    out.push_back(next);
  }
  return out;
}

ClosedForm default_closed_form() {
  return [](const SystemParams& p, double t) { return second_moments(p, t); };
}

ComparisonReport compare(const std::vector<GridPoint>& grid, double tolerance,
                         const ClosedForm& closed) {
  ComparisonReport rep;
  rep.grid = grid;
  rep.tolerance = tolerance;

  // Group by parameter set so each trajectory is integrated once.
  std::vector<std::size_t> order(grid.size());
  std::iota(order.begin(), order.end(), 0);
  const auto key = [&](std::size_t i) {
    const SystemParams& q = grid[i].params;
    return std::make_tuple(q.kappa, q.gamma, q.omega, q.theta, q.gain_a, grid[i].t);
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  std::vector<std::pair<std::size_t, std::size_t>> groups;  // [begin, end) into order
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i + 1;
    while (j < order.size() && grid[order[j]].params == grid[order[i]].params) ++j;
    groups.emplace_back(i, j);
    i = j;
  }

  std::vector<std::array<double, 3>> errors(grid.size(), {0.0, 0.0, 0.0});
  detail::parallel_for(groups.size(), [&](std::size_t g) {
    const auto [begin, end] = groups[g];
    const SystemParams& p = grid[order[begin]].params;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    try {
      const SystemParams v = validate_params(p);
      const DerivedParams dp = derive_dimensionless(v);
      const SpectralData s = spectral_data(dp, v, Stability::kAllowGrowth);
      const Matrix2 l = drift_matrix(s);
      const DiffusionData d = noise_strengths(dp, v);
      const double dt = std::min(kCompareMaxStep, kCompareStepFraction / rate_scale(s, v.kappa));
      MomentState state;
      for (std::size_t k = begin; k < end; ++k) {
        const std::size_t idx = order[k];
        state = advance(l, d, state, grid[idx].t, dt);
        const SecondMoments cf = closed(p, grid[idx].t);
        const double ode[3] = {state.n_a, state.n_b, state.c_ab};
        const double got[3] = {cf.n_a, cf.n_b, cf.c_ab};
        for (int c = 0; c < 3; ++c) {
          const double err = std::abs(got[c] - ode[c]) / (1.0 + std::abs(ode[c]));
          errors[idx][c] = std::isnan(err) ? std::numeric_limits<double>::infinity() : err;
        }
      }
    } catch (const Error&) {
      for (std::size_t k = begin; k < end; ++k) errors[order[k]] = {nan, nan, nan};
    }
  });

  rep.pass = !grid.empty();
  for (int c = 0; c < 3; ++c) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double e = errors[i][c];
      // NaN marks a point neither path could evaluate; treat it as worst.
      const double ranked = std::isnan(e) ? std::numeric_limits<double>::infinity() : e;
      if (ranked > rep.max_rel_err[c] || i == 0) {
        rep.max_rel_err[c] = ranked;
        rep.worst_index[c] = i;
      }
    }
    if (!(rep.max_rel_err[c] <= tolerance)) rep.pass = false;
  }
  return rep;
}

namespace {

double pick(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

void add_times(std::vector<GridPoint>& out, const SystemParams& p, std::size_t count,
               std::mt19937_64& rng) {
  std::vector<double> ts(count);
  for (double& t : ts) t = pick(rng, 0.0, kMaxDrawTime);
  std::sort(ts.begin(), ts.end());
  for (double t : ts) out.push_back({p, t});
}

}  // namespace

std::vector<GridPoint> random_stable_grid(std::size_t draws, std::size_t times_per_draw,
                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<GridPoint> out;
  out.reserve(draws * times_per_draw);
  std::size_t accepted = 0;
  while (accepted < draws) {
    SystemParams p;
    p.kappa = pick(rng, 0.2, 2.0);
    p.gamma = pick(rng, 0.3, 1.5);
    p.omega = pick(rng, 0.0, 1.0) < 0.5 ? 0.0 : pick(rng, 0.0, 12.0);
    p.theta = pick(rng, 0.0, 1.2);
    p.gain_a = pick(rng, 2.0, 50.0);
    const SpectralData s = spectral_data(p, Stability::kAllowGrowth);
    if (s.regime == Regime::kDegenerate || s.min_decay_rate() <= 0.01) continue;
    add_times(out, p, times_per_draw, rng);
    ++accepted;
  }
  return out;
}

std::vector<GridPoint> degenerate_band_grid(std::size_t draws, std::size_t times_per_draw,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<GridPoint> out;
  out.reserve(draws * times_per_draw);
  std::size_t accepted = 0;
  while (accepted < draws) {
    SystemParams p;
    p.kappa = pick(rng, 0.2, 2.0);
    p.gain_a = pick(rng, 2.0, 50.0);
    if (accepted % 2 == 0) {
      // undriven: the band is gamma = e^{-theta} up to a relative shift
      p.omega = 0.0;
      p.theta = pick(rng, 0.0, 1.0);
      p.gamma = std::exp(-p.theta) * (1.0 + pick(rng, -4e-10, 4e-10));
    } else {
      // weak drive: fix omega and gamma, then solve for theta
      p.omega = pick(rng, 0.0, 0.3);
      p.gamma = pick(rng, 0.3, 0.8);
      const double z = p.omega / p.gamma;
      const double t1 = p.omega * (1.0 + z * p.omega);
      const double t2 = 2.0 * (p.omega * p.omega + p.gamma);
      const double e = std::hypot(t1, t2) / std::abs(2.0 - p.omega * z);
      if (!(e > 0.0 && e <= 1.0)) continue;
      p.theta = -std::log(e);
    }
    const SpectralData s = spectral_data(p, Stability::kAllowGrowth);
    if (s.regime != Regime::kDegenerate || s.min_decay_rate() <= 0.01) continue;
    add_times(out, p, times_per_draw, rng);
    ++accepted;
  }
  return out;
}

}  // namespace celent

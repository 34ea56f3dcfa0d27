#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "celent/dynamics.hpp"
#include "celent/params.hpp"

namespace celent {

/// Independent entries of the moment matrix of (alpha, beta*).
struct MomentState {
  double t = 0.0;
  double n_a = 0.0;
  double n_b = 0.0;
  double c_ab = 0.0;
};

struct MomentRate {
  double dn_a = 0.0;
  double dn_b = 0.0;
  double dc_ab = 0.0;
};

/// dN/dt = -Lambda N - N Lambda^T + D.
MomentRate moment_rhs(const Matrix2& lambda, const DiffusionData& d, const MomentState& s) noexcept;

/// Largest step integrate_moments accepts for these parameters.
double max_stable_step(const SpectralData& s, double kappa) noexcept;

/// Classical RK4 from vacuum. The step is shrunk uniformly so the last
/// sample lands on t_end. Throws StepTooLarge, NegativeTime.
std::vector<MomentState> integrate_moments(const SystemParams& p, double t_end, double dt,
                                           Stability stability = Stability::kRequireDecay);

/// RK4 from `from` to time t_to with steps no longer than dt.
MomentState advance(const Matrix2& lambda, const DiffusionData& d, MomentState from, double t_to,
                    double dt) noexcept;

struct GridPoint {
  SystemParams params;
  double t = 0.0;
};

inline constexpr std::array<std::string_view, 3> kMomentComponents = {"n_a", "n_b", "c_ab"};

struct ComparisonReport {
  std::vector<GridPoint> grid;
  double tolerance = 0.0;
  /// Indexed like kMomentComponents; error relative to 1 + |ode value|.
  std::array<double, 3> max_rel_err{};
  std::array<std::size_t, 3> worst_index{};
  bool pass = false;
};

using ClosedForm = std::function<SecondMoments(const SystemParams&, double)>;

/// The closed form under test; defaults to second_moments.
ClosedForm default_closed_form();

/// Evaluates both paths on every grid point. Failures are reported, never thrown.
ComparisonReport compare(const std::vector<GridPoint>& grid, double tolerance,
                         const ClosedForm& closed = default_closed_form());

/// Decaying, non-degenerate parameter draws with `times_per_draw` times each.
std::vector<GridPoint> random_stable_grid(std::size_t draws, std::size_t times_per_draw,
                                          std::uint64_t seed);

/// Draws on (or within rounding of) the degenerate line.
std::vector<GridPoint> degenerate_band_grid(std::size_t draws, std::size_t times_per_draw,
                                            std::uint64_t seed);

}  // namespace celent

#pragma once

#include <complex>
#include <limits>

#include "celent/params.hpp"

namespace celent {

inline constexpr double kSteadyStateTime = std::numeric_limits<double>::infinity();

/// Coefficients of the homogeneous solution acting on (alpha, beta*).
struct PropagatorCoeffs {
  double t = 0.0;
  std::complex<double> c_plus{1.0, 0.0};
  std::complex<double> c_minus{1.0, 0.0};
  std::complex<double> d_plus{0.0, 0.0};
  std::complex<double> d_minus{0.0, 0.0};
};

/// sinh(z)/z, with a short series near the origin.
std::complex<double> sinhc(std::complex<double> z) noexcept;

/// Throws NegativeTime for t < 0.
PropagatorCoeffs propagator(const SpectralData& s, double t);

/// Row-major 2x2 real matrix.
struct Matrix2 {
  double a11 = 0.0, a12 = 0.0, a21 = 0.0, a22 = 0.0;

  double trace() const noexcept { return a11 + a22; }
  double det() const noexcept { return a11 * a22 - a12 * a21; }
};

/// Generator of the propagator: G(t) = exp(-Lambda t).
Matrix2 drift_matrix(const SpectralData& s) noexcept;

struct SecondMoments {
  double t = 0.0;
  double n_a = 0.0;   // <alpha* alpha>
  double n_b = 0.0;   // <beta* beta>
  double c_ab = 0.0;  // <alpha beta>, equal to its conjugate
  /// n_a n_b - c_ab^2, evaluated without the cancellation the direct
  /// product suffers once modes grow.
  double det = 0.0;
  /// Largest imaginary part discarded when the moments were made real.
  double imag_residual = 0.0;

  static SecondMoments from_values(double t, double n_a, double n_b, double c_ab) noexcept {
    return {t, n_a, n_b, c_ab, n_a * n_b - c_ab * c_ab, 0.0};
  }
};

/// kVerbatim applies the printed three-term sums with complex p, q and mu.
/// kRegrouped folds the divergent products into p, q times (mu+ - mu-) and is
/// finite on the degenerate line. kAuto takes the verbatim sums away from it.
enum class MomentRoute { kAuto, kVerbatim, kRegrouped };

/// Spectral and noise data for one parameter set, reused across times.
class MomentEvaluator {
 public:
  explicit MomentEvaluator(const SystemParams& p, Stability stability = Stability::kRequireDecay);

  /// t may be kSteadyStateTime when every mode decays.
  SecondMoments at(double t, MomentRoute route = MomentRoute::kAuto) const;
  SecondMoments steady_state() const;

  /// The route kAuto picks at time t.
  MomentRoute resolve(double t) const noexcept;

  const SystemParams& params() const noexcept { return params_; }
  const SpectralData& spectral() const noexcept { return spectral_; }
  const DiffusionData& diffusion() const noexcept { return diffusion_; }

 private:
  SecondMoments verbatim(double t) const;
  SecondMoments regrouped(double t) const;

  SystemParams params_;
  SpectralData spectral_;
  DiffusionData diffusion_;
};

SecondMoments second_moments(const SystemParams& p, double t,
                             Stability stability = Stability::kRequireDecay);

/// Throws UnstableSystem unless both modes decay.
SecondMoments steady_state_moments(const SystemParams& p);

}  // namespace celent

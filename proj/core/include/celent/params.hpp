#pragma once

#include <complex>
#include <optional>
#include <string_view>

namespace celent {

/// Raw physical rates, all in units of the spontaneous decay rate (fixed to 1).
struct SystemParams {
  double kappa = 0.5;   // cavity damping
  double gamma = 1.0;   // coherence decay
  double omega = 0.0;   // drive amplitude
  double theta = 0.0;   // phase-fluctuation deviation
  double gain_a = 10.0; // linear gain coefficient

  friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

/// Returns `raw` unchanged, or throws Error naming the first violated invariant.
SystemParams validate_params(const SystemParams& raw);

struct DerivedParams {
  double zeta = 0.0;       // omega / gamma
  double zeta_p = 0.0;     // omega / 1
  double chi = 1.0;        // gamma / 1
  double b_coef = 4.0;     // (4 + zeta^2)(1 + zeta_p zeta)
  double exp_mtheta = 1.0; // e^{-theta}
};

DerivedParams derive_dimensionless(const SystemParams& p);

enum class Regime { kOverdamped, kDegenerate, kOscillatory };

std::string_view to_string(Regime r) noexcept;

/// Whether a parameter set with a non-decaying mode is acceptable.
/// Several of the strong-drive figure settings grow without bound, so runs
/// over presets opt in to kAllowGrowth; everything asking for a steady state
/// keeps the default.
enum class Stability { kRequireDecay, kAllowGrowth };

/// Relative width of the degenerate band around disc = 0.
inline constexpr double kDegeneracyEps = 1e-9;

struct SpectralData {
  std::complex<double> mu_plus;
  std::complex<double> mu_minus;
  double mu_sum = 0.0;            // always real
  std::complex<double> mu_diff;   // (A/B) sqrt(disc), principal branch
  double disc = 0.0;
  double disc_scale = 0.0;        // sum of magnitudes of the terms in disc
  double gain_ratio = 0.0;        // A / B
  // p, q+ and q- multiplied by mu_diff. Root-free, hence finite everywhere.
  double p_times_diff = 0.0;
  double qp_times_diff = 0.0;
  double qm_times_diff = 0.0;
  Regime regime = Regime::kOverdamped;
  // Only outside the degenerate band.
  std::optional<std::complex<double>> p_raw;
  std::optional<std::complex<double>> q_plus_raw;
  std::optional<std::complex<double>> q_minus_raw;

  /// mu_diff^2, real by construction.
  double diff_squared() const noexcept { return gain_ratio * gain_ratio * disc; }
  double min_decay_rate() const noexcept;
  bool decaying() const noexcept { return min_decay_rate() > 0.0; }
};

SpectralData spectral_data(const DerivedParams& d, const SystemParams& p,
                           Stability stability = Stability::kRequireDecay);

/// Convenience: validate, derive and decompose in one call.
SpectralData spectral_data(const SystemParams& p, Stability stability = Stability::kRequireDecay);

/// Delta-correlated noise strengths. Only two are nonzero.
struct DiffusionData {
  double l_coef = 0.0;
  double m_coef = 0.0;
  double d_aa = 0.0;  // <f_a f_a*>
  double d_ab = 0.0;  // <f_b f_a>, taken symmetric in the mode order
  double d_bb = 0.0;  // <f_b f_b*>
  double d_aa_anomalous = 0.0;  // <f_a f_a>
  double d_bb_anomalous = 0.0;  // <f_b f_b>
  double d_ba_conj = 0.0;       // <f_b* f_a>
};

DiffusionData noise_strengths(const DerivedParams& d, const SystemParams& p);

}  // namespace celent

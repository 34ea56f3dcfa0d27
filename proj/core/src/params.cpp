#include "celent/params.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "celent/error.hpp"

namespace celent {
namespace {

void require(bool ok, ErrorCode code, const char* what, double value) {
  if (!ok) throw Error(code, std::string(what) + " = " + std::to_string(value));
}

}  // namespace

SystemParams validate_params(const SystemParams& raw) {
  const double fields[] = {raw.kappa, raw.gamma, raw.omega, raw.theta, raw.gain_a};
  for (double v : fields) {
    require(std::isfinite(v), ErrorCode::kNonFiniteInput, "parameter", v);
  }
  require(raw.kappa > 0.0, ErrorCode::kNonPositiveKappa, "kappa", raw.kappa);
  require(raw.gamma > 0.0, ErrorCode::kNonPositiveGamma, "gamma", raw.gamma);
  require(raw.omega >= 0.0, ErrorCode::kNegativeOmega, "omega", raw.omega);
  require(raw.theta >= 0.0, ErrorCode::kNegativeTheta, "theta", raw.theta);
  require(raw.gain_a > 0.0, ErrorCode::kNonPositiveGain, "gain_a", raw.gain_a);
  return raw;
}

DerivedParams derive_dimensionless(const SystemParams& p) {
  DerivedParams d;
  d.zeta = p.omega / p.gamma;
  d.zeta_p = p.omega;
  d.chi = p.gamma;
  d.b_coef = (4.0 + d.zeta * d.zeta) * (1.0 + d.zeta_p * d.zeta);
  d.exp_mtheta = std::exp(-p.theta);
  return d;
}

std::string_view to_string(Regime r) noexcept {
  switch (r) {
    case Regime::kOverdamped: return "overdamped";
    case Regime::kDegenerate: return "degenerate";
    case Regime::kOscillatory: return "oscillatory";
  }
  return "unknown";
}

double SpectralData::min_decay_rate() const noexcept {
  return std::min(mu_plus.real(), mu_minus.real());
}

SpectralData spectral_data(const DerivedParams& d, const SystemParams& p, Stability stability) {
  const double zp = d.zeta_p;
  const double z = d.zeta;
  const double e = d.exp_mtheta;

  const double t1 = zp * (1.0 + z * zp);
  const double t2 = 2.0 * (zp * zp + d.chi);
  const double t3 = (2.0 - zp * z) * e;

  SpectralData s;
  s.gain_ratio = p.gain_a / d.b_coef;
  s.disc = t1 * t1 + t2 * t2 - t3 * t3;
  s.disc_scale = t1 * t1 + t2 * t2 + t3 * t3;

  const double threshold = kDegeneracyEps * s.disc_scale;
  if (std::abs(s.disc) <= threshold) {
    s.regime = Regime::kDegenerate;
  } else if (s.disc < 0.0) {
    s.regime = Regime::kOscillatory;
  } else {
    s.regime = Regime::kOverdamped;
  }

  const std::complex<double> root = std::sqrt(std::complex<double>(s.disc, 0.0));
  const double centre = 0.5 * p.kappa + 0.5 * s.gain_ratio * (2.0 * zp + z) * e;
  s.mu_diff = s.gain_ratio * root;
  s.mu_plus = centre + 0.5 * s.mu_diff;
  s.mu_minus = centre - 0.5 * s.mu_diff;
  s.mu_sum = 2.0 * centre;

  s.p_times_diff = s.gain_ratio * t2;
  s.qp_times_diff = s.gain_ratio * (-t1 + t3);
  s.qm_times_diff = s.gain_ratio * (-t1 - t3);

  if (s.regime != Regime::kDegenerate) {
    s.p_raw = t2 / root;
    s.q_plus_raw = (-t1 + t3) / root;
    s.q_minus_raw = (-t1 - t3) / root;
  }

  if (stability == Stability::kRequireDecay && !s.decaying()) {
    throw Error(ErrorCode::kUnstableSystem,
                "slowest decay rate " + std::to_string(s.min_decay_rate()) + " is not positive");
  }
  return s;
}

SpectralData spectral_data(const SystemParams& p, Stability stability) {
  const SystemParams v = validate_params(p);
  return spectral_data(derive_dimensionless(v), v, stability);
}

DiffusionData noise_strengths(const DerivedParams& d, const SystemParams& p) {
  const double zp = d.zeta_p;
  const double z = d.zeta;
  const double e = d.exp_mtheta;
  DiffusionData n;
  n.l_coef = 2.0 * zp * zp + 2.0 * d.chi - (2.0 * zp + z) * e;
  n.m_coef = zp * (1.0 + zp * z) + (2.0 - zp * z) * e;
  n.d_aa = p.gain_a * n.l_coef / d.b_coef;
  n.d_ab = p.gain_a * n.m_coef / (2.0 * d.b_coef);
  return n;
}

}  // namespace celent

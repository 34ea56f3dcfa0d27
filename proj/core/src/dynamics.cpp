#include "celent/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "celent/error.hpp"

namespace celent {
namespace {

using cplx = std::complex<double>;

// Below this |Delta| * min(t, 1/Sigma) the printed sums lose digits to the
// p^2 cancellation and the incomplete-gamma series converges in a few terms.
constexpr double kSeriesSwitch = 0.1;

void check_time(double t) {
  if (std::isnan(t) || t < 0.0) {
    throw Error(ErrorCode::kNegativeTime, "t = " + std::to_string(t));
  }
}

cplx expm1c(cplx z) {
  if (std::abs(z) < 1.0) return 2.0 * std::exp(0.5 * z) * std::sinh(0.5 * z);
  return std::exp(z) - 1.0;
}

// (1 - e^{-x t}) / x, with the t -> infinity limit 1/x.
cplx bracket_integral(cplx x, double t) {
  if (std::isinf(t)) return 1.0 / x;
  const cplx h = 0.5 * x * t;
  if (std::abs(h) < 1.0) return t * std::exp(-h) * sinhc(h);
  return -expm1c(-x * t) / x;
}

// 1 - e^{-x t}, the literal bracket.
cplx bracket(cplx x, double t) {
  if (std::isinf(t)) return 1.0;
  return -expm1c(-x * t);
}

struct Sym {
  cplx a11, a12, a22;
};

cplx det(const Sym& a) { return a.a11 * a.a22 - a.a12 * a.a12; }

// Mixed term of det(A + B) - det A - det B.
cplx mixed(const Sym& a, const Sym& b) {
  return a.a11 * b.a22 + a.a22 * b.a11 - 2.0 * a.a12 * b.a12;
}

// X D X^T for a general 2x2 X = [[x11, x12], [x21, x22]] and D = [[d, e], [e, 0]].
Sym congruence(cplx x11, cplx x12, cplx x21, cplx x22, double d, double e) {
  // rows of X D
  const cplx r11 = x11 * d + x12 * e, r12 = x11 * e;
  const cplx r21 = x21 * d + x22 * e, r22 = x21 * e;
  return {r11 * x11 + r12 * x12, r11 * x21 + r12 * x22, r21 * x21 + r22 * x22};
}

double max_abs_imag(cplx a, cplx b, cplx c) {
  return std::max({std::abs(a.imag()), std::abs(b.imag()), std::abs(c.imag())});
}

}  // namespace

std::complex<double> sinhc(std::complex<double> z) noexcept {
  if (std::abs(z) < 1e-4) {
    const cplx z2 = z * z;
    return 1.0 + z2 / 6.0 * (1.0 + z2 / 20.0 * (1.0 + z2 / 42.0 * (1.0 + z2 / 72.0)));
  }
  return std::sinh(z) / z;
}

PropagatorCoeffs propagator(const SpectralData& s, double t) {
  check_time(t);
  PropagatorCoeffs g;
  g.t = t;
  if (t == 0.0) return g;

  const cplx h = 0.5 * s.mu_diff * t;
  const double half_decay = 0.5 * s.mu_sum * t;
  cplx ch;  // e^{-Sigma t/2} cosh(h)
  cplx sh;  // e^{-Sigma t/2} sinh(h) / Delta
  if (std::abs(h) < 1.0) {
    const double decay = std::exp(-half_decay);
    ch = decay * std::cosh(h);
    sh = decay * 0.5 * t * sinhc(h);
  } else {
    // separate exponentials so a growing mode does not overflow cosh first
    const cplx ep = std::exp(h - half_decay);
    const cplx em = std::exp(-h - half_decay);
    ch = 0.5 * (ep + em);
    sh = (ep - em) / (2.0 * s.mu_diff);
  }
  g.c_plus = ch + s.p_times_diff * sh;
  g.c_minus = ch - s.p_times_diff * sh;
  g.d_plus = -s.qp_times_diff * sh;
  g.d_minus = -s.qm_times_diff * sh;
  return g;
}

Matrix2 drift_matrix(const SpectralData& s) noexcept {
  Matrix2 m;
  m.a11 = 0.5 * (s.mu_sum - s.p_times_diff);
  m.a22 = 0.5 * (s.mu_sum + s.p_times_diff);
  m.a12 = 0.5 * s.qp_times_diff;
  m.a21 = 0.5 * s.qm_times_diff;
  return m;
}

MomentEvaluator::MomentEvaluator(const SystemParams& p, Stability stability)
    : params_(validate_params(p)) {
  const DerivedParams d = derive_dimensionless(params_);
  spectral_ = spectral_data(d, params_, stability);
  diffusion_ = noise_strengths(d, params_);
}

MomentRoute MomentEvaluator::resolve(double t) const noexcept {
  const double scale = std::min(t, 1.0 / spectral_.mu_sum);
  const double r = std::abs(spectral_.mu_diff) * scale;
  if (spectral_.p_raw && r > kSeriesSwitch) return MomentRoute::kVerbatim;
  return MomentRoute::kRegrouped;
}

SecondMoments MomentEvaluator::at(double t, MomentRoute route) const {
  check_time(t);
  if (std::isinf(t) && !spectral_.decaying()) {
    throw Error(ErrorCode::kUnstableSystem, "no steady state for a growing mode");
  }
  if (t == 0.0) return SecondMoments{};
  if (route == MomentRoute::kAuto) route = resolve(t);
  if (route == MomentRoute::kVerbatim && !spectral_.p_raw) route = MomentRoute::kRegrouped;
  return route == MomentRoute::kVerbatim ? verbatim(t) : regrouped(t);
}

SecondMoments MomentEvaluator::steady_state() const { return at(kSteadyStateTime); }

SecondMoments MomentEvaluator::verbatim(double t) const {
  const SpectralData& s = spectral_;
  const cplx p = *s.p_raw;
  const cplx qp = *s.q_plus_raw;
  const cplx qm = *s.q_minus_raw;
  const cplx mup = s.mu_plus;
  const cplx mum = s.mu_minus;
  const double sum = s.mu_sum;
  const double a = params_.gain_a;
  const double b = derive_dimensionless(params_).b_coef;
  const double l = diffusion_.l_coef;
  const double m = diffusion_.m_coef;

  const cplx bp = bracket(2.0 * mup, t);
  const cplx bm = bracket(2.0 * mum, t);
  const cplx bs = bracket(sum, t);

  const cplx na = a * (l * (1.0 - p) * (1.0 - p) + m * qp * (1.0 - p)) / (8.0 * b * mup) * bp +
                  a * (l * (1.0 + p) * (1.0 + p) - m * qp * (1.0 + p)) / (8.0 * b * mum) * bm +
                  a * (l * (1.0 - p * p) + m * qp * p) / (2.0 * b * sum) * bs;
  const cplx nb = a * (l * qm * qm + m * qm * (1.0 + p)) / (8.0 * b * mup) * bp +
                  a * (l * qm * qm - m * qm * (1.0 - p)) / (8.0 * b * mum) * bm -
                  a * (l * qm * qm + m * qm * p) / (2.0 * b * sum) * bs;
  const cplx cab =
      a * (2.0 * l * qm * (1.0 - p) + m * (1.0 - p * p + qm * qp)) / (16.0 * b * mup) * bp -
      a * (2.0 * l * qm * (1.0 + p) - m * (1.0 - p * p + qm * qp)) / (16.0 * b * mum) * bm +
      a * (2.0 * l * qm * p + m * (1.0 + p * p - qm * qp)) / (4.0 * b * sum) * bs;

  // The determinant from the same spectral split. The two rank-one pieces
  // have zero determinant, so the square of the dominant growing exponential
  // never appears and n_a n_b - c_ab^2 keeps its digits.
  const double d = diffusion_.d_aa;
  const double e = diffusion_.d_ab;
  const cplx delta = s.mu_diff;
  const cplx k11 = s.p_times_diff / delta, k12 = -s.qp_times_diff / delta;
  const cplx k21 = -s.qm_times_diff / delta, k22 = -s.p_times_diff / delta;
  Sym rp = congruence(1.0 - k11, -k12, -k21, 1.0 - k22, d, e);
  Sym rm = congruence(1.0 + k11, k12, k21, 1.0 + k22, d, e);
  for (Sym* r : {&rp, &rm}) {
    r->a11 *= 0.25;
    r->a12 *= 0.25;
    r->a22 *= 0.25;
  }
  const Sym kdk = congruence(k11, k12, k21, k22, d, e);
  const Sym rx{0.5 * (d - kdk.a11), 0.5 * (e - kdk.a12), 0.5 * (0.0 - kdk.a22)};
  const cplx ep = bracket_integral(2.0 * mup, t);
  const cplx em = bracket_integral(2.0 * mum, t);
  const cplx es = bracket_integral(sum, t);
  const cplx dt = ep * em * mixed(rp, rm) + ep * es * mixed(rp, rx) + em * es * mixed(rm, rx) +
                  es * es * det(rx);

  SecondMoments out;
  out.t = t;
  out.n_a = na.real();
  out.n_b = nb.real();
  out.c_ab = cab.real();
  out.det = dt.real();
  out.imag_residual = max_abs_imag(na, nb, cab);
  return out;
}

SecondMoments MomentEvaluator::regrouped(double t) const {
  const SpectralData& s = spectral_;
  const double sum = s.mu_sum;
  const double delta2 = s.diff_squared();
  const double scale = std::min(t, 1.0 / sum);
  const double r = std::abs(s.mu_diff) * scale;

  // S0 = E+ + E- + 2 E_sum, D1 = (E+ - E-)/Delta, D2 = (E+ + E- - 2 E_sum)/Delta^2
  // where E+- integrate e^{-(Sigma +- Delta)s} and E_sum integrates e^{-Sigma s}.
  double s0 = 0.0, d1 = 0.0, d2 = 0.0;
  double imag = 0.0;
  if (r <= kSeriesSwitch) {
    // Expand cosh and sinh of Delta s; each power integrates to an
    // incomplete gamma function.
    const double w = delta2 / (sum * sum);
    const double y = sum * t;
    const auto gp = [&](int k) {
      return std::isinf(t) ? 1.0 : boost::math::gamma_p(static_cast<double>(k), y);
    };
    double acc0 = gp(1), acc1 = 0.0, acc2 = 0.0;
    double wk = 1.0;
    for (int k = 0; k < 200; ++k) {
      const double t0 = wk * gp(2 * k + 1);
      const double t1 = wk * gp(2 * k + 2);
      const double t2 = wk * gp(2 * k + 3);
      acc0 += t0;
      acc1 += t1;
      acc2 += t2;
      const double tail = std::max({std::abs(t0), std::abs(t1), std::abs(t2)});
      if (tail <= 1e-18 * std::max({std::abs(acc0), std::abs(acc1), std::abs(acc2)})) break;
      wk *= w;
      if (wk == 0.0) break;
    }
    s0 = 2.0 / sum * acc0;
    d1 = -2.0 / (sum * sum) * acc1;
    d2 = 2.0 / (sum * sum * sum) * acc2;
  } else {
    const cplx delta = s.mu_diff;
    const cplx ep = bracket_integral(sum + delta, t);
    const cplx em = bracket_integral(sum - delta, t);
    const cplx es = bracket_integral(sum, t);
    const cplx c0 = ep + em + 2.0 * es;
    const cplx c1 = (ep - em) / delta;
    const cplx c2 = (ep + em - 2.0 * es) / (delta * delta);
    s0 = c0.real();
    d1 = c1.real();
    d2 = c2.real();
    imag = max_abs_imag(c0, c1, c2);
  }

  const double d = diffusion_.d_aa;
  const double e = diffusion_.d_ab;
  const double pp = s.p_times_diff;
  const double qp = s.qp_times_diff;
  const double qm = s.qm_times_diff;

  SecondMoments out;
  out.t = t;
  out.n_a = 0.25 * (s0 * d - 2.0 * d1 * (pp * d - qp * e) + d2 * (pp * pp * d - 2.0 * pp * qp * e));
  out.n_b = 0.25 * (2.0 * d1 * qm * e + d2 * (qm * qm * d + 2.0 * pp * qm * e));
  out.c_ab = 0.25 * (s0 * e + d1 * qm * d + d2 * (-pp * qm * d + (qp * qm - pp * pp) * e));
  out.det = out.n_a * out.n_b - out.c_ab * out.c_ab;
  out.imag_residual = imag;
  return out;
}

SecondMoments second_moments(const SystemParams& p, double t, Stability stability) {
  return MomentEvaluator(p, stability).at(t);
}

SecondMoments steady_state_moments(const SystemParams& p) {
  return MomentEvaluator(p).steady_state();
}

}  // namespace celent

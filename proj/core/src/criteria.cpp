#include "celent/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "celent/error.hpp"

namespace celent {
namespace {

constexpr double kConsistencyTol = 1e-8;
constexpr double kRadicandFloor = -1e-10;

}  // namespace

CovarianceSummary covariance(const SecondMoments& sm) {
  CovarianceSummary cv;
  cv.m = 1.0 + 2.0 * sm.n_a;
  cv.n = 1.0 + 2.0 * sm.n_b;
  cv.c = 2.0 * sm.c_ab;
  cv.det_a = 1.0 + 4.0 * sm.n_a * (sm.n_a + 1.0);
  cv.det_b = 1.0 + 4.0 * sm.n_b * (sm.n_b + 1.0);
  cv.det_ab = -cv.c * cv.c;
  cv.xi = cv.det_a + cv.det_b - 2.0 * cv.det_ab;

  // det Xi = 16 [1/4 + (n_a + n_b)/2 + n_a n_b - c_ab^2]^2, with the last
  // two terms taken from the moments' determinant.
  cv.reduced_det = 1.0 + 2.0 * (sm.n_a + sm.n_b) + 4.0 * sm.det;
  cv.det_xi = cv.reduced_det * cv.reduced_det;

  const double naive = cv.m * cv.n - cv.c * cv.c;
  const double size = std::abs(cv.m * cv.n) + cv.c * cv.c;
  if (!(std::abs(cv.reduced_det - naive) <= kConsistencyTol * size)) {
    throw Error(ErrorCode::kInconsistentMoments,
                "determinant routes differ: " + std::to_string(cv.reduced_det) + " vs " +
                    std::to_string(naive));
  }
  return cv;
}

double symplectic_smallest(const CovarianceSummary& cv) {
  // Rescale by the largest entry so the squares cannot overflow for fast
  // growing modes, then take the rationalized root of
  // V^2 = (xi - sqrt(xi^2 - 4 det Xi)) / 2.
  const double k = std::max({std::abs(cv.m), std::abs(cv.n), std::abs(cv.c), 1.0});
  const double m = cv.m / k, n = cv.n / k, c = cv.c / k;
  const double xi = m * m + n * n + 2.0 * c * c;
  const double root_det = cv.reduced_det / k / k;
  const double ratio = root_det * root_det / (xi * xi);
  double radicand = 1.0 - 4.0 * ratio;
  if (radicand < kRadicandFloor) {
    throw Error(ErrorCode::kUnphysicalCovariance, "radicand " + std::to_string(radicand));
  }
  radicand = std::max(radicand, 0.0);
  const double v2 = 2.0 * root_det * root_det / xi / (1.0 + std::sqrt(radicand));
  return k * std::sqrt(v2);
}

double log_negativity(double v_s) {
  if (!(v_s > 0.0)) {
    throw Error(ErrorCode::kNonPositiveEigenvalue, "v_s = " + std::to_string(v_s));
  }
  return std::max(0.0, -std::log2(v_s));
}

double dgcz_sum(const CovarianceSummary& cv) noexcept { return cv.m + cv.n - 2.0 * cv.c; }

std::string_view to_string(HzFlag f) noexcept {
  switch (f) {
    case HzFlag::kDefined: return "defined";
    case HzFlag::kDivergent: return "divergent";
    case HzFlag::kUndefined: return "undefined";
  }
  return "unknown";
}

HzResult hz_correlation(const SecondMoments& sm) noexcept {
  HzResult hz;
  const double prod = sm.n_a * sm.n_b;
  const double num = sm.c_ab * sm.c_ab;
  if (prod > kHzEps) {
    hz.flag = HzFlag::kDefined;
    hz.g = 1.0 + num / prod;
    hz.excess = -sm.det / prod;
    hz.entangled = hz.excess > 0.0;
  } else if (num > kHzEps) {
    hz.flag = HzFlag::kDivergent;
    hz.g = std::numeric_limits<double>::infinity();
    hz.excess = hz.g;
    hz.entangled = true;
  } else {
    hz.flag = HzFlag::kUndefined;
    hz.g = std::numeric_limits<double>::quiet_NaN();
    hz.excess = hz.g;
  }
  return hz;
}

EntanglementReport report(const SecondMoments& sm) {
  const CovarianceSummary cv = covariance(sm);
  const HzResult hz = hz_correlation(sm);
  EntanglementReport r;
  r.t = sm.t;
  r.v_s = symplectic_smallest(cv);
  r.e_n = log_negativity(r.v_s);
  r.dgcz = dgcz_sum(cv);
  r.hz_g = hz.g;
  r.hz_excess = hz.excess;
  r.hz_flag = hz.flag;
  r.entangled_neg = r.v_s < 1.0;
  r.entangled_dgcz = r.dgcz < 2.0;
  r.entangled_hz = hz.entangled;
  return r;
}

EntanglementReport report(const SystemParams& p, double t, Stability stability) {
  return report(MomentEvaluator(p, stability).at(t));
}

}  // namespace celent

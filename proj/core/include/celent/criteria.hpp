#pragma once

#include <string_view>

#include "celent/dynamics.hpp"
#include "celent/params.hpp"

namespace celent {

/// Reduced two-mode covariance. The full 4x4 matrix is
/// [[m,0,c,0],[0,m,0,-c],[c,0,n,0],[0,-c,0,n]].
struct CovarianceSummary {
  double m = 1.0;
  double n = 1.0;
  double c = 0.0;
  double det_a = 1.0;
  double det_b = 1.0;
  double det_ab = 0.0;
  double det_xi = 1.0;
  double xi = 2.0;
  /// m n - c^2 (signed square root of det_xi), from the moments' own det.
  double reduced_det = 1.0;
};

/// Throws InconsistentMoments if the two determinant routes disagree.
CovarianceSummary covariance(const SecondMoments& sm);

/// Smallest symplectic eigenvalue of the partial transpose.
/// Throws UnphysicalCovariance on a negative inner radicand.
double symplectic_smallest(const CovarianceSummary& cv);

/// max(0, -log2 v_s). Throws NonPositiveEigenvalue for v_s <= 0.
double log_negativity(double v_s);

/// EPR-type variance sum; 2 for vacuum, below 2 certifies entanglement.
double dgcz_sum(const CovarianceSummary& cv) noexcept;

enum class HzFlag { kDefined, kDivergent, kUndefined };

std::string_view to_string(HzFlag f) noexcept;

inline constexpr double kHzEps = 1e-12;

struct HzResult {
  double g = 0.0;       // inf when divergent, NaN when undefined
  double excess = 0.0;  // g - 2, computed from the stable determinant
  HzFlag flag = HzFlag::kUndefined;
  bool entangled = false;
};

HzResult hz_correlation(const SecondMoments& sm) noexcept;

struct EntanglementReport {
  double t = 0.0;
  double v_s = 1.0;
  double e_n = 0.0;
  double dgcz = 2.0;
  double hz_g = 0.0;
  double hz_excess = 0.0;
  HzFlag hz_flag = HzFlag::kUndefined;
  bool entangled_neg = false;
  bool entangled_dgcz = false;
  bool entangled_hz = false;
};

EntanglementReport report(const SecondMoments& sm);
EntanglementReport report(const SystemParams& p, double t,
                          Stability stability = Stability::kRequireDecay);

}  // namespace celent

#include <cmath>
#include <random>

#include <doctest.h>

#include "celent/criteria.hpp"
#include "celent/error.hpp"
#include "celent/scenario.hpp"
#include "reference_values.hpp"

using namespace celent;

namespace {

SecondMoments moments(double na, double nb, double cab) {
  return SecondMoments::from_values(1.0, na, nb, cab);
}

CovarianceSummary from_mnc(double m, double n, double c) {
  return covariance(moments((m - 1) / 2, (n - 1) / 2, c / 2));
}

}  // namespace

TEST_CASE("covariance of the vacuum and a hand-evaluated state") {
  CovarianceSummary cv = covariance(moments(0, 0, 0));
  CHECK(cv.m == 1.0);
  CHECK(cv.n == 1.0);
  CHECK(cv.c == 0.0);
  CHECK(cv.det_xi == 1.0);

  cv = covariance(moments(0.5, 0.5, 0.75));
  CHECK(cv.m == 2.0);
  CHECK(cv.n == 2.0);
  CHECK(cv.c == 1.5);
  CHECK(cv.det_a == 4.0);
  CHECK(cv.det_ab == -2.25);
  CHECK(cv.det_xi == doctest::Approx(3.0625).epsilon(1e-15));
  CHECK(cv.xi == 12.5);
}

TEST_CASE("two determinant routes agree, and disagreement is caught") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    const SecondMoments sm = moments(u(rng), u(rng), u(rng));
    const CovarianceSummary cv = covariance(sm);
    const double naive = cv.m * cv.n - cv.c * cv.c;
    CHECK(std::abs(std::sqrt(cv.det_xi) - std::abs(naive)) <=
          1e-10 * (std::abs(cv.m * cv.n) + cv.c * cv.c));
  }
  SecondMoments bad = moments(1, 1, 0.5);
  bad.det += 0.1;
  try {
    covariance(bad);
    FAIL("expected InconsistentMoments");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInconsistentMoments);
  }
}

TEST_CASE("smallest symplectic eigenvalue") {
  CHECK(symplectic_smallest(from_mnc(1, 1, 0)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(symplectic_smallest(from_mnc(2, 2, 1)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(symplectic_smallest(from_mnc(2, 2, 1.5)) == doctest::Approx(0.5).epsilon(1e-14));
  // symmetric shortcut m - c
  for (double c : {0.1, 0.7, 1.9}) {
    CHECK(symplectic_smallest(from_mnc(3, 3, c)) == doctest::Approx(3 - c).epsilon(1e-13));
  }
  // asymmetric: |mn - c^2| / nu+ with nu+ = ((m+n) + sqrt((m-n)^2 + 4c^2)) / 2
  const double m = 5, n = 2, c = 2.5;
  const double nu_plus = 0.5 * ((m + n) + std::hypot(m - n, 2 * c));
  CHECK(symplectic_smallest(from_mnc(m, n, c)) ==
        doctest::Approx(std::abs(m * n - c * c) / nu_plus).epsilon(1e-13));
}

TEST_CASE("symplectic eigenvalue survives very large moments") {
  for (const auto& ref : reference::kMomentCases) {
    SecondMoments sm = moments(ref.n_a, ref.n_b, ref.c_ab);
    sm.det = ref.det;
    CAPTURE(ref.name);
    CHECK(symplectic_smallest(covariance(sm)) == doctest::Approx(ref.v_s).epsilon(1e-9));
  }
}

TEST_CASE("log negativity") {
  CHECK(log_negativity(1.0) == 0.0);
  CHECK(log_negativity(0.5) == 1.0);
  CHECK(log_negativity(2.0) == 0.0);
  try {
    log_negativity(0.0);
    FAIL("expected NonPositiveEigenvalue");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNonPositiveEigenvalue);
  }
}

TEST_CASE("variance sum") {
  CHECK(dgcz_sum(from_mnc(1, 1, 0)) == 2.0);
  const CovarianceSummary cv = from_mnc(2, 2, 1.5);
  CHECK(dgcz_sum(cv) == doctest::Approx(1.0));
  CHECK(dgcz_sum(cv) == doctest::Approx(2.0 * symplectic_smallest(cv)));
}

TEST_CASE("photon-number correlation and its flags") {
  HzResult hz = hz_correlation(moments(1, 1, 1.2));
  CHECK(hz.flag == HzFlag::kDefined);
  CHECK(hz.g == doctest::Approx(2.44));
  CHECK(hz.entangled);

  hz = hz_correlation(moments(1, 1, 0.9));
  CHECK(hz.g == doctest::Approx(1.81));
  CHECK_FALSE(hz.entangled);

  hz = hz_correlation(SecondMoments{});
  CHECK(hz.flag == HzFlag::kUndefined);
  CHECK(std::isnan(hz.g));
  CHECK_FALSE(hz.entangled);

  hz = hz_correlation(moments(1e-8, 1e-8, 1e-3));
  CHECK(hz.flag == HzFlag::kDivergent);
  CHECK(std::isinf(hz.g));
  CHECK(hz.entangled);

  // defined branch agrees with the direct inequality
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(0.01, 5.0);
  for (int i = 0; i < 1000; ++i) {
    const SecondMoments sm = moments(u(rng), u(rng), u(rng));
    CHECK(hz_correlation(sm).entangled == (sm.c_ab * sm.c_ab > sm.n_a * sm.n_b));
  }
}

TEST_CASE("reports") {
  const EntanglementReport vac = report(SecondMoments{});
  CHECK(vac.v_s == 1.0);
  CHECK(vac.e_n == 0.0);
  CHECK(vac.dgcz == 2.0);
  CHECK(vac.hz_flag == HzFlag::kUndefined);
  CHECK_FALSE(vac.entangled_neg);

  const EntanglementReport steady = report({0.5, 1.0, 0.0, 0.0, 10.0}, kSteadyStateTime);
  CHECK(steady.v_s == doctest::Approx(0.5).epsilon(0.1));
  CHECK(steady.entangled_neg);
  CHECK(steady.entangled_hz);
  CHECK(steady.e_n == doctest::Approx(-std::log2(steady.v_s)));

  // a growing mode has no steady state
  CHECK_THROWS_AS(report({0.5, 1.0, 10.0, 0.0, 10.0}, kSteadyStateTime), Error);
}

TEST_CASE("verdicts stay coherent along every preset") {
  for (const std::string& id : preset_ids()) {
    ScenarioConfig cfg = preset(id);
    std::vector<double> values = cfg.sweep_values;
    if (values.empty()) values.push_back(0.0);
    for (double v : values) {
      const MomentEvaluator eval(with_sweep(cfg.params, cfg.sweep, v), Stability::kAllowGrowth);
      for (int i = 1; i <= 200; ++i) {
        const SecondMoments sm = eval.at(0.25 * i);
        const EntanglementReport r = report(sm);
        CHECK((r.e_n > 0.0) == r.entangled_neg);
        if (r.hz_flag == HzFlag::kDefined) {
          CHECK(r.entangled_hz == (sm.det < 0.0));
          // the direct products agree wherever they are not cancellation noise
          if (std::abs(sm.det) > 1e-8 * sm.n_a * sm.n_b) {
            CHECK(r.entangled_hz == (sm.c_ab * sm.c_ab > sm.n_a * sm.n_b));
          }
        }
        const CovarianceSummary cv = covariance(sm);
        if (std::abs(cv.m - cv.n) < 1e-9) CHECK(std::abs(r.dgcz - 2 * r.v_s) <= 1e-8);
      }
    }
  }
}

#include <doctest.h>

#include <numbers>
#include <random>

#include "helpers.hpp"
#include "rrm/analytic.hpp"
#include "rrm/errors.hpp"
#include "rrm/homogenization.hpp"

using namespace rrm;
using namespace rrm::homog;
using rrm::test::rel_err;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("homogenization") {
  TEST_CASE("correction factor fixtures") {
    CHECK(correction_factor(ReceptorLayoutParams::circular(0, 0.0279), 10) == 0.0);
    CHECK(correction_factor(ReceptorLayoutParams::from_mesh(5120, 5120), 10) == doctest::Approx(1.0).epsilon(1e-15));
    // 40-digit mpmath evaluation.
    CHECK(rel_err(correction_factor(ReceptorLayoutParams::circular(1000, 0.0279), 10), 0.29896577352564414905) <=
          1e-13);
    CHECK(rel_err(correction_factor(ReceptorLayoutParams::from_mesh(1000, 5120), 10), 0.29990819076353792689) <=
          1e-13);
  }

  TEST_CASE("effective forward rate") {
    CHECK(effective_forward_rate(10, 1.0) == doctest::Approx(10).epsilon(1e-15));
    CHECK(effective_forward_rate(10, 0.0) == 0.0);
    CHECK(effective_forward_rate(10, 0.5) == doctest::Approx(20 * kPi / (5 + 4 * kPi)).epsilon(1e-14));
  }

  TEST_CASE("absorbing-receptor factors") {
    CHECK(berg_purcell_factor(ReceptorLayoutParams::circular(0, 0.0279)) == 0.0);
    CHECK(berg_purcell_factor(ReceptorLayoutParams::circular(100, kPi / 100)) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(rel_err(berg_purcell_factor(ReceptorLayoutParams::circular(5120, 0.0279)), 0.97848070813483057260) <= 1e-13);
    CHECK(rel_err(zwanzig_factor(ReceptorLayoutParams::circular(2560, 0.0279)), 0.97840417058047402928) <= 1e-13);
    CHECK(zwanzig_factor(ReceptorLayoutParams::from_mesh(1280, 1280)) == doctest::Approx(1.0).epsilon(1e-15));
    const auto sparse = ReceptorLayoutParams::circular(10, 0.05);
    REQUIRE(sparse.coverage_lambda <= 0.01);
    CHECK(rel_err(zwanzig_factor(sparse), berg_purcell_factor(sparse)) <= 0.01);
  }

  TEST_CASE("equivalent receptor radius") {
    CHECK(equivalent_receptor_radius(kPi) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(equivalent_receptor_radius(kPi * 0.0279 * 0.0279) == doctest::Approx(0.0279).epsilon(1e-14));
    const double rs = equivalent_receptor_radius(4 * kPi / 5120);
    CHECK(rs == doctest::Approx(std::sqrt(4.0 / 5120)).epsilon(1e-14));
    CHECK(std::abs(rs - 0.0279) / 0.0279 <= 0.002);
    CHECK_THROWS_AS(equivalent_receptor_radius(0.0), DomainError);
  }

  TEST_CASE("finite receptor params") {
    const DimensionlessParams p{100, 4, 0.1, 3, 1000};
    CHECK(finite_receptor_params(p, ReceptorLayoutParams::from_mesh(5120, 5120)).kf == doctest::Approx(100).epsilon(1e-13));
    CHECK(finite_receptor_params(p, ReceptorLayoutParams::circular(0, 0.0279)).kf == 0.0);
    const auto q = finite_receptor_params(p, ReceptorLayoutParams::circular(2560, 0.0279));
    CHECK(q.kb == p.kb);
    CHECK(q.kd == p.kd);
    CHECK(q.r0 == p.r0);
    CHECK(q.kf < p.kf);
    // The relative loss grows with kf'.
    const DimensionlessParams slow{10, 4, 0.1, 3, 1000};
    const auto qs = finite_receptor_params(slow, ReceptorLayoutParams::circular(2560, 0.0279));
    CHECK(1 - q.kf / p.kf > 1 - qs.kf / slow.kf);
  }

  TEST_CASE("steady-state consistency over random layouts") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
      const long long M = 1 + static_cast<long long>(5000 * u(rng));
      const double rs = 0.001 + 0.027 * u(rng);
      const DimensionlessParams p{0.1 + 500 * u(rng), 0, 0, 1.1 + 4 * u(rng), 1};
      const auto layout = ReceptorLayoutParams::circular(M, rs);
      const double phi = correction_factor(layout, p.kf);
      const auto q = finite_receptor_params(p, layout);
      CHECK(std::abs(analytic::cir_asymptote(q) - phi * analytic::cir_asymptote(p)) <=
            1e-12 * analytic::cir_asymptote(p));
      CHECK(q.kf >= 0.0);
      CHECK(q.kf <= p.kf);
    }
  }

  TEST_CASE("absorbing limit reaches the Zwanzig factor") {
    for (long long M : {10LL, 500LL, 2560LL, 5000LL}) {
      const auto layout = ReceptorLayoutParams::circular(M, 0.0279);
      CHECK(rel_err(correction_factor(layout, 1e12), zwanzig_factor(layout)) <= 1e-6);
    }
  }

  TEST_CASE("phi grows with M") {
    for (double kf : {0.5, 10.0, 1e3}) {
      double prev = -1.0;
      for (long long M = 1; M <= 5120; ++M) {
        const double phi = correction_factor(ReceptorLayoutParams::from_mesh(M, 5120), kf);
        REQUIRE(phi > prev);
        prev = phi;
      }
    }
  }
}

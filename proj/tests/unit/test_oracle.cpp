#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "helpers.hpp"
#include "rrm/analytic.hpp"
#include "rrm/errors.hpp"
#include "rrm/oracle.hpp"

using namespace rrm;
using namespace rrm::oracle;
using rrm::test::rel_err;

namespace {

QComplex qc(double re, double im = 0.0) {
  QComplex z;
  __real__ z = re;
  __imag__ z = im;
  return z;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("known transform pairs") {
    const Transform one_over_s = [](QComplex s) { return qc(1.0) / s; };
    const Transform shifted = [](QComplex s) { return qc(1.0) / (s + qc(1.0)); };
    for (double t : {1e-3, 0.5, 1.0, 20.0}) CHECK(std::abs(talbot_invert(one_over_s, t) - 1.0) <= 1e-10);
    CHECK(std::abs(talbot_invert(shifted, 1.0) - std::exp(-1.0)) <= 1e-10);
  }

  TEST_CASE("laplace fixtures") {
    // 40-digit mpmath evaluation of the transforms.
    const DimensionlessParams p{10, 1, 0.5, 2, 1};
    const Complex g = laplace_greens(LaplaceQuery{Complex(1, 1), p, 1.5});
    CHECK(rel_err(g, Complex(0.004643928291253016366, -0.002296156700521046648)) <= 1e-13);
    const Complex c = laplace_cir(Complex(2, 0), DimensionlessParams{5, 2, 0, 2, 1});
    CHECK(rel_err(c, Complex(0.004627212704491014225, 0)) <= 1e-13);
  }

  TEST_CASE("inert receiver reflects") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.1, 5.0);
    for (int i = 0; i < 5; ++i) {
      const Complex s(u(rng), u(rng) - 2.5);
      const DimensionlessParams p{0, 1.5, 0.3, 2.5, 1};
      const double r = 1.7;
      const Complex q = std::sqrt(s + p.kd);
      const Complex reflective = (std::exp(-q * std::abs(r - p.r0)) + std::exp(-q * (r + p.r0 - 2.0)) * (q - 1.0) / (q + 1.0)) /
                                 (8 * std::numbers::pi * r * p.r0 * q);
      CHECK(rel_err(laplace_greens(LaplaceQuery{s, p, r}), reflective) <= 1e-12);
      CHECK(laplace_cir(s, p) == Complex(0, 0));
    }
  }

  TEST_CASE("large s decays") {
    const DimensionlessParams p{10, 1, 0.5, 2, 1};
    const double a = std::abs(laplace_greens(LaplaceQuery{Complex(1e4, 0), p, 1.5}));
    const double b = std::abs(laplace_greens(LaplaceQuery{Complex(1e6, 0), p, 1.5}));
    CHECK(b < a);
    CHECK(b <= std::exp(-std::sqrt(1e6) * 0.5) / std::sqrt(1e6));
  }

  TEST_CASE("final value theorem") {
    const DimensionlessParams p{10, 0, 0, 2, 1};
    const double s = 1e-12;
    CHECK(rel_err((s * laplace_cir(Complex(s, 0), p)).real(), analytic::cir_asymptote(p)) <= 1e-5);
  }

  TEST_CASE("branch cut is rejected") {
    CHECK_THROWS_AS(laplace_cir(Complex(-1.0, 0.0), DimensionlessParams{5, 1, 0.5, 2, 1}), DomainError);
  }

  TEST_CASE("inverted cir matches the closed form") {
    const DimensionlessParams p{5, 2, 0, 2, 1};
    CHECK(rel_err(invert_cir(1.0, p), analytic::cir(1.0, p)) <= 1e-7);
    const DimensionlessParams q{10, 1, 0.5, 2, 1};
    for (double r : {1.0, 1.5, 3.0})
      for (double t : {0.01, 0.5, 4.0})
        CHECK(rel_err(invert_greens(r, t, q), analytic::greens_function(r, t, q)) <= 1e-6);
  }
}

#include <gtest/gtest.h>

#include <cmath>

#include "coupler/coefficient_ode.hpp"
#include "coupler/coefficients.hpp"
#include "support.hpp"

namespace coupler {
namespace {

using testing::fig_params;

void expect_complex_near(Complex a, Complex b, double tol) {
  EXPECT_NEAR(a.real(), b.real(), tol);
  EXPECT_NEAR(a.imag(), b.imag(), tol);
}

TEST(Coefficients, ZeroLengthIsIdentity) {
  const Coefficients c = compute_coefficients(fig_params(0.001, 1e-4, 0.0));
  const auto v = c.as_array();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const bool unit = i == 0 || i == 5 || i == 8;
    expect_complex_near(v[i], unit ? Complex{1.0, 0.0} : Complex{}, 0.0);
  }
}

TEST(Coefficients, LinearCouplerWithoutNonlinearity) {
  const Coefficients c = compute_coefficients(fig_params(0.0, 1e-4, 2.0));
  const double sech = 1.0 / std::cosh(0.2);
  expect_complex_near(c.f1, {sech, 0.0}, 1e-15);
  expect_complex_near(c.g2, {sech, 0.0}, 1e-15);
  expect_complex_near(c.f2, {0.0, -std::tanh(0.2)}, 1e-15);
  expect_complex_near(c.g1, -std::conj(c.f2), 0.0);
  for (Complex z : {c.f3, c.f4, c.g3, c.g4, c.h2, c.h3, c.h4}) EXPECT_EQ(z, Complex{});
}

TEST(Coefficients, FigureTwoWorkingPoint) {
  const Coefficients c = compute_coefficients(fig_params());
  EXPECT_NEAR(c.f1.real(), 0.9950207, 5e-8);
  EXPECT_NEAR(c.f2.imag(), -0.0996680, 5e-8);
  EXPECT_NEAR(c.f2.real(), 0.0, 1e-17);
}

TEST(Coefficients, ExactLinearIdentitiesOnRandomParameters) {
  testing::RandomDraws draws(11);
  for (int i = 0; i < 200; ++i) {
    const Coefficients c = compute_coefficients(draws.params());
    EXPECT_LT(std::abs(std::norm(c.f1) + std::norm(c.f2) - 1.0), 1e-12);
    EXPECT_LT(std::abs(std::norm(c.g1) + std::norm(c.g2) - 1.0), 1e-12);
    EXPECT_LT(std::abs(c.f1 * std::conj(c.g1) + c.f2 * std::conj(c.g2)), 1e-12);
    EXPECT_LT(std::abs(c.f2 + std::conj(c.g1)), 1e-12);
    EXPECT_LT(std::abs(c.f1 - c.g2), 1e-12);
    EXPECT_EQ(c.h1, Complex(1.0, 0.0));
  }
}

TEST(Coefficients, VanishingMismatchLimitIsSmooth) {
  const Coefficients zero = compute_coefficients(fig_params(0.001, 0.0, 1.0));
  const Coefficients tiny = compute_coefficients(fig_params(0.001, 1e-12, 1.0));
  const auto a = zero.as_array();
  const auto b = tiny.as_array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_LE(std::abs(a[i] - b[i]), 1e-10 * std::abs(a[i])) << Coefficients::kNames[i];
  }
}

TEST(Coefficients, ContinuousAcrossSeriesThreshold) {
  const double length = 2.0;
  const double dk = kSmallMismatchThreshold / length;
  const auto below = compute_coefficients(fig_params(0.001, dk * (1.0 - 1e-9), length)).as_array();
  const auto above = compute_coefficients(fig_params(0.001, dk * (1.0 + 1e-9), length)).as_array();
  for (std::size_t i = 0; i < below.size(); ++i) {
    EXPECT_LE(std::abs(below[i] - above[i]), 1e-9 * std::abs(above[i])) << Coefficients::kNames[i];
  }
}

TEST(Coefficients, MismatchPhaseRatioMatchesDirectFormulaAtModerateTheta) {
  for (double dk : {1e-3, 0.05, 0.3}) {
    for (double l : {0.5, 3.0, 40.0}) {
      const Complex direct = (1.0 - std::polar(1.0, -dk * l)) / dk;
      EXPECT_LE(std::abs(mismatch_phase_ratio(dk, l) - direct), 1e-12 * std::abs(direct));
    }
  }
  EXPECT_EQ(mismatch_phase_ratio(0.0, 2.0), Complex(0.0, 2.0));
}

TEST(Coefficients, TextbookFormAgreesExceptForH3) {
  for (double dk : {1e-2, 1e-1}) {
    for (double l : {0.5, 2.0, 5.0}) {
      const auto p = fig_params(0.001, dk, l);
      const Coefficients stable = compute_coefficients(p);
      const Coefficients printed = printed_coefficients(p);
      const auto s = stable.as_array();
      const auto q = printed.as_array();
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (Coefficients::kNames[i] == "h3") continue;
        EXPECT_LE(std::abs(s[i] - q[i]), 1e-9 * std::abs(s[i])) << Coefficients::kNames[i];
      }
      // The textbook h3 misses exp(iΔkL) on its Δk² term.
      EXPECT_GT(std::abs(stable.h3 - printed.h3), 1e-6 * std::abs(stable.h3));
    }
  }
  EXPECT_THROW((void)printed_coefficients(fig_params(0.001, 0.0, 1.0)), DomainError);
}

TEST(Coefficients, LargeLengthStaysFinite) {
  const Coefficients c = compute_coefficients(fig_params(0.001, 1e-4, 1e4));
  for (const Complex& z : c.as_array()) EXPECT_TRUE(is_finite(z));
  EXPECT_NEAR(std::abs(c.f2), 1.0, 1e-15);
}

TEST(Coefficients, RejectsInvalidParameters) {
  CouplerParams p = fig_params();
  p.k = {};
  EXPECT_THROW((void)compute_coefficients(p), DomainError);
  p = fig_params();
  p.delta_k = -1.0;
  EXPECT_THROW((void)compute_coefficients(p), DomainError);
  p = fig_params();
  p.length = -0.5;
  EXPECT_THROW((void)compute_coefficients(p), DomainError);
  p = fig_params();
  p.gamma_nl = {std::nan(""), 0.0};
  EXPECT_THROW((void)compute_coefficients(p), DomainError);
  p = fig_params();
  p.length = std::numeric_limits<double>::infinity();
  EXPECT_THROW((void)short_length_coefficients(p), DomainError);
}

TEST(ShortLength, DirectSubstitution) {
  const Coefficients c = short_length_coefficients(fig_params(0.001, 0.0, 1.0));
  expect_complex_near(c.f2, {0.0, -0.1}, 1e-15);
  expect_complex_near(c.g3, {0.0, -0.002}, 1e-15);
  expect_complex_near(c.h2, {0.0, -0.001}, 1e-15);
  expect_complex_near(c.f1, {1.0 - 0.005, 0.0}, 1e-15);
  expect_complex_near(c.g4, -c.f3, 0.0);
  EXPECT_EQ(c.f4, Complex{});
  EXPECT_EQ(c.h4, Complex{});
}

TEST(ShortLength, ZeroLengthIsIdentity) {
  const Coefficients c = short_length_coefficients(fig_params(0.001, 0.0, 0.0));
  EXPECT_EQ(c.f1, Complex(1.0, 0.0));
  EXPECT_EQ(c.g2, Complex(1.0, 0.0));
  EXPECT_EQ(c.h1, Complex(1.0, 0.0));
  for (Complex z : {c.f2, c.f3, c.f4, c.g1, c.g3, c.g4, c.h2, c.h3, c.h4}) EXPECT_EQ(z, Complex{});
}

TEST(ShortLength, RemainderShrinksCubically) {
  auto max_diff = [](double l) {
    const auto p = fig_params(0.001, 1e-12, l);
    const auto a = compute_coefficients(p).as_array();
    const auto b = short_length_coefficients(p).as_array();
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
  };
  // The remainder is c L³ (1 - O(L²)), so a halving shrinks it by 8 up to
  // roundoff and an O(L²) relative correction.
  const double r1 = max_diff(1e-2) / max_diff(5e-3);
  const double r2 = max_diff(2e-3) / max_diff(1e-3);
  EXPECT_NEAR(r1, 8.0, 1e-3);
  EXPECT_NEAR(r2, 8.0, 1e-3);
}

// Read as functions of L, the closed-form coefficients (mapped back to the
// forward ansatz) solve the coefficient ODE: the centred finite difference
// approaches the right-hand side at second order in the difference step.
TEST(Coefficients, FiniteDifferenceDerivativeSatisfiesOde) {
  for (double dk : {1e-4, 0.1}) {
    const CouplerParams base = fig_params(0.001, dk, 0.0);
    const double l = 3.0;
    auto residual = [&](double h) {
      const auto plus = forward_from_output(compute_coefficients(base.with_length(l + h))).pack();
      const auto minus = forward_from_output(compute_coefficients(base.with_length(l - h))).pack();
      const auto here = forward_from_output(compute_coefficients(base.with_length(l)));
      const auto rhs = forward_derivative(base, l, here).pack();
      double worst = 0.0;
      for (std::size_t i = 0; i < rhs.size(); ++i) {
        const Complex slope = (plus[i] - minus[i]) / (2.0 * h);
        worst = std::max(worst, std::abs(slope - rhs[i]) / std::max(std::abs(rhs[i]), 1e-300));
      }
      return worst;
    };
    const double coarse = residual(0.2);
    const double fine = residual(0.1);
    EXPECT_LT(fine, 1e-3);
    EXPECT_NEAR(coarse / fine, 4.0, 0.1) << "dk=" << dk;
  }
}

TEST(CoefficientOde, ForwardAndOutputFormsAreInverse) {
  // The inversion divides by f1 ~ sech(|k|L); keep |k|L moderate so the
  // round trip is well conditioned.
  testing::RandomDraws draws(5);
  for (int i = 0; i < 50; ++i) {
    CouplerParams p = draws.params();
    p.length = std::min(p.length, 3.0 / std::abs(p.k));
    const Coefficients c = compute_coefficients(p);
    const auto back = output_coefficients(forward_from_output(c)).as_array();
    const auto orig = c.as_array();
    for (std::size_t j = 0; j < orig.size(); ++j) {
      EXPECT_LE(std::abs(back[j] - orig[j]), 1e-12 * std::max(1.0, std::abs(orig[j]))) << Coefficients::kNames[j];
    }
  }
}

}  // namespace
}  // namespace coupler

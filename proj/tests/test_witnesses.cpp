#include <gtest/gtest.h>

#include <cmath>

#include "coupler/witness_oracle.hpp"
#include "coupler/witnesses.hpp"
#include "support.hpp"

namespace coupler {
namespace {

using testing::close_relative;
using testing::fig_input;
using testing::fig_params;

TEST(Witnesses, LinearLimitConservesPhotons) {
  const Coefficients c = compute_coefficients(fig_params(0.0, 1e-4, 1.0));
  const CoherentInput in = fig_input();
  const auto n = mean_photon_numbers(c, in);
  EXPECT_NEAR(n.a, std::norm(c.f1 * 5.0 + c.f2 * 2.0), 1e-13);
  EXPECT_NEAR(n.b1, std::norm(c.g1 * 5.0 + c.g2 * 2.0), 1e-13);
  EXPECT_NEAR(n.a + n.b1, 29.0, 1e-12);
  EXPECT_NEAR(n.b2, 1.0, 1e-15);
}

TEST(Witnesses, VacuumHasNoPhotons) {
  const auto n = mean_photon_numbers(compute_coefficients(fig_params()), CoherentInput{});
  EXPECT_EQ(n.a, 0.0);
  EXPECT_EQ(n.b1, 0.0);
  EXPECT_EQ(n.b2, 0.0);
}

TEST(Witnesses, VariancesAreCoherentWithoutPump) {
  const auto q = quadrature_variances(compute_coefficients(fig_params(0.001, 1e-4, 30.0)), fig_input(5.0, 0.0));
  for (const Variance& v : {q.single.a, q.single.b1, q.single.b2, q.compound.ab1, q.compound.ab2, q.compound.b1b2}) {
    EXPECT_EQ(v.x, 0.25);
    EXPECT_EQ(v.y, 0.25);
  }
}

TEST(Witnesses, BijectiveCompoundVariances) {
  testing::RandomDraws draws(17);
  for (int i = 0; i < 100; ++i) {
    const auto q = quadrature_variances(compute_coefficients(draws.params()), draws.input());
    EXPECT_NEAR(q.compound.ab2.x, q.single.a.x / 2 + 0.125, 1e-15);
    EXPECT_NEAR(q.compound.ab2.y, q.single.a.y / 2 + 0.125, 1e-15);
    EXPECT_NEAR(q.compound.b1b2.x, q.single.b1.x / 2 + 0.125, 1e-15);
    EXPECT_NEAR(q.compound.b1b2.y, q.single.b1.y / 2 + 0.125, 1e-15);
  }
}

TEST(Witnesses, HzFactorizationAndAntisymmetry) {
  const Coefficients c = compute_coefficients(fig_params(0.001, 1e-4, 40.0));
  const CoherentInput in = fig_input();
  const double F = std::norm(c.f1 * in.alpha + c.f2 * in.beta);
  const double G = std::norm(c.g1 * in.alpha + c.g2 * in.beta);
  const HzPair e11 = hz_entanglement(c, in, 1, 1);
  const HzPair e21 = hz_entanglement(c, in, 2, 1);
  const HzPair e22 = hz_entanglement(c, in, 2, 2);
  EXPECT_NE(e11.e, 0.0);
  EXPECT_DOUBLE_EQ(e21.e, 2.0 * F * e11.e);
  EXPECT_DOUBLE_EQ(e22.e, 4.0 * F * G * e11.e);
  EXPECT_EQ(e21.e_prime, -e21.e);
  EXPECT_THROW((void)hz_entanglement(c, in, 0, 1), DomainError);
}

TEST(Witnesses, IntermodalAntibunchingEqualsHzBase) {
  // At first order <N_a N_b1> - <N_a><N_b1> and <N_a N_b1> - |<a b1†>|² coincide.
  testing::RandomDraws draws(23);
  for (int i = 0; i < 50; ++i) {
    const Coefficients c = compute_coefficients(draws.params());
    const CoherentInput in = draws.input();
    const double d = intermodal_antibunching(c, in).ab1;
    const double e = hz_entanglement(c, in, 1, 1).e;
    EXPECT_TRUE(close_relative(d, e, 1e-10, 1e-12)) << d << " vs " << e;
  }
}

TEST(Witnesses, RejectsLowOrders) {
  const Coefficients c = compute_coefficients(fig_params());
  EXPECT_THROW((void)antibunching(c, fig_input(), 1), DomainError);
  EXPECT_THROW((void)amplitude_powered_squeezing(c, fig_input(), 1), DomainError);
  EXPECT_THROW((void)MonomialEvaluator(c, fig_input()).antibunching(1), DomainError);
}

TEST(Witnesses, GammaFlipReversesAntibunching) {
  const Coefficients c = compute_coefficients(fig_params(0.001, 1e-4, 50.0));
  EXPECT_DOUBLE_EQ(antibunching(c, fig_input(5.0, -1.0), 2).b1, -antibunching(c, fig_input(5.0, 1.0), 2).b1);
}

// Closed forms against the monomial evaluator for complex couplings and
// amplitudes, where misplaced conjugations would show. Agreement is required
// to 1e-12 relative or to ten times the sensitivity of the two paths to
// ulp-level coefficient changes, whichever is looser; a wrong conjugation is an O(1) error.
TEST(Witnesses, ClosedFormsMatchEvaluatorForComplexInputs) {
  testing::RandomDraws draws(29);
  for (int i = 0; i < 40; ++i) {
    const Coefficients c = compute_coefficients(draws.params());
    const CoherentInput in = draws.input();
    const auto closed = testing::closed_form_values(c, in);
    const auto oracle = testing::evaluator_values(c, in);
    const auto noise = testing::evaluation_sensitivity(c, in);
    for (const auto& [name, v] : closed) {
      const double ref = oracle.at(name);
      const double allowed = std::max(1e-12 * std::max({std::abs(v), std::abs(ref), testing::family_scale(closed, name)}),
                                      10.0 * noise.at(name));
      EXPECT_LE(std::abs(v - ref), allowed) << name << ": closed " << v << " evaluator " << ref;
    }
  }
}

// The textbook D_ab1 conjugates the αβγ* term differently; it agrees with
// the evaluator only when the amplitudes are real.
TEST(Witnesses, TextbookIntermodalFormFailsOnlyForComplexAmplitudes) {
  const Coefficients c = compute_coefficients(fig_params(0.001, 1e-4, 30.0));
  auto textbook = [&](const CoherentInput& in) {
    using std::conj;
    using std::norm;
    const Complex al = in.alpha, be = in.beta, ga = in.gamma;
    const Complex d =
        (norm(c.g1) * conj(c.f1) * c.f4 + conj(c.f1) * c.f3 * conj(c.g1) * c.g2) * conj(al) * conj(al) * ga +
        (norm(c.g2) * conj(c.f2) * c.f3 + conj(c.f2) * c.f4 * conj(c.g2) * c.g1) * conj(be) * conj(be) * ga +
        (norm(c.g1) - norm(c.g2)) * (conj(c.f2) * c.f4 - conj(c.f1) * c.f3) * al * be * conj(ga);
    return 2.0 * d.real();
  };
  const CoherentInput real_in = fig_input();
  const double ref_real = MonomialEvaluator(c, real_in).intermodal_antibunching().ab1;
  EXPECT_TRUE(close_relative(textbook(real_in), ref_real, 1e-12));
  const CoherentInput complex_in{std::polar(5.0, 0.4), std::polar(2.0, -1.1), std::polar(1.0, 0.7)};
  const double ref_complex = MonomialEvaluator(c, complex_in).intermodal_antibunching().ab1;
  EXPECT_TRUE(close_relative(intermodal_antibunching(c, complex_in).ab1, ref_complex, 1e-12));
  EXPECT_FALSE(close_relative(textbook(complex_in), ref_complex, 1e-6));
}

TEST(Witnesses, OtherPairsAndDuanVanishAtFirstOrder) {
  testing::RandomDraws draws(31);
  for (int i = 0; i < 30; ++i) {
    const Coefficients c = compute_coefficients(draws.params());
    const CoherentInput in = draws.input();
    const double scale = std::abs(hz_entanglement(c, in, 1, 1).e) + 1.0;
    const auto other = hz_entanglement_other_pairs(c, in);
    for (double v : {other.ab2.e, other.ab2.e_prime, other.b1b2.e, other.b1b2.e_prime}) {
      EXPECT_LT(std::abs(v), 1e-12 * scale);
    }
    const auto d = duan_witness(c, in);
    for (double v : {d.ab1, d.ab2, d.b1b2}) EXPECT_LT(std::abs(v), 1e-12);
  }
}

TEST(Witnesses, ReportCollectsRequestedOrders) {
  const WitnessReport r = evaluate_witnesses(compute_coefficients(fig_params()), fig_input());
  EXPECT_EQ(r.antibunch.size(), 4u);
  EXPECT_EQ(r.amp_powered.size(), 2u);
  EXPECT_EQ(r.hz.size(), 3u);
  EXPECT_EQ(r.quad_var.single.b2.x, 0.25);
}

// The evaluator reports witnesses from their first-order parts; the dropped
// zeroth-order parts must be pure rounding noise.
TEST(Witnesses, EvaluatorZerothOrderPartsVanish) {
  for (double length : {1.0, 30.0}) {
    const MonomialEvaluator e(compute_coefficients(fig_params(0.001, 1e-4, length)), fig_input());
    (void)e.antibunching(5);
    (void)e.hz(OutputMode::kA, OutputMode::kB1, 2, 2);
    (void)e.three_mode();
    (void)e.duan();
    // Largest moments here are ~|alpha|^10 ~ 1e7; long double keeps their
    // cancellation near 1e-12.
    EXPECT_LT(e.zeroth_order_residual(), 1e-10) << length;
  }
}

}  // namespace
}  // namespace coupler

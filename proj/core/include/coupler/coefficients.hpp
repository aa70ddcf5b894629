#pragma once

#include <array>
#include <string_view>

#include "coupler/types.hpp"

namespace coupler {

/// Coefficient functions of the output-plane solution
///
///   a(0)  = f1 a(L) + f2 b1(0) + f3 b1†(0) b2(0) + f4 a†(L) b2(0)
///   b1(L) = g1 a(L) + g2 b1(0) + g3 b1†(0) b2(0) + g4 a†(L) b2(0)
///   b2(L) = h1 b2(0) + h2 b1²(0) + h3 b1(0) a(L) + h4 a²(L)
///
/// f1, f2, g1, g2, h1 are zeroth order in the nonlinear coupling; the other
/// seven are first order.
struct Coefficients {
  Complex f1, f2, f3, f4;
  Complex g1, g2, g3, g4;
  Complex h1, h2, h3, h4;

  static constexpr std::size_t kCount = 12;
  static constexpr std::array<std::string_view, kCount> kNames = {
      "f1", "f2", "f3", "f4", "g1", "g2", "g3", "g4", "h1", "h2", "h3", "h4"};

  [[nodiscard]] std::array<Complex, kCount> as_array() const {
    return {f1, f2, f3, f4, g1, g2, g3, g4, h1, h2, h3, h4};
  }
  [[nodiscard]] static Coefficients from_array(const std::array<Complex, kCount>& c) {
    return {c[0], c[1], c[2], c[3], c[4], c[5], c[6], c[7], c[8], c[9], c[10], c[11]};
  }
  /// True for the coefficients that carry one power of the nonlinear coupling.
  [[nodiscard]] static constexpr bool is_first_order(std::size_t index) {
    return !(index == 0 || index == 1 || index == 4 || index == 5 || index == 8);
  }
};

/// Below this value of delta_k * length, G-/delta_k is taken from its series.
inline constexpr double kSmallMismatchThreshold = 1e-6;

/// Closed-form perturbative coefficients at params.length.
///
/// Every first-order coefficient is written in terms of
/// C~ = Γ*/(|k|(Δk² + 4|k|²)) and (1 - exp(-iΔkL))/Δk, so the 1/Δk of the
/// textbook prefactor never appears and Δk = 0 is admissible. The hyperbolic
/// products are reduced with sech/tanh identities; nothing overflows for
/// large |k|L.
///
/// h3 uses iΔk²(G+* - 1) in its bracket (the Δk² term carries exp(iΔkL)).
/// The coefficient-ODE oracle confirms this form; see printed_coefficients()
/// for the variant without that factor.
[[nodiscard]] Coefficients compute_coefficients(const CouplerParams& params);

/// Quadratic-in-L truncation at zero mismatch (the short-length solution).
[[nodiscard]] Coefficients short_length_coefficients(const CouplerParams& params);

/// Literal transcription of the textbook closed form, including the
/// 1/Δk prefactor and the textbook h3 bracket. Requires delta_k > 0 and
/// loses accuracy as Δk -> 0. Kept so validation can quantify how far the
/// textbook expressions sit from the oracle.
[[nodiscard]] Coefficients printed_coefficients(const CouplerParams& params);

/// (1 - exp(-i delta_k length)) / delta_k, finite at delta_k = 0.
[[nodiscard]] Complex mismatch_phase_ratio(double delta_k, double length);

}  // namespace coupler

#pragma once

#include <array>
#include <vector>

#include "coupler/coefficients.hpp"

namespace coupler {

/// Coefficients of the forward ansatz, every mode at z written in the z = 0
/// operators:
///
///   a(z)  = F1 a + F2 b1 + F3 b1† b2 + F4 a† b2
///   b1(z) = G1 a + G2 b1 + G3 b1† b2 + G4 a† b2
///   b2(z) = b2 + H2 b1² + H3 b1 a + H4 a²
struct ForwardCoefficients {
  std::array<Complex, 4> F{Complex{1.0, 0.0}, {}, {}, {}};
  std::array<Complex, 4> G{Complex{}, Complex{1.0, 0.0}, {}, {}};
  std::array<Complex, 3> H{};  // H2, H3, H4

  static constexpr std::size_t kSize = 11;
  [[nodiscard]] std::array<Complex, kSize> pack() const;
  [[nodiscard]] static ForwardCoefficients unpack(const std::array<Complex, kSize>& v);
};

/// z-derivative of the forward coefficients. The ansatz is substituted into
///
///   da/dz = i k* b1,  db1/dz = -i k a - 2iΓ* b1† b2 e^{-iΔkz},  db2/dz = -iΓ b1² e^{iΔkz}
///
/// with the operator algebra, products are normal-ordered and truncated at
/// first order in Γ, and the derivative is read off monomial by monomial.
/// Throws DomainError if the truncated system leaves the ansatz basis.
[[nodiscard]] ForwardCoefficients forward_derivative(const CouplerParams& params, double z,
                                                     const ForwardCoefficients& state);

/// Classical RK4 from z = 0 through each point of `grid` (any order, values
/// >= 0). The step is shortened where needed so grid points are hit exactly.
[[nodiscard]] std::vector<ForwardCoefficients> integrate_forward(const CouplerParams& params,
                                                                 const std::vector<double>& grid,
                                                                 double step);

/// Converts forward data at z = L to the output-plane coefficients by
/// inverting the linear block and substituting to first order in Γ.
[[nodiscard]] Coefficients output_coefficients(const ForwardCoefficients& forward);

/// Inverse of output_coefficients.
[[nodiscard]] ForwardCoefficients forward_from_output(const Coefficients& c);

/// integrate_forward followed by output_coefficients, one entry per grid point.
[[nodiscard]] std::vector<Coefficients> ode_coefficients(const CouplerParams& params,
                                                         const std::vector<double>& grid, double step);

}  // namespace coupler

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace coupler {

using Complex = std::complex<double>;

/// Thrown for inputs outside the domain of an operation (|k| = 0, negative
/// length, non-finite values, invalid witness orders, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Device constants of the contradirectional coupler. Units are 1/length for
/// the couplings and the mismatch, length for `length`.
///
/// The perturbative solution is meaningful only for |gamma_nl| << |k|; that
/// regime is not enforced here (validation measures residual growth instead).
struct CouplerParams {
  Complex k{0.1, 0.0};         // linear coupling
  Complex gamma_nl{0.0, 0.0};  // nonlinear (SHG) coupling
  double delta_k = 0.0;        // phase mismatch |2k1 - k2|, >= 0
  double length = 0.0;         // interaction length L, >= 0

  /// Throws DomainError when |k| = 0, delta_k < 0, length < 0 or any field is
  /// non-finite.
  void validate() const;

  [[nodiscard]] CouplerParams with_length(double l) const {
    CouplerParams p = *this;
    p.length = l;
    return p;
  }
};

/// Amplitudes of the coherent input |alpha>|beta>|gamma> for the modes
/// a (at z = L), b1 (at z = 0) and b2 (at z = 0).
struct CoherentInput {
  Complex alpha{};
  Complex beta{};
  Complex gamma{};

  void validate() const;

  [[nodiscard]] bool spontaneous() const {
    return beta == Complex{} && gamma == Complex{};
  }
};

[[nodiscard]] bool is_finite(Complex z);

}  // namespace coupler

#pragma once

#include "coupler/coefficients.hpp"
#include "coupler/mode_expansion.hpp"
#include "coupler/witnesses.hpp"

namespace coupler {

enum class OutputMode { kA, kB1, kB2 };

/// Second evaluation path for every witness: builds the operator products
/// from the output-mode expansion, normal-orders them, takes coherent-state
/// expectations and truncates at max_order. Shares no code with the
/// closed-form expressions in witnesses.hpp.
///
/// Every witness vanishes identically at zeroth order (a passive linear
/// transform keeps coherent states coherent), so witnesses are reported
/// from their order >= 1 parts. The discarded zeroth-order parts are pure
/// cancellation noise of size eps * |amplitude|^{2m+2n}; their largest
/// magnitude is kept for inspection.
class MonomialEvaluator {
 public:
  MonomialEvaluator(const Coefficients& c, const CoherentInput& in, int max_order = 1);

  [[nodiscard]] PerMode<double> mean_photon_numbers() const;
  [[nodiscard]] QuadratureVariances quadrature_variances() const;
  [[nodiscard]] PerMode<AmplitudeSqueezing> amplitude_powered_squeezing(int n) const;
  [[nodiscard]] PerMode<double> antibunching(int n) const;
  [[nodiscard]] PerPair<double> intermodal_antibunching() const;
  /// E^{m,n}_{jl} = <j†^m j^m l†^n l^n> - |<j^m l†^n>|²,
  /// E'^{m,n}_{jl} = <j†^m j^m><l†^n l^n> - |<j^m l^n>|².
  [[nodiscard]] HzPair hz(OutputMode j, OutputMode l, int m, int n) const;
  [[nodiscard]] PerPair<double> duan() const;
  [[nodiscard]] ThreeModeWitnesses three_mode() const;

  /// <[x, x†]> - 1 for one output mode.
  [[nodiscard]] double commutator_deviation(OutputMode j) const;
  /// Largest |<[x, y]>| and |<[x, y†]>| over distinct output-mode pairs.
  [[nodiscard]] double cross_commutator_magnitude() const;

  /// Largest |zeroth-order part| dropped by the witness methods so far.
  [[nodiscard]] double zeroth_order_residual() const { return static_cast<double>(zeroth_residual_); }

  [[nodiscard]] const OutputModes& modes() const { return modes_; }
  [[nodiscard]] algebra::PerturbativeValue expect(const algebra::Polynomial& p) const;

 private:
  [[nodiscard]] const algebra::Polynomial& op(OutputMode j) const;
  [[nodiscard]] algebra::PerturbativeValue variance(const algebra::Polynomial& hermitian) const;
  [[nodiscard]] double value(const algebra::PerturbativeValue& v) const;
  [[nodiscard]] double excess(const algebra::PerturbativeValue& v) const;

  OutputModes modes_;
  CoherentInput input_;
  int max_order_;
  mutable long double zeroth_residual_ = 0.0L;
};

}  // namespace coupler

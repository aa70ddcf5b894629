#pragma once

#include <map>
#include <utility>
#include <vector>

#include "coupler/coefficients.hpp"
#include "coupler/types.hpp"

namespace coupler {

template <class T>
struct PerMode {
  T a{}, b1{}, b2{};
};

template <class T>
struct PerPair {
  T ab1{}, ab2{}, b1b2{};
};

/// (ΔX)² and (ΔY)². Values below 1/4 signal quadrature squeezing.
struct Variance {
  double x = 0.25;
  double y = 0.25;
};

struct QuadratureVariances {
  PerMode<Variance> single;
  PerPair<Variance> compound;
};

/// A_{1,j} and A_{2,j} of amplitude-powered squeezing.
struct AmplitudeSqueezing {
  double first = 0.0;
  double second = 0.0;
};

/// Hillery-Zubairy pair: E (criterion I) and E' (criterion II).
struct HzPair {
  double e = 0.0;
  double e_prime = 0.0;
};

struct OtherPairsHz {
  HzPair ab2;
  HzPair b1b2;
};

/// Three-mode criteria with m = n = l = 1 for the bipartitions a|b1b2,
/// ab2|b1, ab1|b2, and <N_a><N_b1><N_b2> - |<a b1 b2>|².
struct ThreeModeWitnesses {
  HzPair a_b1b2;
  HzPair ab2_b1;
  HzPair ab1_b2;
  double full_separability = 0.0;
};

inline constexpr double kCoherentVariance = 0.25;

// Closed-form witnesses. All values keep terms up to first order in the
// nonlinear coupling; negativity (or a variance below 1/4) is the
// nonclassicality signature and nothing is clamped or rescaled.

[[nodiscard]] PerMode<double> mean_photon_numbers(const Coefficients& c, const CoherentInput& in);

[[nodiscard]] QuadratureVariances quadrature_variances(const Coefficients& c, const CoherentInput& in);

/// Hillery amplitude-powered squeezing of order n >= 2. A_{i,b2} = 0.
[[nodiscard]] PerMode<AmplitudeSqueezing> amplitude_powered_squeezing(const Coefficients& c,
                                                                      const CoherentInput& in, int n);

/// D_j(n) = <j†^n j^n> - <j†j>^n for n >= 2.
[[nodiscard]] PerMode<double> antibunching(const Coefficients& c, const CoherentInput& in, int n);

/// D_jl = <j†l†lj> - <j†j><l†l>.
[[nodiscard]] PerPair<double> intermodal_antibunching(const Coefficients& c, const CoherentInput& in);

/// E^{m,n}_{ab1} and E'^{m,n}_{ab1}, m, n >= 1.
[[nodiscard]] HzPair hz_entanglement(const Coefficients& c, const CoherentInput& in, int m, int n);

/// HZ-I and HZ-II (m = n = 1) for (a, b2) and (b1, b2). They have no
/// closed form here and are evaluated from the operator expansion.
[[nodiscard]] OtherPairsHz hz_entanglement_other_pairs(const Coefficients& c, const CoherentInput& in);

/// Duan et al. sums d = (Δu)² + (Δv)² - 2, evaluated from the operator
/// expansion. Vanishes identically at first order.
[[nodiscard]] PerPair<double> duan_witness(const Coefficients& c, const CoherentInput& in);

[[nodiscard]] ThreeModeWitnesses three_mode_witnesses(const Coefficients& c, const CoherentInput& in);

/// Orders requested for the order-dependent witnesses of a full report.
struct WitnessOrders {
  std::vector<int> amplitude_powered{2, 3};
  std::vector<int> antibunching{2, 3, 4, 5};
  std::vector<std::pair<int, int>> hz{{1, 1}, {2, 1}, {2, 2}};
};

struct WitnessReport {
  PerMode<double> mean_photons;
  QuadratureVariances quad_var;
  std::map<int, PerMode<AmplitudeSqueezing>> amp_powered;
  std::map<int, PerMode<double>> antibunch;
  PerPair<double> intermodal_antibunch;
  std::map<std::pair<int, int>, HzPair> hz;
  OtherPairsHz hz_other;
  PerPair<double> duan;
  ThreeModeWitnesses three_mode;
};

[[nodiscard]] WitnessReport evaluate_witnesses(const Coefficients& c, const CoherentInput& in,
                                               const WitnessOrders& orders = {});

}  // namespace coupler

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coupler/coefficients.hpp"
#include "coupler/witnesses.hpp"

namespace coupler {

/// Fixed-seed coherent inputs with every amplitude modulus <= max_amplitude
/// and uniform phase.
[[nodiscard]] std::vector<CoherentInput> sample_inputs(std::uint64_t seed, std::size_t count,
                                                       double max_amplitude);

/// Max over samples of |<[x, x†]> - 1| per output mode. Products of two
/// first-order terms are kept, so the deviation is O(Γ²).
[[nodiscard]] PerMode<double> escr_check(const CouplerParams& params, const std::vector<CoherentInput>& samples);

/// Max over samples of |<N_a(0) + N_b1(L) + 2 N_b2(L)> - (|α|² + |β|² + 2|γ|²)|.
[[nodiscard]] double constant_of_motion_residual(const CouplerParams& params,
                                                 const std::vector<CoherentInput>& samples);

/// Per-coefficient max relative error between compute_coefficients and the
/// RK4-integrated coefficient ODE over `grid`.
struct OdeOracleResult {
  std::array<double, Coefficients::kCount> max_rel_error{};
  [[nodiscard]] double max() const;
};

[[nodiscard]] OdeOracleResult ode_oracle(const CouplerParams& params, const std::vector<double>& grid,
                                         double step = 1e-4);

/// Error ratios err(h)/err(h/2) of RK4 on the Γ = 0 block against the exact
/// sech/tanh solution at `length`, for consecutive entries of `steps`.
[[nodiscard]] std::vector<double> rk4_convergence_ratios(const CouplerParams& params, double length,
                                                         const std::vector<double>& steps);

/// Log-log slope of |closed form - short-length form| versus L per
/// coefficient. Coefficients whose difference vanishes at any L (exactly
/// reproduced, or zero on both sides) are not fitted.
struct ShortLengthFit {
  std::array<std::optional<double>, Coefficients::kCount> order{};
  [[nodiscard]] double min_order() const;
};

[[nodiscard]] ShortLengthFit short_length_consistency(const CouplerParams& params,
                                                      const std::vector<double>& lengths);

/// Least-squares slope of log(y) against log(x).
[[nodiscard]] double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

struct ValidationOptions {
  std::vector<double> ode_grid{0.5, 1.0, 2.0, 5.0};
  double ode_step = 1e-4;
  std::size_t sample_count = 100;
  std::uint64_t seed = 20240917;
  double max_amplitude = 5.0;
  std::vector<double> short_lengths{1e-2, 5e-3, 2.5e-3};
  std::vector<double> convergence_steps{1.0, 0.5, 0.25};
};

struct ValidationReport {
  double escr_deviation = 0.0;
  PerMode<double> escr_per_mode;
  double com_residual = 0.0;
  double ode_max_rel_error = 0.0;
  std::array<double, Coefficients::kCount> ode_rel_error{};
  double short_length_scaling = 0.0;
  ShortLengthFit short_length;
  /// Fitted exponents of the ESCR deviation and the constant-of-motion
  /// residual in Γ over {Γ, Γ/2, Γ/4}; absent when Γ = 0.
  std::optional<double> escr_gamma_exponent;
  std::optional<double> com_gamma_exponent;
  std::vector<double> rk4_convergence_ratios;
  /// Relative deviation of the textbook h3 from the oracle; absent when
  /// delta_k = 0 (the textbook form is undefined there).
  std::optional<double> printed_h3_max_rel_error;
};

[[nodiscard]] ValidationReport run_validation(const CouplerParams& params, const ValidationOptions& options = {});

/// One `key=value` line per field.
[[nodiscard]] std::string render_report(const ValidationReport& report);

}  // namespace coupler

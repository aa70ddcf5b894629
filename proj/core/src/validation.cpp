#include "coupler/validation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <fmt/format.h>

#include "coupler/coefficient_ode.hpp"
#include "coupler/witness_oracle.hpp"

namespace coupler {

namespace {

constexpr int kFullProducts = 2;

double unit_interval(std::mt19937_64& rng) {
  // 53 random bits; identical on every platform, unlike the distributions.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void require_samples(const std::vector<CoherentInput>& samples) {
  if (samples.empty()) throw DomainError("validation needs at least one coherent sample");
}

double relative_error(Complex value, Complex reference) {
  const double diff = std::abs(value - reference);
  if (diff == 0.0) return 0.0;
  return diff / std::max(std::abs(reference), 1e-300);
}

std::array<double, Coefficients::kCount> coefficient_errors(const Coefficients& c, const Coefficients& ref) {
  const auto v = c.as_array();
  const auto r = ref.as_array();
  std::array<double, Coefficients::kCount> e{};
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = relative_error(v[i], r[i]);
  return e;
}

double max_of(const PerMode<double>& m) { return std::max({m.a, m.b1, m.b2}); }

std::optional<double> gamma_exponent(const CouplerParams& params, const std::vector<CoherentInput>& samples,
                                     double (*measure)(const CouplerParams&, const std::vector<CoherentInput>&)) {
  if (std::abs(params.gamma_nl) == 0.0) return std::nullopt;
  std::vector<double> gammas;
  std::vector<double> values;
  for (double scale : {1.0, 0.5, 0.25}) {
    CouplerParams p = params;
    p.gamma_nl *= scale;
    const double v = measure(p, samples);
    if (!(v > 0.0)) return std::nullopt;
    gammas.push_back(std::abs(p.gamma_nl));
    values.push_back(v);
  }
  return loglog_slope(gammas, values);
}

}  // namespace

std::vector<CoherentInput> sample_inputs(std::uint64_t seed, std::size_t count, double max_amplitude) {
  std::mt19937_64 rng(seed);
  auto amplitude = [&] {
    const double r = max_amplitude * unit_interval(rng);
    return std::polar(r, 2.0 * std::numbers::pi * unit_interval(rng));
  };
  std::vector<CoherentInput> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    CoherentInput in;
    in.alpha = amplitude();
    in.beta = amplitude();
    in.gamma = amplitude();
    out.push_back(in);
  }
  return out;
}

PerMode<double> escr_check(const CouplerParams& params, const std::vector<CoherentInput>& samples) {
  require_samples(samples);
  const Coefficients c = compute_coefficients(params);
  PerMode<double> worst;
  for (const auto& in : samples) {
    const MonomialEvaluator eval(c, in, kFullProducts);
    worst.a = std::max(worst.a, eval.commutator_deviation(OutputMode::kA));
    worst.b1 = std::max(worst.b1, eval.commutator_deviation(OutputMode::kB1));
    worst.b2 = std::max(worst.b2, eval.commutator_deviation(OutputMode::kB2));
  }
  return worst;
}

double constant_of_motion_residual(const CouplerParams& params, const std::vector<CoherentInput>& samples) {
  require_samples(samples);
  const Coefficients c = compute_coefficients(params);
  double worst = 0.0;
  for (const auto& in : samples) {
    const MonomialEvaluator eval(c, in, kFullProducts);
    const PerMode<double> n = eval.mean_photon_numbers();
    const double lhs = n.a + n.b1 + 2.0 * n.b2;
    const double rhs = std::norm(in.alpha) + std::norm(in.beta) + 2.0 * std::norm(in.gamma);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

double OdeOracleResult::max() const { return *std::max_element(max_rel_error.begin(), max_rel_error.end()); }

OdeOracleResult ode_oracle(const CouplerParams& params, const std::vector<double>& grid, double step) {
  if (grid.empty()) throw DomainError("ODE oracle needs a nonempty length grid");
  const std::vector<Coefficients> integrated = ode_coefficients(params, grid, step);
  OdeOracleResult r;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const auto e = coefficient_errors(compute_coefficients(params.with_length(grid[g])), integrated[g]);
    for (std::size_t i = 0; i < e.size(); ++i) r.max_rel_error[i] = std::max(r.max_rel_error[i], e[i]);
  }
  return r;
}

std::vector<double> rk4_convergence_ratios(const CouplerParams& params, double length,
                                           const std::vector<double>& steps) {
  CouplerParams linear = params;
  linear.gamma_nl = Complex{};
  const Coefficients exact = compute_coefficients(linear.with_length(length));
  std::vector<double> errors;
  for (double h : steps) {
    const Coefficients c = ode_coefficients(linear, {length}, h).front();
    errors.push_back(std::max({std::abs(c.f1 - exact.f1), std::abs(c.f2 - exact.f2), std::abs(c.g1 - exact.g1),
                               std::abs(c.g2 - exact.g2)}));
  }
  std::vector<double> ratios;
  for (std::size_t i = 1; i < errors.size(); ++i) {
    ratios.push_back(errors[i] > 0.0 ? errors[i - 1] / errors[i] : 0.0);
  }
  return ratios;
}

double ShortLengthFit::min_order() const {
  double m = 0.0;
  bool any = false;
  for (const auto& o : order) {
    if (!o) continue;
    m = any ? std::min(m, *o) : *o;
    any = true;
  }
  return m;
}

ShortLengthFit short_length_consistency(const CouplerParams& params, const std::vector<double>& lengths) {
  if (lengths.size() < 3) throw DomainError("short-length fit needs at least three lengths");
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (!(lengths[i] > 0.0)) throw DomainError("short-length fit needs positive lengths");
    if (i > 0 && !(lengths[i] < lengths[i - 1])) throw DomainError("short-length fit needs decreasing lengths");
  }
  if (params.delta_k * lengths.front() >= kSmallMismatchThreshold) {
    throw DomainError("short-length fit needs delta_k * L below the small-mismatch threshold");
  }

  std::array<std::vector<double>, Coefficients::kCount> diffs;
  for (double l : lengths) {
    const CouplerParams p = params.with_length(l);
    const auto closed = compute_coefficients(p).as_array();
    const auto approx = short_length_coefficients(p).as_array();
    for (std::size_t i = 0; i < closed.size(); ++i) diffs[i].push_back(std::abs(closed[i] - approx[i]));
  }
  ShortLengthFit fit;
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    if (std::all_of(diffs[i].begin(), diffs[i].end(), [](double d) { return d > 0.0; })) {
      fit.order[i] = loglog_slope(lengths, diffs[i]);
    }
  }
  return fit;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("log-log fit needs matching samples");
  const auto n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw DomainError("degenerate log-log fit");
  return (n * sxy - sx * sy) / denom;
}

ValidationReport run_validation(const CouplerParams& params, const ValidationOptions& options) {
  CouplerParams base = params;
  base.length = 0.0;
  base.validate();

  ValidationReport r;
  const std::vector<CoherentInput> samples =
      sample_inputs(options.seed, options.sample_count, options.max_amplitude);

  // Residual checks use the largest grid length: the nonlinear build-up, and
  // with it the O(Γ²) remainder, grows with L.
  const double probe_length = *std::max_element(options.ode_grid.begin(), options.ode_grid.end());
  const CouplerParams probe = params.with_length(probe_length);
  r.escr_per_mode = escr_check(probe, samples);
  r.escr_deviation = max_of(r.escr_per_mode);
  r.com_residual = constant_of_motion_residual(probe, samples);
  r.escr_gamma_exponent = gamma_exponent(probe, samples, [](const CouplerParams& p, const std::vector<CoherentInput>& s) {
    return max_of(escr_check(p, s));
  });
  r.com_gamma_exponent = gamma_exponent(probe, samples, &constant_of_motion_residual);

  const std::vector<Coefficients> integrated = ode_coefficients(params, options.ode_grid, options.ode_step);
  std::optional<double> h3_error;
  for (std::size_t g = 0; g < options.ode_grid.size(); ++g) {
    const CouplerParams p = params.with_length(options.ode_grid[g]);
    const auto e = coefficient_errors(compute_coefficients(p), integrated[g]);
    for (std::size_t i = 0; i < e.size(); ++i) r.ode_rel_error[i] = std::max(r.ode_rel_error[i], e[i]);
    if (params.delta_k > 0.0) {
      const double err = relative_error(printed_coefficients(p).h3, integrated[g].h3);
      h3_error = std::max(h3_error.value_or(0.0), err);
    }
  }
  r.ode_max_rel_error = *std::max_element(r.ode_rel_error.begin(), r.ode_rel_error.end());
  r.printed_h3_max_rel_error = h3_error;
  r.rk4_convergence_ratios = rk4_convergence_ratios(params, probe_length, options.convergence_steps);

  CouplerParams near_matched = params;
  near_matched.delta_k = 1e-12;
  r.short_length = short_length_consistency(near_matched, options.short_lengths);
  r.short_length_scaling = r.short_length.min_order();
  return r;
}

std::string render_report(const ValidationReport& r) {
  std::string out;
  auto line = [&](std::string_view key, double v) { out += fmt::format("{}={:.17g}\n", key, v); };
  line("escr_deviation", r.escr_deviation);
  line("escr_deviation_a", r.escr_per_mode.a);
  line("escr_deviation_b1", r.escr_per_mode.b1);
  line("escr_deviation_b2", r.escr_per_mode.b2);
  if (r.escr_gamma_exponent) line("escr_gamma_exponent", *r.escr_gamma_exponent);
  line("com_residual", r.com_residual);
  if (r.com_gamma_exponent) line("com_gamma_exponent", *r.com_gamma_exponent);
  line("ode_max_rel_error", r.ode_max_rel_error);
  for (std::size_t i = 0; i < r.ode_rel_error.size(); ++i) {
    line(fmt::format("ode_rel_error_{}", Coefficients::kNames[i]), r.ode_rel_error[i]);
  }
  for (std::size_t i = 0; i < r.rk4_convergence_ratios.size(); ++i) {
    line(fmt::format("rk4_convergence_ratio_{}", i), r.rk4_convergence_ratios[i]);
  }
  line("short_length_scaling", r.short_length_scaling);
  for (std::size_t i = 0; i < r.short_length.order.size(); ++i) {
    if (r.short_length.order[i]) {
      line(fmt::format("short_length_order_{}", Coefficients::kNames[i]), *r.short_length.order[i]);
    }
  }
  if (r.printed_h3_max_rel_error) line("printed_h3_max_rel_error", *r.printed_h3_max_rel_error);
  return out;
}

}  // namespace coupler

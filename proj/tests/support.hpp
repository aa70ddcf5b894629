#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "coupler/coefficients.hpp"
#include "coupler/witness_oracle.hpp"
#include "coupler/witnesses.hpp"

namespace coupler::testing {

inline CouplerParams fig_params(double gamma_nl = 0.001, double delta_k = 1e-4, double length = 1.0) {
  CouplerParams p;
  p.k = {0.1, 0.0};
  p.gamma_nl = {gamma_nl, 0.0};
  p.delta_k = delta_k;
  p.length = length;
  return p;
}

inline CoherentInput fig_input(double alpha = 5.0, double gamma = 1.0) {
  return {{alpha, 0.0}, {2.0, 0.0}, {gamma, 0.0}};
}

class RandomDraws {
 public:
  explicit RandomDraws(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  Complex phasor(double modulus) { return std::polar(modulus, uniform(0.0, 2.0 * std::numbers::pi)); }

  /// Complex couplings with |Γ| <= |k| / 10, mismatch up to 0.2, L up to 50.
  CouplerParams params() {
    CouplerParams p;
    const double kappa = uniform(0.02, 0.3);
    p.k = phasor(kappa);
    p.gamma_nl = phasor(uniform(0.0, 0.1 * kappa));
    p.delta_k = uniform(0.0, 1.0) < 0.2 ? uniform(0.0, 1e-9) : uniform(0.0, 0.2);
    p.length = uniform(0.0, 50.0);
    return p;
  }
  CoherentInput input(double max_amplitude = 5.0) {
    return {phasor(uniform(0.0, max_amplitude)), phasor(uniform(0.0, max_amplitude)),
            phasor(uniform(0.0, max_amplitude))};
  }

 private:
  std::mt19937_64 rng_;
};

/// Every closed-form value of the report, keyed by a stable name. Variances
/// appear as deviations from 1/4.
inline std::map<std::string, double> closed_form_values(const Coefficients& c, const CoherentInput& in) {
  std::map<std::string, double> v;
  const auto n = mean_photon_numbers(c, in);
  v["N_a"] = n.a;
  v["N_b1"] = n.b1;
  v["N_b2"] = n.b2;
  const auto q = quadrature_variances(c, in);
  auto put_var = [&](const std::string& mode, const Variance& var) {
    v["VarX_" + mode] = var.x - kCoherentVariance;
    v["VarY_" + mode] = var.y - kCoherentVariance;
  };
  put_var("a", q.single.a);
  put_var("b1", q.single.b1);
  put_var("b2", q.single.b2);
  put_var("ab1", q.compound.ab1);
  put_var("ab2", q.compound.ab2);
  put_var("b1b2", q.compound.b1b2);
  for (int k : {2, 3}) {
    const auto a = amplitude_powered_squeezing(c, in, k);
    const std::string s = "(" + std::to_string(k) + ")";
    v["A1_a" + s] = a.a.first;
    v["A2_a" + s] = a.a.second;
    v["A1_b1" + s] = a.b1.first;
    v["A2_b1" + s] = a.b1.second;
    v["A1_b2" + s] = a.b2.first;
    v["A2_b2" + s] = a.b2.second;
  }
  for (int k : {2, 3, 4, 5}) {
    const auto d = antibunching(c, in, k);
    const std::string s = "(" + std::to_string(k) + ")";
    v["D_a" + s] = d.a;
    v["D_b1" + s] = d.b1;
    v["D_b2" + s] = d.b2;
  }
  const auto ia = intermodal_antibunching(c, in);
  v["D_ab1"] = ia.ab1;
  v["D_ab2"] = ia.ab2;
  v["D_b1b2"] = ia.b1b2;
  for (auto [m, k] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
    const auto h = hz_entanglement(c, in, m, k);
    const std::string s = "(" + std::to_string(m) + ";" + std::to_string(k) + ")";
    v["E_ab1" + s] = h.e;
    v["Ep_ab1" + s] = h.e_prime;
  }
  const auto t = three_mode_witnesses(c, in);
  v["E3_a|b1b2"] = t.a_b1b2.e;
  v["E3p_a|b1b2"] = t.a_b1b2.e_prime;
  v["E3_ab2|b1"] = t.ab2_b1.e;
  v["E3p_ab2|b1"] = t.ab2_b1.e_prime;
  v["E3_ab1|b2"] = t.ab1_b2.e;
  v["E3p_ab1|b2"] = t.ab1_b2.e_prime;
  v["full_sep"] = t.full_separability;
  return v;
}

/// The same quantities from the monomial evaluator.
inline std::map<std::string, double> evaluator_values(const Coefficients& c, const CoherentInput& in) {
  const MonomialEvaluator e(c, in);
  std::map<std::string, double> v;
  const auto n = e.mean_photon_numbers();
  v["N_a"] = n.a;
  v["N_b1"] = n.b1;
  v["N_b2"] = n.b2;
  const auto q = e.quadrature_variances();
  auto put_var = [&](const std::string& mode, const Variance& var) {
    v["VarX_" + mode] = var.x - kCoherentVariance;
    v["VarY_" + mode] = var.y - kCoherentVariance;
  };
  put_var("a", q.single.a);
  put_var("b1", q.single.b1);
  put_var("b2", q.single.b2);
  put_var("ab1", q.compound.ab1);
  put_var("ab2", q.compound.ab2);
  put_var("b1b2", q.compound.b1b2);
  for (int k : {2, 3}) {
    const auto a = e.amplitude_powered_squeezing(k);
    const std::string s = "(" + std::to_string(k) + ")";
    v["A1_a" + s] = a.a.first;
    v["A2_a" + s] = a.a.second;
    v["A1_b1" + s] = a.b1.first;
    v["A2_b1" + s] = a.b1.second;
    v["A1_b2" + s] = a.b2.first;
    v["A2_b2" + s] = a.b2.second;
  }
  for (int k : {2, 3, 4, 5}) {
    const auto d = e.antibunching(k);
    const std::string s = "(" + std::to_string(k) + ")";
    v["D_a" + s] = d.a;
    v["D_b1" + s] = d.b1;
    v["D_b2" + s] = d.b2;
  }
  const auto ia = e.intermodal_antibunching();
  v["D_ab1"] = ia.ab1;
  v["D_ab2"] = ia.ab2;
  v["D_b1b2"] = ia.b1b2;
  for (auto [m, k] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
    const auto h = e.hz(OutputMode::kA, OutputMode::kB1, m, k);
    const std::string s = "(" + std::to_string(m) + ";" + std::to_string(k) + ")";
    v["E_ab1" + s] = h.e;
    v["Ep_ab1" + s] = h.e_prime;
  }
  const auto t = e.three_mode();
  v["E3_a|b1b2"] = t.a_b1b2.e;
  v["E3p_a|b1b2"] = t.a_b1b2.e_prime;
  v["E3_ab2|b1"] = t.ab2_b1.e;
  v["E3p_ab2|b1"] = t.ab2_b1.e_prime;
  v["E3_ab1|b2"] = t.ab1_b2.e;
  v["E3p_ab1|b2"] = t.ab1_b2.e_prime;
  v["full_sep"] = t.full_separability;
  return v;
}

/// |a - b| <= tol * max(|a|, |b|, scale). `scale` is the magnitude the
/// quantity reaches elsewhere on the same curve; it keeps points where the
/// curve crosses zero from demanding agreement below roundoff.
inline bool close_relative(double a, double b, double tol, double scale = 0.0) {
  return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), scale});
}

/// Family of a value name: the name with its mode label removed, so
/// "D_b2(3)" and "D_a(3)" share the family "D(3)".
inline std::string family_of(const std::string& name) {
  const auto underscore = name.find('_');
  if (underscore == std::string::npos) return name;
  const auto paren = name.find('(');
  return name.substr(0, underscore) + (paren == std::string::npos ? "" : name.substr(paren));
}

/// Largest magnitude among the values of the same family as `name`.
/// Quantities that vanish identically are judged against this scale. The
/// Duan sums d_jl are twice the compound X plus Y variance deviations, so
/// they borrow the variance families' scale.
inline double family_scale(const std::map<std::string, double>& values, const std::string& name) {
  const std::string family = family_of(name);
  double scale = 0.0;
  for (const auto& [other, v] : values) {
    const std::string f = family_of(other);
    if (f == family) scale = std::max(scale, std::abs(v));
    if (family == "d" && (f == "VarX" || f == "VarY")) scale = std::max(scale, 4.0 * std::abs(v));
  }
  return scale;
}

/// How far either evaluation path moves when the coefficients are perturbed
/// by a few ulps (largest change over three perturbation patterns). The
/// first-order parts are sums of large terms whose cancellation relies on
/// the coefficient identities holding exactly, so this is the resolution to
/// which the two paths can confirm each other.
inline std::map<std::string, double> evaluation_sensitivity(const Coefficients& c, const CoherentInput& in) {
  const auto base_closed = closed_form_values(c, in);
  const auto base_eval = evaluator_values(c, in);
  std::map<std::string, double> out;
  for (int pattern = 0; pattern < 3; ++pattern) {
    auto coeffs = c.as_array();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      const double rel = (((i + pattern) % 3) - 1.0) * 4.0 * std::numeric_limits<double>::epsilon();
      coeffs[i] *= Complex(1.0 + rel, pattern == 1 ? -rel : rel);
    }
    const Coefficients moved = Coefficients::from_array(coeffs);
    const auto closed = closed_form_values(moved, in);
    const auto eval = evaluator_values(moved, in);
    for (const auto& [name, v] : base_eval) {
      out[name] = std::max({out[name], std::abs(eval.at(name) - v), std::abs(closed.at(name) - base_closed.at(name))});
    }
  }
  return out;
}

}  // namespace coupler::testing

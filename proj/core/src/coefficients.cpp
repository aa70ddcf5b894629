#include "coupler/coefficients.hpp"

#include <cmath>

namespace coupler {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_finite(const Coefficients& c) {
  for (const Complex& v : c.as_array()) {
    if (!is_finite(v)) throw DomainError("coefficient evaluation produced a non-finite value");
  }
}

}  // namespace

Complex mismatch_phase_ratio(double delta_k, double length) {
  const double theta = delta_k * length;
  if (theta < kSmallMismatchThreshold) {
    // exp(-i theta) to third order, divided by delta_k before evaluation.
    return length * Complex{theta / 2.0, 1.0 - theta * theta / 6.0};
  }
  // 1 - exp(-i theta) = 2 sin^2(theta/2) + i sin(theta), free of cancellation.
  const double half = std::sin(theta / 2.0);
  return Complex{2.0 * half * half, std::sin(theta)} / delta_k;
}

Coefficients compute_coefficients(const CouplerParams& params) {
  params.validate();
  const Complex k = params.k;
  const Complex kc = std::conj(k);
  const double kappa = std::abs(k);
  const double dk = params.delta_k;
  const double x = kappa * params.length;

  const double s = 1.0 / std::cosh(x);  // sech, 0 once cosh overflows
  const double t = std::tanh(x);
  const double s2 = s * s;

  // exp(-i dk L); G+ = 1 + e, G+* - 1 = e*, G- = dk * gm_ratio.
  const Complex e = std::polar(1.0, -dk * params.length);
  const Complex ec = std::conj(e);
  const Complex gp = 1.0 + e;
  const Complex gm_ratio = mismatch_phase_ratio(dk, params.length);
  const Complex gm = dk * gm_ratio;

  const Complex ct = std::conj(params.gamma_nl) / (kappa * (dk * dk + 4.0 * kappa * kappa));
  const Complex ctc = std::conj(ct);
  const double kappa2 = kappa * kappa;

  Coefficients c;
  c.f1 = s;
  c.f2 = -kI * kc * t / kappa;
  c.g1 = -std::conj(c.f2);
  c.g2 = s;
  c.h1 = 1.0;

  c.f3 = ct * kc * (2.0 * kI * dk * t + 2.0 * kappa * (s2 * gp - 2.0));
  c.f4 = 2.0 * ct * kc * kc * (kI * s * t * gp - 2.0 * kappa * s * gm_ratio);
  c.g3 = -2.0 * ct * kappa * ((dk * dk + 2.0 * kappa2) * s * gm_ratio + kI * kappa * s * t * gp);
  c.g4 = ct * kc *
         (2.0 * kI * dk * t * (gp - 1.0) - 2.0 * kappa * (s2 - (2.0 - s2) * (gp - 1.0)));
  c.h2 = ctc * kappa / 2.0 *
         (4.0 * kappa2 * s2 * std::conj(gm_ratio) + dk * (2.0 - 2.0 * s2 * ec) - 4.0 * kI * kappa * t);
  c.h3 = 2.0 * ctc * k *
         (kappa * std::conj(gm) * s +
          (kI * dk * ec - 2.0 * kI * kappa2 * std::conj(gm_ratio)) * s * t);
  c.h4 = ctc * kappa * (k / kc) *
         (2.0 * kappa2 * s2 * std::conj(gm_ratio) + t * ec * (2.0 * kI * kappa + dk * t));

  require_finite(c);
  return c;
}

Coefficients short_length_coefficients(const CouplerParams& params) {
  params.validate();
  const Complex k = params.k;
  const Complex kc = std::conj(k);
  const Complex gc = std::conj(params.gamma_nl);
  const double l = params.length;
  const double kappa = std::abs(k);

  Coefficients c;
  c.f1 = 1.0 - kappa * kappa * l * l / 2.0;
  c.g2 = c.f1;
  c.f2 = -kI * kc * l;
  c.g1 = -std::conj(c.f2);
  c.f3 = -gc * kc * l * l;
  c.g4 = -c.f3;
  c.g3 = -2.0 * kI * gc * l;
  c.h1 = 1.0;
  c.h2 = -kI * params.gamma_nl * l;
  c.h3 = -params.gamma_nl * k * l * l;
  c.f4 = 0.0;
  c.h4 = 0.0;
  require_finite(c);
  return c;
}

Coefficients printed_coefficients(const CouplerParams& params) {
  params.validate();
  if (params.delta_k <= 0.0) throw DomainError("printed closed form needs delta_k > 0");
  const Complex k = params.k;
  const Complex kc = std::conj(k);
  const double kappa = std::abs(k);
  const double dk = params.delta_k;
  const double x = kappa * params.length;
  const double ch = std::cosh(x), sh = std::sinh(x), th = std::tanh(x);
  const double ch2 = std::cosh(2.0 * x), sh2 = std::sinh(2.0 * x);

  const Complex e = std::polar(1.0, -dk * params.length);
  const Complex gp = 1.0 + e, gm = 1.0 - e;
  const Complex gpc = std::conj(gp), gmc = std::conj(gm);
  const Complex cc = std::conj(params.gamma_nl) / (kappa * dk * (dk * dk + 4.0 * kappa * kappa));
  const Complex ccc = std::conj(cc);

  Coefficients c;
  c.f1 = 1.0 / ch;
  c.g2 = c.f1;
  c.f2 = -kI * kc * th / kappa;
  c.g1 = -std::conj(c.f2);
  c.h1 = 1.0;
  const Complex f1sq = c.f1 * c.f1;
  c.f3 = cc * kc * dk * f1sq * (kI * dk * sh2 + 2.0 * kappa * (gp - 1.0 - ch2));
  c.f4 = 2.0 * cc * kc * kc * f1sq * (kI * dk * sh * gp - 2.0 * kappa * ch * gm);
  c.g3 = -2.0 * cc * kappa * f1sq *
         ((dk * dk + 2.0 * kappa * kappa) * ch * gm + kI * dk * kappa * sh * gp);
  c.g4 = cc * kc * dk * f1sq *
         (kI * dk * sh2 * (gp - 1.0) - 2.0 * kappa * (1.0 - ch2 * (gp - 1.0)));
  c.h2 = ccc * kappa / 2.0 * f1sq *
         (4.0 * kappa * kappa * gmc + dk * dk * (1.0 - 2.0 * (gpc - 1.0) + ch2) -
          2.0 * kI * dk * kappa * sh2);
  c.h3 = 2.0 * ccc * k * f1sq *
         (dk * kappa * gmc * ch + (kI * dk * dk - 2.0 * kI * kappa * kappa * gmc) * sh);
  c.h4 = ccc * kappa * k / kc * c.f1 *
         (2.0 * kappa * kappa * c.f1 * gmc + dk * sh * (gpc - 1.0) * (2.0 * kI * kappa + dk * th));
  require_finite(c);
  return c;
}

}  // namespace coupler

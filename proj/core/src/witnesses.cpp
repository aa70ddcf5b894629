#include "coupler/witnesses.hpp"

#include <cmath>
#include <complex>

#include "coupler/witness_oracle.hpp"

namespace coupler {

namespace {

double two_re(Complex z) { return 2.0 * z.real(); }

double binomial2(int n) { return 0.5 * n * (n - 1); }

Complex ipow(Complex z, int n) {
  Complex r{1.0, 0.0};
  for (int i = 0; i < n; ++i) r *= z;
  return r;
}

// Zeroth-order output amplitudes and the first-order mixing terms of a, b1.
struct Amplitudes {
  Complex F, G;    // f1 α + f2 β, g1 α + g2 β
  Complex Xa, Xb;  // f1 f4 + f2 f3, g1 g4 + g2 g3
};

Amplitudes amplitudes(const Coefficients& c, const CoherentInput& in) {
  return {c.f1 * in.alpha + c.f2 * in.beta, c.g1 * in.alpha + c.g2 * in.beta,
          c.f1 * c.f4 + c.f2 * c.f3, c.g1 * c.g4 + c.g2 * c.g3};
}

double photon_number(Complex x1, Complex x2, Complex x3, Complex x4, const CoherentInput& in) {
  const Complex al = in.alpha, be = in.beta, ga = in.gamma;
  return std::norm(x1) * std::norm(al) + std::norm(x2) * std::norm(be) +
         two_re(std::conj(x1) * x2 * std::conj(al) * be +
                std::conj(x1) * x3 * std::conj(al) * std::conj(be) * ga +
                std::conj(x1) * x4 * std::conj(al) * std::conj(al) * ga +
                std::conj(x2) * x3 * std::conj(be) * std::conj(be) * ga +
                std::conj(x2) * x4 * std::conj(be) * std::conj(al) * ga);
}

Variance variance_pair(double shift) { return {0.25 * (1.0 + shift), 0.25 * (1.0 - shift)}; }

// E^{1,1}_{ab1}; real analytically, the imaginary part is roundoff.
double hz_base(const Coefficients& c, const CoherentInput& in) {
  const Complex f1 = c.f1, f2 = c.f2, f3 = c.f3, f4 = c.f4;
  const Complex g1 = c.g1, g2 = c.g2, g3 = c.g3, g4 = c.g4;
  const Complex al = in.alpha, be = in.beta, ga = in.gamma;
  using std::conj;
  using std::norm;
  const Complex e =
      (norm(g1) * conj(f4) * f1 + conj(f3) * f1 * conj(g2) * g1) * al * al * conj(ga) +
      (norm(f1) * conj(g1) * g4 + conj(f1) * f2 * conj(g1) * g3) * conj(al) * conj(al) * ga +
      (norm(g2) * conj(f3) * f2 + conj(f4) * f2 * conj(g1) * g2) * be * be * conj(ga) +
      (norm(f2) * conj(g2) * g3 + conj(f2) * f1 * conj(g2) * g4) * conj(be) * conj(be) * ga +
      (norm(g1) - norm(g2)) * ((conj(f4) * f2 - conj(f3) * f1) * al * be * conj(ga) -
                               (conj(g2) * g4 - conj(g1) * g3) * conj(al) * conj(be) * ga);
  return e.real();
}

}  // namespace

PerMode<double> mean_photon_numbers(const Coefficients& c, const CoherentInput& in) {
  in.validate();
  PerMode<double> n;
  n.a = photon_number(c.f1, c.f2, c.f3, c.f4, in);
  n.b1 = photon_number(c.g1, c.g2, c.g3, c.g4, in);
  n.b2 = std::norm(in.gamma) +
         two_re(std::conj(in.gamma) * (c.h2 * in.beta * in.beta + c.h3 * in.beta * in.alpha +
                                       c.h4 * in.alpha * in.alpha));
  return n;
}

QuadratureVariances quadrature_variances(const Coefficients& c, const CoherentInput& in) {
  in.validate();
  const Amplitudes m = amplitudes(c, in);
  const double sa = two_re(m.Xa * in.gamma);
  const double sb = two_re(m.Xb * in.gamma);
  const double sab =
      0.5 * two_re(((c.f1 + c.g1) * (c.f4 + c.g4) + (c.f2 + c.g2) * (c.f3 + c.g3)) * in.gamma);

  QuadratureVariances v;
  v.single = {variance_pair(sa), variance_pair(sb), Variance{}};
  // Compound quadratures with b2 average in its unsqueezed 1/4.
  v.compound = {variance_pair(sab), variance_pair(0.5 * sa), variance_pair(0.5 * sb)};
  return v;
}

PerMode<AmplitudeSqueezing> amplitude_powered_squeezing(const Coefficients& c, const CoherentInput& in,
                                                        int n) {
  if (n < 2) throw DomainError("amplitude-powered squeezing needs n >= 2");
  in.validate();
  const Amplitudes m = amplitudes(c, in);
  auto compute = [&](Complex amp, Complex x) {
    const double a1 = n * n / 4.0 * two_re(in.gamma * x * ipow(amp, 2 * n - 2));
    return AmplitudeSqueezing{a1, -a1};
  };
  return {compute(m.F, m.Xa), compute(m.G, m.Xb), AmplitudeSqueezing{}};
}

PerMode<double> antibunching(const Coefficients& c, const CoherentInput& in, int n) {
  if (n < 2) throw DomainError("antibunching needs n >= 2");
  in.validate();
  const Amplitudes m = amplitudes(c, in);
  auto compute = [&](Complex amp, Complex x) {
    return binomial2(n) * std::pow(std::norm(amp), n - 2) *
           two_re(in.gamma * std::conj(amp) * std::conj(amp) * x);
  };
  return {compute(m.F, m.Xa), compute(m.G, m.Xb), 0.0};
}

PerPair<double> intermodal_antibunching(const Coefficients& c, const CoherentInput& in) {
  in.validate();
  using std::conj;
  using std::norm;
  const Complex al = in.alpha, be = in.beta, ga = in.gamma;
  const Complex d =
      (norm(c.g1) * conj(c.f1) * c.f4 + conj(c.f1) * c.f3 * conj(c.g1) * c.g2) * conj(al) * conj(al) * ga +
      (norm(c.g2) * conj(c.f2) * c.f3 + conj(c.f2) * c.f4 * conj(c.g2) * c.g1) * conj(be) * conj(be) * ga +
      (norm(c.g1) - norm(c.g2)) * (c.f2 * conj(c.f4) - c.f1 * conj(c.f3)) * al * be * conj(ga);
  return {two_re(d), 0.0, 0.0};
}

HzPair hz_entanglement(const Coefficients& c, const CoherentInput& in, int m, int n) {
  if (m < 1 || n < 1) throw DomainError("HZ criteria need m, n >= 1");
  in.validate();
  const Amplitudes amp = amplitudes(c, in);
  const double e = m * n * std::pow(std::norm(amp.F), m - 1) * std::pow(std::norm(amp.G), n - 1) *
                   hz_base(c, in);
  return {e, -e};
}

OtherPairsHz hz_entanglement_other_pairs(const Coefficients& c, const CoherentInput& in) {
  const MonomialEvaluator eval(c, in);
  return {eval.hz(OutputMode::kA, OutputMode::kB2, 1, 1), eval.hz(OutputMode::kB1, OutputMode::kB2, 1, 1)};
}

PerPair<double> duan_witness(const Coefficients& c, const CoherentInput& in) {
  return MonomialEvaluator(c, in).duan();
}

ThreeModeWitnesses three_mode_witnesses(const Coefficients& c, const CoherentInput& in) {
  in.validate();
  const double e = std::norm(in.gamma) * hz_base(c, in);
  ThreeModeWitnesses w;
  w.a_b1b2 = {e, -e};
  w.ab2_b1 = {e, -e};
  w.ab1_b2 = {0.0, 0.0};
  w.full_separability = -e;
  return w;
}

WitnessReport evaluate_witnesses(const Coefficients& c, const CoherentInput& in, const WitnessOrders& orders) {
  WitnessReport r;
  r.mean_photons = mean_photon_numbers(c, in);
  r.quad_var = quadrature_variances(c, in);
  for (int n : orders.amplitude_powered) r.amp_powered[n] = amplitude_powered_squeezing(c, in, n);
  for (int n : orders.antibunching) r.antibunch[n] = antibunching(c, in, n);
  r.intermodal_antibunch = intermodal_antibunching(c, in);
  for (const auto& [m, n] : orders.hz) r.hz[{m, n}] = hz_entanglement(c, in, m, n);
  r.hz_other = hz_entanglement_other_pairs(c, in);
  r.duan = duan_witness(c, in);
  r.three_mode = three_mode_witnesses(c, in);
  return r;
}

}  // namespace coupler

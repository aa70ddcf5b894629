#include "coupler/witness_oracle.hpp"

#include <algorithm>
#include <cmath>

namespace coupler {

using algebra::PerturbativeValue;
using algebra::Polynomial;
using algebra::Scalar;

namespace {

constexpr Scalar kI{0.0L, 1.0L};

Polynomial x_quadrature(const Polynomial& op) { return (op + op.adjoint()) * Scalar(0.5L); }
Polynomial y_quadrature(const Polynomial& op) { return (op - op.adjoint()) * (-0.5L * kI); }

void require_order(int n, int minimum, const char* what) {
  if (n < minimum) throw DomainError(what);
}

}  // namespace

MonomialEvaluator::MonomialEvaluator(const Coefficients& c, const CoherentInput& in, int max_order)
    : modes_(output_modes(c, max_order)), input_(in), max_order_(max_order) {
  in.validate();
}

const Polynomial& MonomialEvaluator::op(OutputMode j) const {
  switch (j) {
    case OutputMode::kA: return modes_.a;
    case OutputMode::kB1: return modes_.b1;
    case OutputMode::kB2: return modes_.b2;
  }
  return modes_.a;
}

PerturbativeValue MonomialEvaluator::expect(const Polynomial& p) const { return p.expectation(input_); }

PerturbativeValue MonomialEvaluator::variance(const Polynomial& hermitian) const {
  const PerturbativeValue mean = expect(hermitian);
  return expect(hermitian * hermitian) - mean * mean;
}

double MonomialEvaluator::value(const PerturbativeValue& v) const {
  return static_cast<double>(v.real_total());
}

double MonomialEvaluator::excess(const PerturbativeValue& v) const {
  zeroth_residual_ = std::max(zeroth_residual_, std::abs(v.at(0)));
  long double sum = 0.0L;
  for (int o = 1; o <= max_order_; ++o) sum += v.at(o).real();
  return static_cast<double>(sum);
}

PerMode<double> MonomialEvaluator::mean_photon_numbers() const {
  auto number = [&](const Polynomial& x) { return value(expect(x.adjoint() * x)); };
  return {number(modes_.a), number(modes_.b1), number(modes_.b2)};
}

QuadratureVariances MonomialEvaluator::quadrature_variances() const {
  auto single = [&](const Polynomial& x) {
    return Variance{value(variance(x_quadrature(x))), value(variance(y_quadrature(x)))};
  };
  const Scalar inv_sqrt2 = 1.0L / std::sqrt(2.0L);
  auto compound = [&](const Polynomial& x, const Polynomial& y) {
    return Variance{value(variance((x_quadrature(x) + x_quadrature(y)) * inv_sqrt2)),
                    value(variance((y_quadrature(x) + y_quadrature(y)) * inv_sqrt2))};
  };
  QuadratureVariances out;
  out.single = {single(modes_.a), single(modes_.b1), single(modes_.b2)};
  out.compound = {compound(modes_.a, modes_.b1), compound(modes_.a, modes_.b2),
                  compound(modes_.b1, modes_.b2)};
  return out;
}

PerMode<AmplitudeSqueezing> MonomialEvaluator::amplitude_powered_squeezing(int n) const {
  require_order(n, 2, "amplitude-powered squeezing needs n >= 2");
  auto compute = [&](const Polynomial& x) {
    const Polynomial xn = x.pow(n);
    const Polynomial xn_dag = xn.adjoint();
    const Polynomial y1 = (xn + xn_dag) * Scalar(0.5L);
    const Polynomial y2 = (xn_dag - xn) * (0.5L * kI);
    const PerturbativeValue bound = expect(algebra::commutator(y1, y2)).modulus() * Scalar(0.5L);
    return AmplitudeSqueezing{excess(variance(y1) - bound), excess(variance(y2) - bound)};
  };
  return {compute(modes_.a), compute(modes_.b1), compute(modes_.b2)};
}

PerMode<double> MonomialEvaluator::antibunching(int n) const {
  require_order(n, 2, "antibunching needs n >= 2");
  auto compute = [&](const Polynomial& x) {
    const Polynomial xn = x.pow(n);
    const PerturbativeValue mean_number = expect(x.adjoint() * x);
    return excess(expect(xn.adjoint() * xn) - mean_number.pow(n));
  };
  return {compute(modes_.a), compute(modes_.b1), compute(modes_.b2)};
}

PerPair<double> MonomialEvaluator::intermodal_antibunching() const {
  auto compute = [&](const Polynomial& x, const Polynomial& y) {
    const Polynomial nx = x.adjoint() * x;
    const Polynomial ny = y.adjoint() * y;
    return excess(expect(x.adjoint() * y.adjoint() * y * x) - expect(nx) * expect(ny));
  };
  return {compute(modes_.a, modes_.b1), compute(modes_.a, modes_.b2), compute(modes_.b1, modes_.b2)};
}

HzPair MonomialEvaluator::hz(OutputMode j, OutputMode l, int m, int n) const {
  require_order(m, 1, "HZ criteria need m >= 1");
  require_order(n, 1, "HZ criteria need n >= 1");
  const Polynomial jm = op(j).pow(m);
  const Polynomial ln = op(l).pow(n);
  const Polynomial jm_dag = jm.adjoint();
  const Polynomial ln_dag = ln.adjoint();
  const Polynomial nj = jm_dag * jm;
  const Polynomial nl = ln_dag * ln;
  HzPair out;
  out.e = excess(expect(nj * nl) - expect(jm * ln_dag).norm());
  out.e_prime = excess(expect(nj) * expect(nl) - expect(jm * ln).norm());
  return out;
}

PerPair<double> MonomialEvaluator::duan() const {
  const Scalar inv_sqrt2 = 1.0L / std::sqrt(2.0L);
  auto compute = [&](const Polynomial& x, const Polynomial& y) {
    const Polynomial u = ((x + x.adjoint()) + (y + y.adjoint())) * inv_sqrt2;
    const Polynomial v = ((x - x.adjoint()) + (y - y.adjoint())) * (-kI * inv_sqrt2);
    return excess(variance(u) + variance(v) - PerturbativeValue(Scalar(2.0L), max_order_));
  };
  return {compute(modes_.a, modes_.b1), compute(modes_.a, modes_.b2), compute(modes_.b1, modes_.b2)};
}

ThreeModeWitnesses MonomialEvaluator::three_mode() const {
  const Polynomial& a = modes_.a;
  const Polynomial& b1 = modes_.b1;
  const Polynomial& b2 = modes_.b2;
  const Polynomial na = a.adjoint() * a;
  const Polynomial nb1 = b1.adjoint() * b1;
  const Polynomial nb2 = b2.adjoint() * b2;
  const PerturbativeValue nnn = expect(na * nb1 * nb2);
  const PerturbativeValue abb = expect(a * b1 * b2).norm();

  ThreeModeWitnesses out;
  out.a_b1b2.e = excess(nnn - expect(a * b1.adjoint() * b2.adjoint()).norm());
  out.a_b1b2.e_prime = excess(expect(na) * expect(nb1 * nb2) - abb);
  out.ab2_b1.e = excess(nnn - expect(a * b2 * b1.adjoint()).norm());
  out.ab2_b1.e_prime = excess(expect(na * nb2) * expect(nb1) - abb);
  out.ab1_b2.e = excess(nnn - expect(a * b1 * b2.adjoint()).norm());
  out.ab1_b2.e_prime = excess(expect(na * nb1) * expect(nb2) - abb);
  out.full_separability = excess(expect(na) * expect(nb1) * expect(nb2) - abb);
  return out;
}

double MonomialEvaluator::commutator_deviation(OutputMode j) const {
  const Polynomial& x = op(j);
  return static_cast<double>(std::abs(expect(algebra::commutator(x, x.adjoint())).total() - 1.0L));
}

double MonomialEvaluator::cross_commutator_magnitude() const {
  const OutputMode all[] = {OutputMode::kA, OutputMode::kB1, OutputMode::kB2};
  long double worst = 0.0L;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = i + 1; k < 3; ++k) {
      const Polynomial& x = op(all[i]);
      const Polynomial& y = op(all[k]);
      worst = std::max(worst, std::abs(expect(algebra::commutator(x, y)).total()));
      worst = std::max(worst, std::abs(expect(algebra::commutator(x, y.adjoint())).total()));
    }
  }
  return static_cast<double>(worst);
}

}  // namespace coupler

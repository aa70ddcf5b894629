#include "coupler/coefficient_ode.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "coupler/operator_algebra.hpp"

namespace coupler {

using algebra::Monomial;
using algebra::Polynomial;
using algebra::Scalar;

namespace {

constexpr int kOrder = 1;

// Basis monomials of the forward ansatz in the z = 0 operators.
const Monomial kA{{0, 0, 0}, {1, 0, 0}, 0};
const Monomial kB1{{0, 0, 0}, {0, 1, 0}, 0};
const Monomial kB2{{0, 0, 0}, {0, 0, 1}, 0};
const Monomial kB1dagB2{{0, 1, 0}, {0, 0, 1}, 1};
const Monomial kAdagB2{{1, 0, 0}, {0, 0, 1}, 1};
const Monomial kB1Sq{{0, 0, 0}, {0, 2, 0}, 1};
const Monomial kB1A{{0, 0, 0}, {1, 1, 0}, 1};
const Monomial kASq{{0, 0, 0}, {2, 0, 0}, 1};

Polynomial linear_mode(const std::array<Complex, 4>& c) {
  Polynomial p(kOrder);
  p.add_term(kA, Scalar(c[0]));
  p.add_term(kB1, Scalar(c[1]));
  p.add_term(kB1dagB2, Scalar(c[2]));
  p.add_term(kAdagB2, Scalar(c[3]));
  return p;
}

Polynomial pump_mode(const std::array<Complex, 3>& h) {
  Polynomial p(kOrder);
  p.add_term(kB2, Scalar{1.0L, 0.0L});
  p.add_term(kB1Sq, Scalar(h[0]));
  p.add_term(kB1A, Scalar(h[1]));
  p.add_term(kASq, Scalar(h[2]));
  return p;
}

// A c-number carrying one power of the nonlinear coupling.
Polynomial first_order_constant(Scalar c) {
  Polynomial p(kOrder);
  p.add_term(Monomial::identity(1), c);
  return p;
}

template <std::size_t N>
std::array<Complex, N> read_off(const Polynomial& p, const std::array<Monomial, N>& basis) {
  std::array<Complex, N> out{};
  for (std::size_t i = 0; i < N; ++i) {
    const Scalar c = p.coefficient(basis[i]);
    out[i] = Complex(static_cast<double>(c.real()), static_cast<double>(c.imag()));
  }
  for (const auto& [mono, c] : p.terms()) {
    if (c != Scalar{} && std::find(basis.begin(), basis.end(), mono) == basis.end()) {
      throw DomainError("truncated coefficient system left the ansatz basis");
    }
  }
  return out;
}

std::array<Complex, ForwardCoefficients::kSize> operator+(std::array<Complex, ForwardCoefficients::kSize> l,
                                                          const std::array<Complex, ForwardCoefficients::kSize>& r) {
  for (std::size_t i = 0; i < l.size(); ++i) l[i] += r[i];
  return l;
}

std::array<Complex, ForwardCoefficients::kSize> operator*(double s, std::array<Complex, ForwardCoefficients::kSize> v) {
  for (auto& x : v) x *= s;
  return v;
}

}  // namespace

std::array<Complex, ForwardCoefficients::kSize> ForwardCoefficients::pack() const {
  return {F[0], F[1], F[2], F[3], G[0], G[1], G[2], G[3], H[0], H[1], H[2]};
}

ForwardCoefficients ForwardCoefficients::unpack(const std::array<Complex, kSize>& v) {
  ForwardCoefficients f;
  f.F = {v[0], v[1], v[2], v[3]};
  f.G = {v[4], v[5], v[6], v[7]};
  f.H = {v[8], v[9], v[10]};
  return f;
}

ForwardCoefficients forward_derivative(const CouplerParams& params, double z, const ForwardCoefficients& state) {
  const Scalar i{0.0L, 1.0L};
  const Scalar k(params.k);
  const Scalar gamma(params.gamma_nl);
  const Scalar phase = std::polar(1.0L, static_cast<long double>(-params.delta_k * z));

  const Polynomial a = linear_mode(state.F);
  const Polynomial b1 = linear_mode(state.G);
  const Polynomial b2 = pump_mode(state.H);

  const Polynomial da = (i * std::conj(k)) * b1;
  const Polynomial db1 = (-i * k) * a + first_order_constant(-2.0L * i * std::conj(gamma) * phase) * b1.adjoint() * b2;
  const Polynomial db2 = first_order_constant(-i * gamma * std::conj(phase)) * b1 * b1;

  const std::array<Monomial, 4> linear_basis{kA, kB1, kB1dagB2, kAdagB2};
  const std::array<Monomial, 3> pump_basis{kB1Sq, kB1A, kASq};
  ForwardCoefficients d;
  d.F = read_off(da, linear_basis);
  d.G = read_off(db1, linear_basis);
  // db2/dz has no b2 term: H1 stays 1.
  d.H = read_off(db2, pump_basis);
  return d;
}

std::vector<ForwardCoefficients> integrate_forward(const CouplerParams& params, const std::vector<double>& grid,
                                                   double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("integration step must be positive and finite");
  CouplerParams checked = params;
  checked.length = 0.0;
  checked.validate();
  for (double l : grid) {
    if (!(l >= 0.0) || !std::isfinite(l)) throw DomainError("integration grid must be finite and nonnegative");
  }

  std::vector<std::size_t> order(grid.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return grid[l] < grid[r]; });

  using State = std::array<Complex, ForwardCoefficients::kSize>;
  auto rhs = [&](double z, const State& y) { return forward_derivative(params, z, ForwardCoefficients::unpack(y)).pack(); };

  std::vector<ForwardCoefficients> out(grid.size());
  State y = ForwardCoefficients{}.pack();
  double z = 0.0;
  for (std::size_t idx : order) {
    const double target = grid[idx];
    const double span = target - z;
    if (span > 0.0) {
      const auto n = static_cast<long long>(std::ceil(span / step - 1e-9));
      const double h = span / static_cast<double>(std::max(1LL, n));
      for (long long s = 0; s < std::max(1LL, n); ++s) {
        const double zs = z + static_cast<double>(s) * h;
        const State k1 = rhs(zs, y);
        const State k2 = rhs(zs + h / 2.0, y + (h / 2.0) * k1);
        const State k3 = rhs(zs + h / 2.0, y + (h / 2.0) * k2);
        const State k4 = rhs(zs + h, y + h * k3);
        y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      }
      z = target;
    }
    for (const Complex& v : y) {
      if (!is_finite(v)) throw DomainError("coefficient ODE produced a non-finite value");
    }
    out[idx] = ForwardCoefficients::unpack(y);
  }
  return out;
}

Coefficients output_coefficients(const ForwardCoefficients& fw) {
  const auto& F = fw.F;
  const auto& G = fw.G;
  const auto& H = fw.H;
  if (std::abs(F[0]) == 0.0) throw DomainError("singular linear block in coefficient inversion");

  // a(L) = F1 a + F2 b1 + ... solved for a = a(0) to first order; the first-
  // order pieces need the zeroth-order a† = (a†(L) - F2* b1†)/F1*.
  Coefficients c;
  c.f1 = 1.0 / F[0];
  c.f2 = -F[1] / F[0];
  c.f3 = (-F[2] + F[3] * std::conj(F[1]) / std::conj(F[0])) / F[0];
  c.f4 = -F[3] / std::norm(F[0]);

  c.g1 = G[0] * c.f1;
  c.g2 = G[1] + G[0] * c.f2;
  c.g3 = G[0] * c.f3 + G[2] - G[3] * std::conj(F[1]) / std::conj(F[0]);
  c.g4 = G[0] * c.f4 + G[3] / std::conj(F[0]);

  c.h1 = 1.0;
  c.h2 = H[0] + H[1] * c.f2 + H[2] * c.f2 * c.f2;
  c.h3 = H[1] * c.f1 + 2.0 * H[2] * c.f1 * c.f2;
  c.h4 = H[2] * c.f1 * c.f1;
  return c;
}

ForwardCoefficients forward_from_output(const Coefficients& c) {
  if (std::abs(c.f1) == 0.0) throw DomainError("singular linear block in coefficient inversion");
  ForwardCoefficients fw;
  auto& F = fw.F;
  auto& G = fw.G;
  auto& H = fw.H;
  F[0] = 1.0 / c.f1;
  F[1] = -c.f2 / c.f1;
  F[3] = -c.f4 * std::norm(F[0]);
  F[2] = F[3] * std::conj(F[1]) / std::conj(F[0]) - c.f3 * F[0];

  G[0] = c.g1 / c.f1;
  G[1] = c.g2 - G[0] * c.f2;
  G[3] = (c.g4 - G[0] * c.f4) * std::conj(F[0]);
  G[2] = c.g3 - G[0] * c.f3 + G[3] * std::conj(F[1]) / std::conj(F[0]);

  H[2] = c.h4 / (c.f1 * c.f1);
  H[1] = (c.h3 - 2.0 * H[2] * c.f1 * c.f2) / c.f1;
  H[0] = c.h2 - H[1] * c.f2 - H[2] * c.f2 * c.f2;
  return fw;
}

std::vector<Coefficients> ode_coefficients(const CouplerParams& params, const std::vector<double>& grid,
                                           double step) {
  const std::vector<ForwardCoefficients> fw = integrate_forward(params, grid, step);
  std::vector<Coefficients> out;
  out.reserve(fw.size());
  for (const auto& f : fw) out.push_back(output_coefficients(f));
  return out;
}

}  // namespace coupler

#include "coupler/operator_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace coupler::algebra {

namespace {

long double binomial(int n, int k) {
  long double r = 1.0L;
  for (int i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
  return r;
}

long double factorial(int n) {
  long double r = 1.0L;
  for (int i = 2; i <= n; ++i) r *= static_cast<long double>(i);
  return r;
}

Scalar ipow(Scalar base, int n) {
  Scalar r{1.0L, 0.0L};
  for (int i = 0; i < n; ++i) r *= base;
  return r;
}

void check_order(int max_order) {
  if (max_order < 0 || max_order > PerturbativeValue::kMaxSupportedOrder) {
    throw DomainError("perturbative order must lie in [0, 2]");
  }
}

}  // namespace

// --- PerturbativeValue -------------------------------------------------------

PerturbativeValue::PerturbativeValue(int max_order) : max_order_(max_order) { check_order(max_order); }

PerturbativeValue::PerturbativeValue(Scalar constant, int max_order) : PerturbativeValue(max_order) {
  by_order_[0] = constant;
}

void PerturbativeValue::add(int order, Scalar value) {
  if (order <= max_order_) by_order_[static_cast<std::size_t>(order)] += value;
}

Scalar PerturbativeValue::total() const {
  Scalar sum{};
  for (int o = 0; o <= max_order_; ++o) sum += by_order_[static_cast<std::size_t>(o)];
  return sum;
}

PerturbativeValue PerturbativeValue::conj() const {
  PerturbativeValue r(max_order_);
  for (int o = 0; o <= max_order_; ++o) r.by_order_[o] = std::conj(by_order_[o]);
  return r;
}

PerturbativeValue PerturbativeValue::norm() const { return (*this) * conj(); }

PerturbativeValue PerturbativeValue::modulus() const {
  const PerturbativeValue sq = norm();
  const long double a0 = sq.at(0).real();
  PerturbativeValue r(max_order_);
  if (a0 <= 0.0L) {
    r.by_order_[0] = std::abs(total());
    return r;
  }
  // sqrt(a0 + a1 + a2) = sqrt(a0) (1 + u/2 - u^2/8), u = (a1 + a2)/a0
  const long double root = std::sqrt(a0);
  const Scalar u1 = sq.at(1) / a0;
  const Scalar u2 = sq.at(2) / a0;
  r.by_order_[0] = root;
  if (max_order_ >= 1) r.by_order_[1] = root * u1 / 2.0L;
  if (max_order_ >= 2) r.by_order_[2] = root * (u2 / 2.0L - u1 * u1 / 8.0L);
  return r;
}

PerturbativeValue PerturbativeValue::pow(int n) const {
  PerturbativeValue r(Scalar{1.0L, 0.0L}, max_order_);
  for (int i = 0; i < n; ++i) r = r * (*this);
  return r;
}

PerturbativeValue& PerturbativeValue::operator+=(const PerturbativeValue& rhs) {
  for (int o = 0; o <= max_order_; ++o) by_order_[o] += rhs.by_order_[o];
  return *this;
}

PerturbativeValue& PerturbativeValue::operator-=(const PerturbativeValue& rhs) {
  for (int o = 0; o <= max_order_; ++o) by_order_[o] -= rhs.by_order_[o];
  return *this;
}

PerturbativeValue& PerturbativeValue::operator*=(Scalar s) {
  for (auto& v : by_order_) v *= s;
  return *this;
}

PerturbativeValue operator*(const PerturbativeValue& l, const PerturbativeValue& r) {
  const int max_order = std::min(l.max_order_, r.max_order_);
  PerturbativeValue out(max_order);
  for (int i = 0; i <= max_order; ++i) {
    for (int j = 0; i + j <= max_order; ++j) out.by_order_[i + j] += l.by_order_[i] * r.by_order_[j];
  }
  return out;
}

// --- Polynomial --------------------------------------------------------------

Polynomial Polynomial::constant(Scalar c, int max_order) {
  Polynomial p(max_order);
  p.add_term(Monomial::identity(), c);
  return p;
}

Polynomial Polynomial::annihilator(Mode m, int max_order) {
  Monomial mono;
  mono.annihilate[static_cast<std::size_t>(m)] = 1;
  Polynomial p(max_order);
  p.add_term(mono, Scalar{1.0L, 0.0L});
  return p;
}

Polynomial Polynomial::creator(Mode m, int max_order) { return annihilator(m, max_order).adjoint(); }

void Polynomial::add_term(const Monomial& monomial, Scalar c) {
  if (monomial.order > max_order_) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), monomial,
                             [](const Term& t, const Monomial& m) { return t.first < m; });
  if (it != terms_.end() && it->first == monomial) {
    it->second += c;
    if (it->second == Scalar{}) terms_.erase(it);
  } else if (c != Scalar{}) {
    terms_.insert(it, {monomial, c});
  }
}

Scalar Polynomial::coefficient(const Monomial& monomial) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), monomial,
                             [](const Term& t, const Monomial& m) { return t.first < m; });
  return (it != terms_.end() && it->first == monomial) ? it->second : Scalar{};
}

Polynomial Polynomial::adjoint() const {
  Polynomial p(max_order_);
  for (const auto& [mono, c] : terms_) p.add_term(mono.adjoint(), std::conj(c));
  return p;
}

Polynomial Polynomial::pow(int n) const {
  Polynomial r = constant(Scalar{1.0L, 0.0L}, max_order_);
  for (int i = 0; i < n; ++i) r = r * (*this);
  return r;
}

PerturbativeValue Polynomial::expectation(const CoherentInput& input) const {
  const std::array<Scalar, kModeCount> amp = {Scalar(input.alpha), Scalar(input.beta),
                                              Scalar(input.gamma)};
  PerturbativeValue v(max_order_);
  for (const auto& [mono, c] : terms_) {
    Scalar term = c;
    for (std::size_t m = 0; m < kModeCount; ++m) {
      term *= ipow(std::conj(amp[m]), mono.create[m]) * ipow(amp[m], mono.annihilate[m]);
    }
    v.add(mono.order, term);
  }
  return v;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(Scalar s) {
  for (auto& term : terms_) term.second *= s;
  return *this;
}

Polynomial operator*(const Polynomial& l, const Polynomial& r) {
  const int max_order = std::min(l.max_order_, r.max_order_);
  std::map<Monomial, Scalar> acc;

  struct Partial {
    Monomial mono;
    long double weight;
  };
  std::vector<Partial> partial;
  std::vector<Partial> next;

  for (const auto& [lm, lc] : l.terms_) {
    for (const auto& [rm, rc] : r.terms_) {
      const int order = lm.order + rm.order;
      if (order > max_order) continue;
      partial.assign(1, Partial{Monomial::identity(order), 1.0L});
      for (std::size_t m = 0; m < kModeCount; ++m) {
        const int p = lm.create[m], q = lm.annihilate[m];
        const int rr = rm.create[m], s = rm.annihilate[m];
        next.clear();
        for (int j = 0; j <= std::min(q, rr); ++j) {
          const long double w = binomial(q, j) * binomial(rr, j) * factorial(j);
          for (const Partial& base : partial) {
            Partial out = base;
            out.mono.create[m] = static_cast<std::uint8_t>(p + rr - j);
            out.mono.annihilate[m] = static_cast<std::uint8_t>(q + s - j);
            out.weight *= w;
            next.push_back(out);
          }
        }
        partial.swap(next);
      }
      const Scalar c = lc * rc;
      for (const Partial& item : partial) acc[item.mono] += c * item.weight;
    }
  }

  Polynomial out(max_order);
  out.terms_.reserve(acc.size());
  for (const auto& [mono, c] : acc) {
    if (c != Scalar{}) out.terms_.emplace_back(mono, c);
  }
  return out;
}

Polynomial commutator(const Polynomial& x, const Polynomial& y) { return x * y - y * x; }

}  // namespace coupler::algebra

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "coupler/types.hpp"

namespace coupler::algebra {

/// Extended precision keeps zeroth-order cancellations in high moments
/// (terms of size |alpha|^{2m+2n}) far below the first-order signal.
using Scalar = std::complex<long double>;

/// Input-mode labels. For output-plane expansions these are a(L), b1(0),
/// b2(0); for the forward ansatz they are a(0), b1(0), b2(0).
enum class Mode : std::uint8_t { kA = 0, kB1 = 1, kB2 = 2 };
inline constexpr std::size_t kModeCount = 3;

/// Normal-ordered product prod_m (x_m†)^create[m] (x_m)^annihilate[m] tagged
/// with its perturbative order in the nonlinear coupling.
struct Monomial {
  std::array<std::uint8_t, kModeCount> create{};
  std::array<std::uint8_t, kModeCount> annihilate{};
  int order = 0;

  auto operator<=>(const Monomial&) const = default;

  [[nodiscard]] static Monomial identity(int order = 0) { return Monomial{{}, {}, order}; }
  [[nodiscard]] Monomial adjoint() const { return Monomial{annihilate, create, order}; }
};

/// A value split by perturbative order. Products drop contributions above
/// max_order, so the retained orders are exact for a first- (or second-)
/// order theory.
class PerturbativeValue {
 public:
  static constexpr int kMaxSupportedOrder = 2;

  explicit PerturbativeValue(int max_order = 1);
  PerturbativeValue(Scalar constant, int max_order);

  [[nodiscard]] int max_order() const { return max_order_; }
  [[nodiscard]] Scalar at(int order) const { return by_order_[static_cast<std::size_t>(order)]; }
  void add(int order, Scalar value);

  [[nodiscard]] Scalar total() const;
  [[nodiscard]] long double real_total() const { return total().real(); }

  [[nodiscard]] PerturbativeValue conj() const;
  /// |z|^2 expanded to max_order.
  [[nodiscard]] PerturbativeValue norm() const;
  /// |z| expanded about the zeroth-order modulus (which must be nonzero).
  [[nodiscard]] PerturbativeValue modulus() const;
  [[nodiscard]] PerturbativeValue pow(int n) const;

  PerturbativeValue& operator+=(const PerturbativeValue& rhs);
  PerturbativeValue& operator-=(const PerturbativeValue& rhs);
  PerturbativeValue& operator*=(Scalar s);

  friend PerturbativeValue operator+(PerturbativeValue l, const PerturbativeValue& r) { return l += r; }
  friend PerturbativeValue operator-(PerturbativeValue l, const PerturbativeValue& r) { return l -= r; }
  friend PerturbativeValue operator*(const PerturbativeValue& l, const PerturbativeValue& r);
  friend PerturbativeValue operator*(PerturbativeValue l, Scalar s) { return l *= s; }
  friend PerturbativeValue operator*(Scalar s, PerturbativeValue r) { return r *= s; }

 private:
  int max_order_;
  std::array<Scalar, kMaxSupportedOrder + 1> by_order_{};
};

/// Polynomial in the ladder operators of three bosonic modes, stored in
/// normal order. Multiplication re-normal-orders with
///   (x†^p x^q)(x†^r x^s) = sum_j C(q,j) C(r,j) j! x†^{p+r-j} x^{q+s-j}
/// per mode and discards terms above max_order.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Scalar>;

  explicit Polynomial(int max_order = 1) : max_order_(max_order) {}

  [[nodiscard]] static Polynomial constant(Scalar c, int max_order);
  [[nodiscard]] static Polynomial annihilator(Mode m, int max_order);
  [[nodiscard]] static Polynomial creator(Mode m, int max_order);

  /// Adds c * monomial; ignored when the monomial's order exceeds max_order.
  /// Terms whose coefficient becomes exactly zero are removed.
  void add_term(const Monomial& monomial, Scalar c);

  [[nodiscard]] int max_order() const { return max_order_; }
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] Scalar coefficient(const Monomial& monomial) const;

  [[nodiscard]] Polynomial adjoint() const;
  [[nodiscard]] Polynomial pow(int n) const;

  /// Coherent-state expectation: substitute x -> amplitude, x† -> conj.
  [[nodiscard]] PerturbativeValue expectation(const CoherentInput& input) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(Scalar s);

  friend Polynomial operator+(Polynomial l, const Polynomial& r) { return l += r; }
  friend Polynomial operator-(Polynomial l, const Polynomial& r) { return l -= r; }
  friend Polynomial operator*(const Polynomial& l, const Polynomial& r);
  friend Polynomial operator*(Polynomial l, Scalar s) { return l *= s; }
  friend Polynomial operator*(Scalar s, Polynomial r) { return r *= s; }

 private:
  int max_order_;
  std::vector<Term> terms_;  // sorted by monomial, unique keys
};

/// [x, y] = xy - yx.
[[nodiscard]] Polynomial commutator(const Polynomial& x, const Polynomial& y);

}  // namespace coupler::algebra

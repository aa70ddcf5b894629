#include "coupler/mode_expansion.hpp"

namespace coupler {

using algebra::Monomial;
using algebra::Polynomial;
using algebra::Scalar;

namespace {

// a(L), b1(0), b2(0), b1†(0) b2(0), a†(L) b2(0) and the quadratic products.
Monomial make(std::array<std::uint8_t, 3> create, std::array<std::uint8_t, 3> annihilate, int order) {
  return Monomial{create, annihilate, order};
}

}  // namespace

OutputModes output_modes(const Coefficients& c, int max_order) {
  const Monomial a_in = make({0, 0, 0}, {1, 0, 0}, 0);
  const Monomial b1_in = make({0, 0, 0}, {0, 1, 0}, 0);
  const Monomial b2_in = make({0, 0, 0}, {0, 0, 1}, 0);
  const Monomial b1dag_b2 = make({0, 1, 0}, {0, 0, 1}, 1);
  const Monomial adag_b2 = make({1, 0, 0}, {0, 0, 1}, 1);
  const Monomial b1_sq = make({0, 0, 0}, {0, 2, 0}, 1);
  const Monomial b1_a = make({0, 0, 0}, {1, 1, 0}, 1);
  const Monomial a_sq = make({0, 0, 0}, {2, 0, 0}, 1);

  OutputModes out{Polynomial(max_order), Polynomial(max_order), Polynomial(max_order)};
  out.a.add_term(a_in, Scalar(c.f1));
  out.a.add_term(b1_in, Scalar(c.f2));
  out.a.add_term(b1dag_b2, Scalar(c.f3));
  out.a.add_term(adag_b2, Scalar(c.f4));

  out.b1.add_term(a_in, Scalar(c.g1));
  out.b1.add_term(b1_in, Scalar(c.g2));
  out.b1.add_term(b1dag_b2, Scalar(c.g3));
  out.b1.add_term(adag_b2, Scalar(c.g4));

  out.b2.add_term(b2_in, Scalar(c.h1));
  out.b2.add_term(b1_sq, Scalar(c.h2));
  out.b2.add_term(b1_a, Scalar(c.h3));
  out.b2.add_term(a_sq, Scalar(c.h4));
  return out;
}

}  // namespace coupler

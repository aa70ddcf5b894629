#pragma once

#include "coupler/coefficients.hpp"
#include "coupler/operator_algebra.hpp"

namespace coupler {

/// Output-plane operators a(0), b1(L), b2(L) as polynomials in the input
/// operators a(L), b1(0), b2(0).
struct OutputModes {
  algebra::Polynomial a;
  algebra::Polynomial b1;
  algebra::Polynomial b2;
};

/// Builds the output operators from the coefficient set. max_order = 1 gives
/// the strict first-order theory; max_order = 2 keeps products of two
/// first-order terms when operators are multiplied.
[[nodiscard]] OutputModes output_modes(const Coefficients& c, int max_order = 1);

}  // namespace coupler

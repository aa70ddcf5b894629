#include "coupler/types.hpp"

#include <cmath>

namespace coupler {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void CouplerParams::validate() const {
  if (!is_finite(k) || !is_finite(gamma_nl) || !std::isfinite(delta_k) ||
      !std::isfinite(length)) {
    throw DomainError("coupler parameters must be finite");
  }
  if (std::abs(k) == 0.0) throw DomainError("linear coupling |k| must be nonzero");
  if (delta_k < 0.0) throw DomainError("phase mismatch delta_k must be >= 0");
  if (length < 0.0) throw DomainError("interaction length must be >= 0");
}

void CoherentInput::validate() const {
  if (!is_finite(alpha) || !is_finite(beta) || !is_finite(gamma)) {
    throw DomainError("coherent amplitudes must be finite");
  }
}

}  // namespace coupler

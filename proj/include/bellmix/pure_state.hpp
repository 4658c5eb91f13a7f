#pragma once

#include "bellmix/hermitian2.hpp"
#include "bellmix/linalg.hpp"

namespace bellmix::pure_state {

// Binary entropy h(x) in bits; endpoints return exactly 0. Throws outside
// [0,1] beyond 1e-12 (inputs within that slack are clamped).
double binary_entropy(double x);

// Natural-log variant h_e(x) = ln(2) h(x).
double binary_entropy_e(double x);

// Bell-basis coefficients (z0, z) of a pure two-qubit state
// |psi> = (z0 + i z.sigma_b)|=+>. Construction normalizes and records the
// applied scale; a zero-norm input is rejected.
class BellCoeffs {
 public:
  BellCoeffs(Complex z0, const Vec3c& z);

  Complex z0() const { return z0_; }
  const Vec3c& z() const { return z_; }
  double applied_scale() const { return scale_; }

  // Coefficient 4-vector (z0, z1, z2, z3): these are exactly the Bell-basis
  // amplitudes of |psi>.
  Vec4c bell_vector() const;
  // |psi> in the standard |ab> basis.
  Vec4c standard_vector() const;

 private:
  Complex z0_;
  Vec3c z_;
  double scale_;
};

// tr_a |psi><psi| = n0 + n.sigma_b with n0 = 1/2.
hermitian2::PauliDecomp2 reduced_density(const BellCoeffs& c);

// C = |z0^2 + z.z|, clamped to [0,1].
double concurrence(const BellCoeffs& c);

// E = h((1 + sqrt(1 - C^2))/2).
double entanglement(const BellCoeffs& c);

// E = h(n0 + |n|) through the reduced density; agrees with entanglement().
double entanglement_via_reduced(const BellCoeffs& c);

}  // namespace bellmix::pure_state

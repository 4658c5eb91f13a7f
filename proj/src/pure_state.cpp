#include "bellmix/pure_state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bellmix/bell_algebra.hpp"

namespace bellmix::pure_state {

double binary_entropy_e(double x) {
  if (x < -1e-12 || x > 1.0 + 1e-12) {
    throw std::domain_error("binary_entropy: argument outside [0,1]: " + std::to_string(x));
  }
  x = std::clamp(x, 0.0, 1.0);
  return -xlnx(x) - xlnx(1.0 - x);
}

double binary_entropy(double x) { return binary_entropy_e(x) / std::numbers::ln2; }

BellCoeffs::BellCoeffs(Complex z0, const Vec3c& z) : z0_(z0), z_(z) {
  const double norm = std::sqrt(std::norm(z0_) + z_.squaredNorm());
  if (norm == 0.0) throw std::invalid_argument("BellCoeffs: zero-norm coefficients");
  z0_ /= norm;
  z_ /= norm;
  scale_ = 1.0 / norm;
}

Vec4c BellCoeffs::bell_vector() const {
  Vec4c v;
  v << z0_, z_[0], z_[1], z_[2];
  return v;
}

Vec4c BellCoeffs::standard_vector() const {
  return bell_algebra::bell_basis_matrix() * bell_vector();
}

hermitian2::PauliDecomp2 reduced_density(const BellCoeffs& c) {
  const Complex z0 = c.z0();
  const Vec3c& z = c.z();
  const Vec3c zc = z.conjugate();
  const Vec3c n_complex =
      Complex{0.0, 0.5} * (std::conj(z0) * z - z0 * zc + Vec3c(z.cross(zc)));
  hermitian2::PauliDecomp2 d;
  d.n0 = 0.5;
  d.n = n_complex.real();
  return d;
}

double concurrence(const BellCoeffs& c) {
  const Complex z0 = c.z0();
  const Vec3c& z = c.z();
  const Complex zz = z[0] * z[0] + z[1] * z[1] + z[2] * z[2];
  return std::clamp(std::abs(z0 * z0 + zz), 0.0, 1.0);
}

double entanglement(const BellCoeffs& c) {
  const double cc = concurrence(c);
  return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - cc * cc))));
}

double entanglement_via_reduced(const BellCoeffs& c) {
  const auto d = reduced_density(c);
  return binary_entropy(std::min(1.0, d.n0 + d.n.norm()));
}

}  // namespace bellmix::pure_state

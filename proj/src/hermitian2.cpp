#include "bellmix/hermitian2.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bellmix/bell_algebra.hpp"
#include "bellmix/tolerances.hpp"

namespace bellmix::hermitian2 {

using bell_algebra::pauli_matrix;

Mat2 PauliDecomp2::reconstruct() const {
  Mat2 h = n0 * Mat2::Identity();
  for (int k = 0; k < 3; ++k) h += n[k] * pauli_matrix(k + 1);
  return h;
}

PauliDecomp2 decompose(const Mat2& h) {
  const double herm_residual = max_abs(h - h.adjoint());
  if (herm_residual > tol::kHermitian) {
    throw std::invalid_argument("decompose: matrix not Hermitian, residual " +
                                std::to_string(herm_residual));
  }
  PauliDecomp2 d;
  d.n0 = 0.5 * h.trace().real();
  for (int k = 0; k < 3; ++k) d.n[k] = 0.5 * (h * pauli_matrix(k + 1)).trace().real();
  return d;
}

Eigensystem2 eigensystem(const PauliDecomp2& d) {
  Eigensystem2 e;
  const double r = d.n.norm();
  if (r == 0.0) {
    e.lambda_plus = e.lambda_minus = d.n0;
    e.p_plus = Mat2::Identity();
    e.p_minus = Mat2::Zero();
    return e;
  }
  e.lambda_plus = d.n0 + r;
  e.lambda_minus = d.n0 - r;
  Mat2 nhat_sigma = Mat2::Zero();
  for (int k = 0; k < 3; ++k) nhat_sigma += (d.n[k] / r) * pauli_matrix(k + 1);
  e.p_plus = 0.5 * (Mat2::Identity() + nhat_sigma);
  e.p_minus = 0.5 * (Mat2::Identity() - nhat_sigma);
  return e;
}

Mat2 log_psd(const PauliDecomp2& d) {
  const Eigensystem2 e = eigensystem(d);
  if (e.lambda_minus < -tol::kSupportEig) {
    throw std::domain_error("log_psd: negative eigenvalue " + std::to_string(e.lambda_minus));
  }
  Mat2 out = Mat2::Zero();
  if (e.lambda_plus > tol::kSupportEig) out += std::log(e.lambda_plus) * e.p_plus;
  if (e.lambda_minus > tol::kSupportEig) out += std::log(e.lambda_minus) * e.p_minus;
  return out;
}

SpinPair rotated_spin_states(const Vec3& n) {
  const double r = n.norm();
  if (r == 0.0) throw std::invalid_argument("rotated_spin_states: zero vector");
  SpinPair s;
  const Vec3 zhat(0.0, 0.0, 1.0);
  const Vec3 cross = zhat.cross(n);
  const double cross_norm = cross.norm();
  if (cross_norm == 0.0) {
    // n parallel to +-z.
    if (n[2] > 0.0) {
      s.up << 1.0, 0.0;
      s.down << 0.0, 1.0;
    } else {
      s.up << 0.0, 1.0;
      s.down << 1.0, 0.0;
    }
    return s;
  }
  const double theta = std::acos(n[2] / r);
  const Vec3 axis = cross / cross_norm;
  // exp(-i sigma.theta_vec / 2) = cos(theta/2) I - i sin(theta/2) axis.sigma
  Mat2 axis_sigma = Mat2::Zero();
  for (int k = 0; k < 3; ++k) axis_sigma += axis[k] * pauli_matrix(k + 1);
  const Mat2 u = std::cos(theta / 2.0) * Mat2::Identity() -
                 Complex{0.0, 1.0} * std::sin(theta / 2.0) * axis_sigma;
  s.up = u * Vec2c(1.0, 0.0);
  s.down = u * Vec2c(0.0, 1.0);
  return s;
}

}  // namespace bellmix::hermitian2

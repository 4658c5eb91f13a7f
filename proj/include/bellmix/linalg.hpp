#pragma once

#include <complex>

#include <Eigen/Dense>

namespace bellmix {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec2c = Eigen::Vector2cd;
using Vec3 = Eigen::Vector3d;
using Vec3c = Eigen::Vector3cd;
using Vec4c = Eigen::Vector4cd;

// Kronecker product of two single-qubit operators, |ab> ordering (index = 2a + b,
// a = left/first subsystem).
inline Mat4 kron2(const Mat2& a, const Mat2& b) {
  Mat4 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return r;
}

inline double max_abs(const Eigen::Ref<const Eigen::MatrixXcd>& m) {
  return m.cwiseAbs().maxCoeff();
}

// x*ln(x) with the entropy convention 0*ln(0) = 0.
inline double xlnx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// c*ln(x) where a vanishing coefficient silences a divergent log.
inline double clog(double c, double x) { return c == 0.0 ? 0.0 : c * std::log(x); }

}  // namespace bellmix

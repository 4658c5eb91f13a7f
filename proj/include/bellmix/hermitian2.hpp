#pragma once

#include "bellmix/linalg.hpp"

namespace bellmix::hermitian2 {

// Pauli decomposition of a 2x2 Hermitian matrix: H = n0*I + n.sigma.
struct PauliDecomp2 {
  double n0 = 0.0;
  Vec3 n = Vec3::Zero();
  Mat2 reconstruct() const;
};

// Throws std::invalid_argument (with the residual) if H is not Hermitian
// within tol::kHermitian.
PauliDecomp2 decompose(const Mat2& h);

struct Eigensystem2 {
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  Mat2 p_plus = Mat2::Zero();   // projector (1 + n_hat.sigma)/2
  Mat2 p_minus = Mat2::Zero();  // projector (1 - n_hat.sigma)/2
};

// |n| = 0 degenerates to p_plus = I, p_minus = 0 with equal eigenvalues.
Eigensystem2 eigensystem(const PauliDecomp2& d);

// Support-restricted matrix log of a PSD 2x2. Eigenvalues below
// tol::kSupportEig are skipped; eigenvalues below -tol::kSupportEig throw
// std::domain_error.
Mat2 log_psd(const PauliDecomp2& d);

struct SpinPair {
  Vec2c up;    // |0_n>
  Vec2c down;  // |1_n>
};

// Spin states along n obtained by rotating the computational basis
// (global phase unconstrained; compare at the projector level). Throws on a
// zero vector; n parallel to z returns the computational basis, swapped when
// n points along -z.
SpinPair rotated_spin_states(const Vec3& n);

}  // namespace bellmix::hermitian2

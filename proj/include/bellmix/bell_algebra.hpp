#pragma once

#include "bellmix/linalg.hpp"

namespace bellmix::bell_algebra {

// Gaussian integer: the exact value domain of the Pauli structure constants
// (only 0, ±1, ±i occur).
struct GaussInt {
  int re = 0;
  int im = 0;
  Complex value() const { return {static_cast<double>(re), static_cast<double>(im)}; }
  GaussInt conj() const { return {re, -im}; }
  friend GaussInt operator*(GaussInt a, GaussInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussInt&, const GaussInt&) = default;
};

struct PauliProduct {
  GaussInt phase;  // f_{mu,nu}
  int index;       // mu (+) nu
};

// Group table of the index addition mu (+) nu on Z_{0,3}.
int group_add(int mu, int nu);

// Structure constant f_{mu,nu}, exact.
GaussInt structure_phase(int mu, int nu);

// sigma^mu sigma^nu = phase * sigma^index, exact.
PauliProduct pauli_product(int mu, int nu);

// Dense 2x2 Pauli matrix sigma^mu (mu = 0 is the identity).
const Mat2& pauli_matrix(int mu);

// Bell state |B(mu)> as a standard-basis column (|ab> ordering, index = 2a + b).
const Vec4c& bell_state(int mu);

// Unitary whose columns are the four Bell states; the Standard <-> Bell
// change-of-basis matrix.
const Mat4& bell_basis_matrix();

// Sign s with sigma_a^mu |B(nu)> = s * sigma_b^mu |B(nu)>.
int sigma_a_action_sign(int mu, int nu);

// <B(mu1)| sigma_b^beta |B(mu2)>, from the closed form.
Complex bell_matrix_element(int mu1, int beta, int mu2);

// Bell-basis matrices of sigma_b^beta, sigma_a^beta and sigma_a^mu sigma_b^nu,
// assembled from the closed-form matrix elements.
Mat4 sigma_b_bell(int beta);
Mat4 sigma_a_bell(int beta);
Mat4 sigma_ab_bell(int mu, int nu);

enum class OperatorBasis { Pauli, Standard, Bell };

// A 4x4 operator on the two-qubit space tagged with the L(H_AB)-basis its
// entries refer to. In the Pauli basis the entries are the coefficients
// x_{mu,nu} of sigma_a^mu sigma_b^nu; in the other two they are plain matrix
// elements.
struct BellOperator {
  Mat4 entries = Mat4::Zero();
  OperatorBasis basis = OperatorBasis::Standard;
};

BellOperator basis_convert(const BellOperator& op, OperatorBasis target);

enum class Subsystem { A, B };

// Partial trace of a Bell-basis operator via the closed form. Rejects
// operators not tagged Bell.
Mat2 partial_trace_bell(const BellOperator& x, Subsystem traced_out);

}  // namespace bellmix::bell_algebra

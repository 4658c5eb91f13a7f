#pragma once

#include <array>

#include "bellmix/linalg.hpp"
#include "bellmix/werner_core.hpp"

// Brute-force numerical reference implementations. These share only type
// definitions and primitive complex arithmetic with the closed-form modules;
// every numerical path (eigensolver, partial traces, matrix logs, Bell
// vectors) is implemented locally so the cross-checks are two genuinely
// independent routes.
namespace bellmix::oracle {

struct EigResult {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXcd eigenvectors; // columns, H = V diag(w) V^dagger
  int sweeps = 0;
};

// Cyclic complex Jacobi rotations; converges when the off-diagonal Frobenius
// norm drops below 1e-14 * ||H||_F (at most 100 sweeps).
EigResult eig_hermitian(const Eigen::MatrixXcd& h);

// Index-summation partial trace of a standard-basis 4x4.
Mat2 partial_trace_dense(const Mat4& x_std, bell_algebra::Subsystem traced_out);

// Support-restricted spectral log via eig_hermitian. Eigenvalues below
// -1e-10 * scale throw; eigenvalues below support_tol are skipped.
Eigen::MatrixXcd matrix_log_psd(const Eigen::MatrixXcd& h, double support_tol = 1e-12);

// L = sum_alpha tr(K lnK) - tr(K lnR) from dense matrices only.
double lagrangian_dense(const werner_core::WernerSpec& spec,
                        const werner_core::AnsatzParams& p);

struct BruteResult {
  double q = 0.0;
  double eps = 0.0;
  double lagrangian = 0.0;
  long evaluations = 0;
};

// Grid + local refinement + coordinate golden-section descent over the valid
// (q, eps) region, evaluating the dense Lagrangian. d_v = 1 reduces to a
// one-dimensional scan in q.
BruteResult brute_minimize(const werner_core::WernerSpec& spec, int coarse = 256,
                           int refine_rounds = 3);

// Bennett reference: C = max(0, 2 m_max - 1), E = h((1 + sqrt(1-C^2))/2).
// Weights must be sorted descending and sum to 1.
double bell_mixture_eof(const std::array<double, 4>& weights_sorted_desc);

}  // namespace bellmix::oracle

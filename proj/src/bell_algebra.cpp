#include "bellmix/bell_algebra.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "bellmix/tolerances.hpp"

namespace bellmix::bell_algebra {

namespace {

void require_index(int mu, const char* what) {
  if (mu < 0 || mu > 3) {
    throw std::invalid_argument(std::string(what) + " index out of Z_{0,3}: " +
                                std::to_string(mu));
  }
}

// Ground-truth tables. The closed-form expression for f is exercised against
// these in the tests.
constexpr int kGroup[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};

constexpr GaussInt kF[4][4] = {
    {{1, 0}, {1, 0}, {1, 0}, {1, 0}},
    {{1, 0}, {1, 0}, {0, 1}, {0, -1}},
    {{1, 0}, {0, -1}, {1, 0}, {0, 1}},
    {{1, 0}, {0, 1}, {0, -1}, {1, 0}},
};

const Complex kI{0.0, 1.0};

}  // namespace

int group_add(int mu, int nu) {
  require_index(mu, "mu");
  require_index(nu, "nu");
  return kGroup[mu][nu];
}

GaussInt structure_phase(int mu, int nu) {
  require_index(mu, "mu");
  require_index(nu, "nu");
  return kF[mu][nu];
}

PauliProduct pauli_product(int mu, int nu) {
  return {structure_phase(mu, nu), group_add(mu, nu)};
}

const Mat2& pauli_matrix(int mu) {
  require_index(mu, "mu");
  static const std::array<Mat2, 4> sigmas = [] {
    std::array<Mat2, 4> s;
    s[0] << 1, 0, 0, 1;
    s[1] << 0, 1, 1, 0;
    s[2] << 0, -kI, kI, 0;
    s[3] << 1, 0, 0, -1;
    return s;
  }();
  return sigmas[mu];
}

const Vec4c& bell_state(int mu) {
  require_index(mu, "mu");
  static const std::array<Vec4c, 4> states = [] {
    const double r = 1.0 / std::sqrt(2.0);
    std::array<Vec4c, 4> b;
    b[0] << r, 0, 0, r;            // |=+>
    b[1] << 0, kI * r, kI * r, 0;  // i|!=+>
    b[2] << 0, -r, r, 0;           // -|!=->
    b[3] << kI * r, 0, 0, -kI * r; // i|=->
    return b;
  }();
  return states[mu];
}

const Mat4& bell_basis_matrix() {
  static const Mat4 b = [] {
    Mat4 m;
    for (int mu = 0; mu < 4; ++mu) m.col(mu) = bell_state(mu);
    return m;
  }();
  return b;
}

int sigma_a_action_sign(int mu, int nu) {
  require_index(mu, "mu");
  require_index(nu, "nu");
  int sign = (mu == 2) ? -1 : 1;
  if (mu != 0 && nu != 0 && nu != mu) sign = -sign;
  return sign;
}

Complex bell_matrix_element(int mu1, int beta, int mu2) {
  require_index(mu1, "mu1");
  require_index(beta, "beta");
  require_index(mu2, "mu2");
  if (group_add(group_add(beta, mu1), mu2) != 0) return {0.0, 0.0};
  GaussInt g = structure_phase(beta, mu2);
  if (mu1 != 0) g = g * GaussInt{0, -1};
  if (mu2 != 0) g = g * GaussInt{0, 1};
  return g.value();
}

Mat4 sigma_b_bell(int beta) {
  Mat4 m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = bell_matrix_element(r, beta, c);
  return m;
}

Mat4 sigma_a_bell(int beta) {
  Mat4 m;
  for (int c = 0; c < 4; ++c) {
    const double s = sigma_a_action_sign(beta, c);
    for (int r = 0; r < 4; ++r) m(r, c) = s * bell_matrix_element(r, beta, c);
  }
  return m;
}

Mat4 sigma_ab_bell(int mu, int nu) {
  // sigma_a^mu sigma_b^nu |B(m2)> = s(mu,m2) f_{nu,mu} sigma_b^{nu+mu} |B(m2)>
  Mat4 m;
  const PauliProduct p = pauli_product(nu, mu);
  for (int c = 0; c < 4; ++c) {
    const Complex factor = double(sigma_a_action_sign(mu, c)) * p.phase.value();
    for (int r = 0; r < 4; ++r) m(r, c) = factor * bell_matrix_element(r, p.index, c);
  }
  return m;
}

namespace {

Mat4 to_standard(const BellOperator& op) {
  switch (op.basis) {
    case OperatorBasis::Standard:
      return op.entries;
    case OperatorBasis::Bell: {
      const Mat4& b = bell_basis_matrix();
      return b * op.entries * b.adjoint();
    }
    case OperatorBasis::Pauli: {
      Mat4 x = Mat4::Zero();
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
          if (op.entries(mu, nu) == Complex{0.0, 0.0}) continue;
          x += op.entries(mu, nu) * kron2(pauli_matrix(mu), pauli_matrix(nu));
        }
      return x;
    }
  }
  throw std::logic_error("unreachable basis tag");
}

Mat4 from_standard(const Mat4& x, OperatorBasis target) {
  switch (target) {
    case OperatorBasis::Standard:
      return x;
    case OperatorBasis::Bell: {
      const Mat4& b = bell_basis_matrix();
      return b.adjoint() * x * b;
    }
    case OperatorBasis::Pauli: {
      Mat4 coeff;
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
          coeff(mu, nu) = (kron2(pauli_matrix(mu), pauli_matrix(nu)) * x).trace() / 4.0;
      return coeff;
    }
  }
  throw std::logic_error("unreachable basis tag");
}

}  // namespace

BellOperator basis_convert(const BellOperator& op, OperatorBasis target) {
  if (op.basis == target) return op;
  return {from_standard(to_standard(op), target), target};
}

Mat2 partial_trace_bell(const BellOperator& x, Subsystem traced_out) {
  if (x.basis != OperatorBasis::Bell) {
    throw std::invalid_argument("partial_trace_bell requires a Bell-basis operator");
  }
  // tr_a X = (1/2){ x_mumu + [x_k0 - x_0k + x_pq eps_pqk] i sigma^k },
  // tr_b uses y_{mu,nu} = x_{mu,nu} (-1)^{delta^2_mu} (-1)^{delta^2_nu}.
  Mat4 y = x.entries;
  if (traced_out == Subsystem::B) {
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        int s = ((mu == 2) ? -1 : 1) * ((nu == 2) ? -1 : 1);
        y(mu, nu) *= s;
      }
  }
  Complex diag = y(0, 0) + y(1, 1) + y(2, 2) + y(3, 3);
  Mat2 out = 0.5 * diag * Mat2::Identity();
  constexpr int eps[3][3][3] = {{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
                                {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
                                {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}};
  for (int k = 1; k <= 3; ++k) {
    Complex c = y(k, 0) - y(0, k);
    for (int p = 1; p <= 3; ++p)
      for (int q = 1; q <= 3; ++q) {
        const int e = eps[p - 1][q - 1][k - 1];
        if (e != 0) c += double(e) * y(p, q);
      }
    out += 0.5 * c * kI * pauli_matrix(k);
  }
  return out;
}

}  // namespace bellmix::bell_algebra

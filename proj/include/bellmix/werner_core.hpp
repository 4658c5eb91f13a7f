#pragma once

#include <array>
#include <optional>
#include <vector>

#include "bellmix/bell_algebra.hpp"
#include "bellmix/linalg.hpp"

namespace bellmix::werner_core {

using bell_algebra::BellOperator;

// Sign-vector families satisfying v.v = d_v, sum_alpha v = 0,
// sum_alpha v v^T = N_alpha I_v. Supported (d_v, N_alpha):
// (1,2), (2,4), (3,4), (3,8).
std::vector<Vec3> make_vset(int dim_v, int n_alpha);
int default_n_alpha(int dim_v);  // 2, 4, 4

// Werner state rho = m0 |B(0)><B(0)| + m1 sum_{mu=1..d_v} |B(mu)><B(mu)|
// together with the decomposition family geometry.
struct WernerSpec {
  WernerSpec(double m0, int dim_v);
  WernerSpec(double m0, int dim_v, int n_alpha);
  WernerSpec(double m0, int dim_v, std::vector<Vec3> vset);

  double m0 = 1.0;
  double m1 = 0.0;  // (1 - m0)/d_v
  int dim_v = 3;
  int n_alpha = 4;
  std::vector<Vec3> vset;

  Mat4 rho_bell() const;  // diag(m0, m1 x d_v, 0 x (3 - d_v))
};

// Ansatz parameters (q, eps) plus the derived auxiliaries. make() validates
// q >= 0, eps >= 0, eta >= 0, the eigenvalue bound u/2 - X >= -1e-12 and
// q <= sqrt(m0 m1 eta / d_v) + 1e-12.
struct AnsatzParams {
  double q = 0.0;
  double eps = 0.0;
  double eta = 0.0;
  double u = 0.0;
  double k = 0.0;
  double y = 0.0;  // |q| sqrt(d_v)
  double x = 0.0;  // sqrt(k^2 + y^2)

  static AnsatzParams make(const WernerSpec& spec, double q, double eps);
};

// Largest admissible q at the given eps.
double q_max(const WernerSpec& spec, double eps);
// q = sqrt(m0 m1), eps = 0.
AnsatzParams pure_min_params(const WernerSpec& spec);

struct DecompositionMember {
  int alpha = 0;
  BellOperator k_op;     // Bell basis
  double weight = 0.0;   // 1/N_alpha
};

// The ansatz member K^alpha; throws if the parameters put an eigenvalue
// negative beyond tolerance.
DecompositionMember ansatz_K(const WernerSpec& spec, const AnsatzParams& p, int alpha);

// Closed-form eigenvalues of N_alpha * K^alpha: (u/2 + X, u/2 - X,
// eps*m1 x (d_v - 1), 0 x (3 - d_v)).
std::array<double, 4> eigenvalue_table(const WernerSpec& spec, const AnsatzParams& p);

struct ProjectorFamily {
  Mat4 e;        // E_alpha
  Mat4 sigma;    // Sigma_alpha
  Mat4 p0;       // P^(0)_alpha
  Mat4 p_plus;   // (E + Sigma)/2
  Mat4 p_minus;  // (E - Sigma)/2
};

// Throws when X = 0 (degenerate spectral split).
ProjectorFamily projector_family(const WernerSpec& spec, const AnsatzParams& p, int alpha);

// Support-restricted ln K^alpha (Bell basis). Eigenvalues below
// tol::kSupportEig contribute nothing.
BellOperator log_K(const WernerSpec& spec, const AnsatzParams& p, int alpha);

struct Marginals {
  Mat2 k_a;            // tr_b K^alpha
  Mat2 k_b;            // tr_a K^alpha
  BellOperator r;      // K_a K_b / w_alpha, Bell basis
  BellOperator log_r;  // closed form, Bell basis
};

// Throws when y >= 1/2 (marginal log divergent; see the boundary policy).
Marginals marginals_and_R(const WernerSpec& spec, const AnsatzParams& p, int alpha);

// Closed-form Lagrangian
// L = sum_{s=+-} (u/2 + sX) ln(u/2 + sX) + (d_v-1) eps m1 ln(eps m1)
//     + 2 h_e(1/2 + Y),  with 0 ln 0 = 0.
double lagrangian(const WernerSpec& spec, const AnsatzParams& p);

// d_v = 1 reduced forms, as functions of (k, Y):
// L(Y) = -h_e(1/2 + X) + 2 h_e(1/2 + Y) and the q-stationarity function
// g(Y) whose roots are the stationary points.
double lagrangian_dimv1(double k, double y);
double stationarity_dimv1(double k, double y);

enum class MinMode { Pure, Mixed };

struct EntanglementReport {
  MinMode mode = MinMode::Pure;
  double entanglement = 0.0;  // bits
  AnsatzParams params;
  BellOperator delta;                 // Bell basis, diagonal
  double trace_identity_residual = 0.0;
  std::array<double, 2> stationarity_residuals{0.0, 0.0};
  bool converged = true;
  bool boundary_minimum = false;          // d_v = 1: minimum sits on an endpoint
  std::vector<double> candidate_y;        // d_v = 1 stationary candidates examined
  std::optional<double> entanglement_pure;  // filled by e_mixed for comparison
};

EntanglementReport e_pure(const WernerSpec& spec);
EntanglementReport e_mixed(const WernerSpec& spec);

// Entanglement operator Delta (Bell basis, diagonal). Pure mode expects the
// pure-min parameters, mixed mode a stationary point.
BellOperator delta_operator(const WernerSpec& spec, const AnsatzParams& p, MinMode mode);

// tr(rho Delta) evaluated with divergent-log pairing so the identity
// (2 ln 2) E = tr(rho Delta) is well-defined on the whole m0 range,
// boundaries included.
double trace_rho_delta(const WernerSpec& spec, const AnsatzParams& p, MinMode mode);

// |psi_alpha> = (sqrt(m0), -i sqrt(m1) v^alpha), Bell components.
Vec4c psi_alpha(const WernerSpec& spec, int alpha);

struct InsensitivityReport {
  double max_alpha_deviation = 0.0;
  bool insensitive = false;
  bool dense_route_skipped = false;  // boundary m0 where lnR diverges
  double orbit_entanglement = 0.0;
  double reference_eof = 0.0;  // Bennett value for the same mixture
};

InsensitivityReport orbit_insensitivity_check(const WernerSpec& spec, const AnsatzParams& p,
                                              MinMode mode);

}  // namespace bellmix::werner_core

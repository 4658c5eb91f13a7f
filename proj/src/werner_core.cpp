#include "bellmix/werner_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bellmix/eq_solver.hpp"
#include "bellmix/oracle.hpp"
#include "bellmix/pure_state.hpp"
#include "bellmix/tolerances.hpp"

namespace bellmix::werner_core {

using bell_algebra::OperatorBasis;
using pure_state::binary_entropy;
using pure_state::binary_entropy_e;

namespace {

constexpr double kTwoLn2 = 2.0 * std::numbers::ln2;
const Complex kI{0.0, 1.0};

// (1/(2X)) ln((u/2 - X)/(u/2 + X)) = -atanh(2X/u)/X, continuous at X = 0.
double ratio_log_u(double x, double u) {
  if (x < 1e-8 * u) return -2.0 / u - 8.0 * x * x / (3.0 * u * u * u);
  return -std::atanh(2.0 * x / u) / x;
}

// (1/Y) ln((1/2 - Y)/(1/2 + Y)) = -2 atanh(2Y)/Y, continuous at Y = 0.
double ratio_log_half(double y) {
  if (y < 1e-8) return -4.0 - (16.0 / 3.0) * y * y;
  return -2.0 * std::atanh(2.0 * y) / y;
}

void check_vset(int dim_v, int n_alpha, const std::vector<Vec3>& vset) {
  if (static_cast<int>(vset.size()) != n_alpha) {
    throw std::invalid_argument("vset size does not match n_alpha");
  }
  Vec3 sum = Vec3::Zero();
  Eigen::Matrix3d outer = Eigen::Matrix3d::Zero();
  for (const Vec3& v : vset) {
    if (std::abs(v.squaredNorm() - dim_v) > 1e-12) {
      throw std::invalid_argument("vset vector with |v|^2 != d_v");
    }
    sum += v;
    outer += v * v.transpose();
  }
  if (sum.norm() > 1e-12) throw std::invalid_argument("vset does not sum to zero");
  Eigen::Matrix3d iv = Eigen::Matrix3d::Zero();
  for (int j = 0; j < dim_v; ++j) iv(j, j) = 1.0;
  if ((outer - n_alpha * iv).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("vset outer-product sum is not N_alpha I_v");
  }
}

void check_alpha(const WernerSpec& spec, int alpha) {
  if (alpha < 0 || alpha >= spec.n_alpha) {
    throw std::invalid_argument("alpha out of range");
  }
}

// Embeds a (scalar; row 3-vector; 3x3 block) structure into a Bell-basis 4x4.
Mat4 embed_blocks(Complex top, const Vec3c& row, const Eigen::Matrix3cd& block) {
  Mat4 m = Mat4::Zero();
  m(0, 0) = top;
  for (int j = 0; j < 3; ++j) {
    m(0, j + 1) = row[j];
    m(j + 1, 0) = std::conj(row[j]);
    for (int l = 0; l < 3; ++l) m(j + 1, l + 1) = block(j, l);
  }
  return m;
}

}  // namespace

int default_n_alpha(int dim_v) {
  switch (dim_v) {
    case 1: return 2;
    case 2: return 4;
    case 3: return 4;
    default: throw std::invalid_argument("d_v must be in {1,2,3}");
  }
}

std::vector<Vec3> make_vset(int dim_v, int n_alpha) {
  if (dim_v == 1 && n_alpha == 2) {
    return {Vec3(1, 0, 0), Vec3(-1, 0, 0)};
  }
  if (dim_v == 2 && n_alpha == 4) {
    std::vector<Vec3> v;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) v.emplace_back(a ? -1 : 1, b ? -1 : 1, 0);
    return v;
  }
  if (dim_v == 3 && n_alpha == 4) {
    return {Vec3(1, 1, 1), Vec3(1, -1, -1), Vec3(-1, 1, -1), Vec3(-1, -1, 1)};
  }
  if (dim_v == 3 && n_alpha == 8) {
    std::vector<Vec3> v;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) v.emplace_back(a ? -1 : 1, b ? -1 : 1, c ? -1 : 1);
    return v;
  }
  throw std::invalid_argument("unsupported (d_v, N_alpha) pair: (" + std::to_string(dim_v) +
                              ", " + std::to_string(n_alpha) + ")");
}

WernerSpec::WernerSpec(double m0_in, int dim_v_in)
    : WernerSpec(m0_in, dim_v_in, default_n_alpha(dim_v_in)) {}

WernerSpec::WernerSpec(double m0_in, int dim_v_in, int n_alpha_in) {
  if (m0_in < 0.0 || m0_in > 1.0) throw std::invalid_argument("m0 must lie in [0,1]");
  m0 = m0_in;
  dim_v = dim_v_in;
  n_alpha = n_alpha_in;
  m1 = (1.0 - m0) / dim_v;
  vset = make_vset(dim_v, n_alpha);
}

WernerSpec::WernerSpec(double m0_in, int dim_v_in, std::vector<Vec3> vset_in) {
  if (m0_in < 0.0 || m0_in > 1.0) throw std::invalid_argument("m0 must lie in [0,1]");
  if (dim_v_in < 1 || dim_v_in > 3) throw std::invalid_argument("d_v must be in {1,2,3}");
  m0 = m0_in;
  dim_v = dim_v_in;
  n_alpha = static_cast<int>(vset_in.size());
  m1 = (1.0 - m0) / dim_v;
  check_vset(dim_v, n_alpha, vset_in);
  vset = std::move(vset_in);
}

Mat4 WernerSpec::rho_bell() const {
  Mat4 rho = Mat4::Zero();
  rho(0, 0) = m0;
  for (int j = 1; j <= dim_v; ++j) rho(j, j) = m1;
  return rho;
}

double q_max(const WernerSpec& spec, double eps) {
  const double eta = spec.dim_v - eps * (spec.dim_v - 1);
  const double val = spec.m0 * spec.m1 * eta / spec.dim_v;
  return val > 0.0 ? std::sqrt(val) : 0.0;
}

AnsatzParams AnsatzParams::make(const WernerSpec& spec, double q, double eps) {
  if (q < 0.0) {
    throw std::invalid_argument("q must be >= 0 (replace q -> -q, v -> -v instead)");
  }
  if (eps < 0.0) throw std::invalid_argument("eps must be >= 0");
  AnsatzParams p;
  p.q = q;
  p.eps = eps;
  p.eta = spec.dim_v - eps * (spec.dim_v - 1);
  if (p.eta < -1e-12) throw std::invalid_argument("eps too large: eta < 0");
  p.u = spec.m0 + p.eta * spec.m1;
  p.k = 0.5 * (spec.m0 - p.eta * spec.m1);
  p.y = q * std::sqrt(static_cast<double>(spec.dim_v));
  p.x = std::hypot(p.k, p.y);
  if (0.5 * p.u - p.x < -1e-12) {
    throw std::invalid_argument("invalid params: u/2 - X = " + std::to_string(0.5 * p.u - p.x));
  }
  if (q > q_max(spec, eps) + 1e-12) {
    throw std::invalid_argument("q exceeds sqrt(m0 m1 eta/d_v)");
  }
  return p;
}

AnsatzParams pure_min_params(const WernerSpec& spec) {
  return AnsatzParams::make(spec, std::sqrt(spec.m0 * spec.m1), 0.0);
}

DecompositionMember ansatz_K(const WernerSpec& spec, const AnsatzParams& p, int alpha) {
  check_alpha(spec, alpha);
  const Vec3& v = spec.vset[alpha];
  const double n = spec.n_alpha;
  Eigen::Matrix3cd block = Eigen::Matrix3cd::Zero();
  for (int j = 0; j < 3; ++j)
    for (int l = 0; l < 3; ++l) {
      const double iv = (j == l && j < spec.dim_v) ? 1.0 : 0.0;
      block(j, l) = spec.m1 * v[j] * v[l] + p.eps * spec.m1 * (iv - v[j] * v[l]);
    }
  Vec3c row;
  for (int j = 0; j < 3; ++j) row[j] = kI * p.q * v[j];
  Mat4 k = embed_blocks(Complex{spec.m0, 0.0}, row, block) / n;
  // eigenvalue non-negativity (the params were validated, keep a direct check)
  if (0.5 * p.u - p.x < -1e-12 || p.eps * spec.m1 < -1e-12) {
    throw std::invalid_argument("ansatz_K: negative eigenvalue");
  }
  return {alpha, {k, OperatorBasis::Bell}, 1.0 / n};
}

std::array<double, 4> eigenvalue_table(const WernerSpec& spec, const AnsatzParams& p) {
  const double n = spec.n_alpha;
  std::array<double, 4> ev{};
  int idx = 0;
  for (int j = 0; j < 3 - spec.dim_v; ++j) ev[idx++] = 0.0;
  for (int j = 0; j < spec.dim_v - 1; ++j) ev[idx++] = p.eps * spec.m1 / n;
  ev[idx++] = (0.5 * p.u - p.x) / n;
  ev[idx++] = (0.5 * p.u + p.x) / n;
  std::sort(ev.begin(), ev.end());
  return ev;
}

ProjectorFamily projector_family(const WernerSpec& spec, const AnsatzParams& p, int alpha) {
  check_alpha(spec, alpha);
  if (p.x < 1e-15) {
    throw std::domain_error("projector_family: X = 0 degenerate split");
  }
  const Vec3& v = spec.vset[alpha];
  const double d = spec.dim_v;
  const Eigen::Matrix3cd vv = (v * v.transpose()).cast<Complex>() / d;
  Eigen::Matrix3cd iv_minus = -vv;
  for (int j = 0; j < spec.dim_v; ++j) iv_minus(j, j) += 1.0;

  ProjectorFamily f;
  f.e = embed_blocks(1.0, Vec3c::Zero(), vv);
  Vec3c row;
  for (int j = 0; j < 3; ++j) row[j] = kI * p.q * v[j] / p.x;
  f.sigma = embed_blocks(p.k / p.x, row, -(p.k / p.x) * vv);
  f.p0 = embed_blocks(0.0, Vec3c::Zero(), iv_minus);
  f.p_plus = 0.5 * (f.e + f.sigma);
  f.p_minus = 0.5 * (f.e - f.sigma);
  return f;
}

BellOperator log_K(const WernerSpec& spec, const AnsatzParams& p, int alpha) {
  check_alpha(spec, alpha);
  const double n = spec.n_alpha;
  const double lam0 = p.eps * spec.m1;
  Mat4 out = Mat4::Zero();
  if (p.x < 1e-15) {
    // degenerate split: K = (u/2) E/N + lam0 P0/N
    const Vec3& v = spec.vset[alpha];
    const Eigen::Matrix3cd vv = (v * v.transpose()).cast<Complex>() / spec.dim_v;
    Eigen::Matrix3cd iv_minus = -vv;
    for (int j = 0; j < spec.dim_v; ++j) iv_minus(j, j) += 1.0;
    if (0.5 * p.u > tol::kSupportEig) {
      out += std::log(0.5 * p.u / n) * embed_blocks(1.0, Vec3c::Zero(), vv);
    }
    if (lam0 > tol::kSupportEig) {
      out += std::log(lam0 / n) * embed_blocks(0.0, Vec3c::Zero(), iv_minus);
    }
    return {out, OperatorBasis::Bell};
  }
  const ProjectorFamily f = projector_family(spec, p, alpha);
  const double lp = 0.5 * p.u + p.x;
  const double lm = 0.5 * p.u - p.x;
  if (lp > tol::kSupportEig) out += std::log(lp / n) * f.p_plus;
  if (lm > tol::kSupportEig) out += std::log(lm / n) * f.p_minus;
  if (lam0 > tol::kSupportEig) out += std::log(lam0 / n) * f.p0;
  return {out, OperatorBasis::Bell};
}

Marginals marginals_and_R(const WernerSpec& spec, const AnsatzParams& p, int alpha) {
  check_alpha(spec, alpha);
  const Vec3& v = spec.vset[alpha];
  const double n = spec.n_alpha;
  const Vec3 nvec = p.q * v;
  const Vec3 nflip(nvec[0], -nvec[1], nvec[2]);  // F2 n

  Marginals m;
  m.k_b = 0.5 * Mat2::Identity();
  m.k_a = 0.5 * Mat2::Identity();
  for (int j = 0; j < 3; ++j) {
    m.k_b += nvec[j] * bell_algebra::pauli_matrix(j + 1);
    m.k_a += nflip[j] * bell_algebra::pauli_matrix(j + 1);
  }
  m.k_b /= n;
  m.k_a /= n;

  const Mat4 r_std = n * kron2(m.k_a, m.k_b);  // K_a K_b / w
  m.r = bell_algebra::basis_convert({r_std, OperatorBasis::Standard}, OperatorBasis::Bell);

  if (p.y >= 0.5) {
    throw std::domain_error("marginals_and_R: Y >= 1/2, marginal log divergent");
  }
  Mat4 lr = (-std::log(n) + std::log((0.5 + p.y) * (0.5 - p.y))) * Mat4::Identity();
  if (p.q > 0.0) {
    const double coef = std::log((0.5 + p.y) / (0.5 - p.y));
    const Vec3 nhat = v / v.norm();
    for (int j = 0; j < 3; ++j) {
      lr(0, j + 1) += coef * kI * nhat[j];
      lr(j + 1, 0) += -coef * kI * nhat[j];
    }
  }
  m.log_r = {lr, OperatorBasis::Bell};
  return m;
}

double lagrangian(const WernerSpec& spec, const AnsatzParams& p) {
  const double lp = 0.5 * p.u + p.x;
  const double lm = 0.5 * p.u - p.x;
  return xlnx(lp) + xlnx(std::max(0.0, lm)) +
         (spec.dim_v - 1) * xlnx(p.eps * spec.m1) + 2.0 * binary_entropy_e(0.5 + p.y);
}

double lagrangian_dimv1(double k, double y) {
  const double x = std::hypot(k, y);
  return -binary_entropy_e(std::min(1.0, 0.5 + x)) + 2.0 * binary_entropy_e(0.5 + y);
}

double stationarity_dimv1(double k, double y) {
  const double x = std::hypot(k, y);
  return ratio_log_u(x, 1.0) - ratio_log_half(y);
}

Vec4c psi_alpha(const WernerSpec& spec, int alpha) {
  check_alpha(spec, alpha);
  const Vec3& v = spec.vset[alpha];
  Vec4c psi;
  psi[0] = std::sqrt(spec.m0);
  const double rm1 = std::sqrt(spec.m1);
  for (int j = 0; j < 3; ++j) psi[j + 1] = -kI * rm1 * v[j];
  return psi;
}

BellOperator delta_operator(const WernerSpec& spec, const AnsatzParams& p, MinMode mode) {
  Mat4 delta = Mat4::Zero();
  if (mode == MinMode::Pure) {
    const double y = p.y;  // sqrt(m0(1-m0)) at the pure-min point
    double d0;
    double dj;
    if (spec.m0 == 0.0) {
      // limits: f*ln((1/2+Y)/(1/2-Y)) -> 4(1-m0), 1/f -> 0
      d0 = -4.0 + kTwoLn2;
      dj = kTwoLn2;
    } else if (spec.m0 == 1.0) {
      d0 = kTwoLn2;
      dj = -4.0 + kTwoLn2;
    } else {
      const double f = std::sqrt((1.0 - spec.m0) / spec.m0);
      d0 = clog(-(f + 1.0), 0.5 + y) + clog(f - 1.0, 0.5 - y);
      dj = clog(-(1.0 / f + 1.0), 0.5 + y) + clog(1.0 / f - 1.0, 0.5 - y);
    }
    const double dz = -std::log(0.5 + y) - std::log(0.5 - y);
    delta(0, 0) = d0;
    for (int j = 1; j < 4; ++j) delta(j, j) = (j <= spec.dim_v) ? dj : dz;
    return {delta, OperatorBasis::Bell};
  }
  // Mixed: M + a with M diagonal, valid at stationary parameters.
  const double lp = 0.5 * p.u + p.x;
  const double lm = 0.5 * p.u - p.x;
  double m00;
  if (p.x < 1e-15) {
    m00 = std::log(0.5 * p.u);
  } else {
    const double cp = 0.5 + 0.5 * p.k / p.x;
    const double cm = 0.5 - 0.5 * p.k / p.x;
    m00 = (cp != 0.0 ? cp * std::log(lp) : 0.0) + (cm != 0.0 ? cm * std::log(lm) : 0.0);
  }
  const double mjj = std::log(p.eps * spec.m1);
  const double a = -std::log((0.5 + p.y) * (0.5 - p.y));
  delta(0, 0) = m00 + a;
  for (int j = 1; j < 4; ++j) delta(j, j) = (j <= spec.dim_v) ? (mjj + a) : a;
  return {delta, OperatorBasis::Bell};
}

double trace_rho_delta(const WernerSpec& spec, const AnsatzParams& p, MinMode mode) {
  const Mat4 d = delta_operator(spec, p, mode).entries;
  double tr = spec.m0 * d(0, 0).real();
  for (int j = 1; j <= spec.dim_v; ++j) tr += spec.m1 * d(j, j).real();
  return tr;
}

namespace {

EntanglementReport pure_corner_report(const WernerSpec& spec, MinMode mode) {
  // m1 = 0: the state is the pure Bell state |B(0)>, both minimizations
  // coincide at the corner q = 0, eps = 0.
  EntanglementReport r;
  r.mode = mode;
  r.params = AnsatzParams::make(spec, 0.0, 0.0);
  r.entanglement = 1.0;
  r.delta = delta_operator(spec, r.params, MinMode::Pure);
  r.trace_identity_residual =
      std::abs(kTwoLn2 * r.entanglement - trace_rho_delta(spec, r.params, MinMode::Pure));
  return r;
}

}  // namespace

EntanglementReport e_pure(const WernerSpec& spec) {
  EntanglementReport r;
  r.mode = MinMode::Pure;
  r.params = pure_min_params(spec);
  r.entanglement = binary_entropy(std::min(1.0, 0.5 + r.params.y));
  r.delta = delta_operator(spec, r.params, MinMode::Pure);
  r.trace_identity_residual =
      std::abs(kTwoLn2 * r.entanglement - trace_rho_delta(spec, r.params, MinMode::Pure));
  return r;
}

namespace {

// d_v = 1 branch: find the stationary Y values of the reduced L on
// (0, Y_pure), pick the global minimum among roots and endpoints.
EntanglementReport e_mixed_dimv1(const WernerSpec& spec) {
  EntanglementReport r;
  r.mode = MinMode::Mixed;
  const double k = spec.m0 - 0.5;
  const double y_pure = std::sqrt(spec.m0 * spec.m1);

  std::vector<double> roots;
  if (y_pure > 1e-12) {
    const int n = 4000;
    double prev_y = y_pure * 1e-9;
    double prev_g = stationarity_dimv1(k, prev_y);
    for (int i = 1; i <= n; ++i) {
      const double y = y_pure * (1e-9 + (1.0 - 2e-9) * i / n);
      const double g = stationarity_dimv1(k, y);
      if (std::isfinite(prev_g) && std::isfinite(g) && prev_g * g < 0.0) {
        double lo = prev_y, hi = y, glo = prev_g;
        for (int it = 0; it < 200; ++it) {
          const double mid = 0.5 * (lo + hi);
          const double gm = stationarity_dimv1(k, mid);
          if (gm == 0.0) { lo = hi = mid; break; }
          if (glo * gm < 0.0) hi = mid; else { lo = mid; glo = gm; }
          if (hi - lo < 1e-16) break;
        }
        roots.push_back(0.5 * (lo + hi));
      } else if (std::isfinite(g) && g == 0.0) {
        roots.push_back(y);
      }
      prev_y = y;
      prev_g = g;
    }
  }

  std::vector<double> candidates = roots;
  candidates.push_back(0.0);
  candidates.push_back(y_pure);
  double best_y = y_pure;
  double best_l = lagrangian_dimv1(k, y_pure);
  for (double y : candidates) {
    const double l = lagrangian_dimv1(k, y);
    if (l < best_l) {
      best_l = l;
      best_y = y;
    }
  }
  r.candidate_y = candidates;
  r.boundary_minimum =
      std::none_of(roots.begin(), roots.end(), [&](double y) { return y == best_y; });
  r.entanglement = best_l / kTwoLn2;

  // eps is free for d_v = 1; report the value dictated by the
  // eps-stationarity branch so Delta^mixed takes its diagonal form.
  const double x0 = std::hypot(k, best_y);
  double eps_report = 1.0;
  if (spec.m1 > 0.0) {
    double lnem;
    if (x0 < 1e-15) {
      lnem = std::log(0.5);
    } else {
      const double cp = 0.5 - 0.5 * k / x0;
      const double cm = 0.5 + 0.5 * k / x0;
      lnem = (cp != 0.0 ? cp * std::log(0.5 + x0) : 0.0) +
             (cm != 0.0 ? cm * std::log(std::max(0.5 - x0, 0.0)) : 0.0);
    }
    eps_report = std::exp(lnem) / spec.m1;
  }
  r.params = AnsatzParams::make(spec, best_y, eps_report);
  r.stationarity_residuals = {0.0, std::abs(stationarity_dimv1(k, best_y))};
  if (r.boundary_minimum) r.stationarity_residuals[1] = 0.0;
  r.delta = delta_operator(spec, r.params, MinMode::Mixed);
  r.trace_identity_residual =
      std::abs(kTwoLn2 * r.entanglement - trace_rho_delta(spec, r.params, MinMode::Mixed));
  r.converged = true;
  return r;
}

// q pinned at zero (m0 = 0): L depends on eps only; golden-section minimize.
EntanglementReport e_mixed_q_zero(const WernerSpec& spec) {
  EntanglementReport r;
  r.mode = MinMode::Mixed;
  const double eps_hi = static_cast<double>(spec.dim_v) / (spec.dim_v - 1) - 1e-9;
  auto lag = [&](double eps) {
    return lagrangian(spec, AnsatzParams::make(spec, 0.0, eps));
  };
  double a = 1e-9, b = eps_hi;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = lag(c), fd = lag(d);
  while (b - a > 1e-12) {
    if (fc < fd) {
      b = d; d = c; fd = fc;
      c = b - gr * (b - a);
      fc = lag(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + gr * (b - a);
      fd = lag(d);
    }
  }
  const double eps_best = 0.5 * (a + b);
  r.params = AnsatzParams::make(spec, 0.0, eps_best);
  r.entanglement = lagrangian(spec, r.params) / kTwoLn2;
  r.delta = delta_operator(spec, r.params, MinMode::Mixed);
  r.trace_identity_residual =
      std::abs(kTwoLn2 * r.entanglement - trace_rho_delta(spec, r.params, MinMode::Mixed));
  const auto res = eq_solver::residuals(spec, r.params.eps, r.params.q);
  r.stationarity_residuals = {std::abs(res.r_eps), 0.0};
  return r;
}

}  // namespace

EntanglementReport e_mixed(const WernerSpec& spec) {
  if (spec.m1 < 1e-15) return pure_corner_report(spec, MinMode::Mixed);
  if (spec.dim_v == 1) return e_mixed_dimv1(spec);
  if (q_max(spec, 0.0) < 1e-12) return e_mixed_q_zero(spec);

  const eq_solver::SolveOutcome out = eq_solver::solve_exact(spec);
  EntanglementReport r;
  r.mode = MinMode::Mixed;
  const eq_solver::EqSystemRoot* root = nullptr;
  if (out.near_pure) {
    root = &*out.near_pure;
  } else if (!out.other_roots.empty()) {
    root = &out.other_roots.front();
  }
  if (root == nullptr || !root->converged) {
    r.converged = false;
    if (root != nullptr) {
      r.params = AnsatzParams::make(spec, root->q, root->eps);
      r.stationarity_residuals = {std::abs(root->res.r_eps), std::abs(root->res.r_q)};
      r.entanglement = lagrangian(spec, r.params) / kTwoLn2;
    } else {
      r.params = pure_min_params(spec);
      r.entanglement = binary_entropy(std::min(1.0, 0.5 + r.params.y));
    }
    return r;
  }
  r.params = AnsatzParams::make(spec, root->q, root->eps);
  r.entanglement = lagrangian(spec, r.params) / kTwoLn2;
  r.stationarity_residuals = {std::abs(root->res.r_eps), std::abs(root->res.r_q)};
  r.delta = delta_operator(spec, r.params, MinMode::Mixed);
  r.trace_identity_residual =
      std::abs(kTwoLn2 * r.entanglement - trace_rho_delta(spec, r.params, MinMode::Mixed));
  r.converged = true;
  r.entanglement_pure = binary_entropy(0.5 + std::sqrt(spec.m0 * (1.0 - spec.m0)));
  return r;
}

InsensitivityReport orbit_insensitivity_check(const WernerSpec& spec, const AnsatzParams& p,
                                              MinMode mode) {
  InsensitivityReport rep;
  rep.orbit_entanglement = lagrangian(spec, p) / kTwoLn2;

  std::array<double, 4> weights{spec.m0, 0.0, 0.0, 0.0};
  for (int j = 1; j <= spec.dim_v; ++j) weights[j] = spec.m1;
  std::sort(weights.begin(), weights.end(), std::greater<>());
  rep.reference_eof = oracle::bell_mixture_eof(weights);

  double dev = 0.0;
  if (mode == MinMode::Pure) {
    const Mat4 delta = delta_operator(spec, p, MinMode::Pure).entries;
    if (p.y >= 0.5 - 1e-9) {
      // Y = 1/2 boundary (m0 = 1/2): lnR diverges; the paired closed form is
      // the defined value and is manifestly alpha-independent.
      rep.dense_route_skipped = true;
    } else {
      for (int alpha = 0; alpha < spec.n_alpha; ++alpha) {
        const Mat4 lk = log_K(spec, p, alpha).entries;
        const Mat4 lr = marginals_and_R(spec, p, alpha).log_r.entries;
        const Vec4c psi = psi_alpha(spec, alpha);
        const Vec4c lhs = (lk - lr) * psi;
        const Vec4c rhs = delta * psi;
        dev = std::max(dev, (lhs - rhs).cwiseAbs().maxCoeff());
      }
    }
  } else {
    const Mat4 delta = delta_operator(spec, p, MinMode::Mixed).entries;
    Mat4 first = Mat4::Zero();
    const int dim = spec.dim_v + 1;  // support block indices 0..d_v
    for (int alpha = 0; alpha < spec.n_alpha; ++alpha) {
      const Mat4 da =
          log_K(spec, p, alpha).entries - marginals_and_R(spec, p, alpha).log_r.entries;
      dev = std::max(dev, max_abs(da.topLeftCorner(dim, dim) - delta.topLeftCorner(dim, dim)));
      if (alpha == 0) {
        first = da;
      } else {
        dev = std::max(dev, max_abs(da.topLeftCorner(dim, dim) - first.topLeftCorner(dim, dim)));
      }
    }
  }
  rep.max_alpha_deviation = dev;
  rep.insensitive = dev <= tol::kInsensitivity;
  return rep;
}

}  // namespace bellmix::werner_core

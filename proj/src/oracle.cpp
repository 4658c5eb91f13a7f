#include "bellmix/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace bellmix::oracle {

namespace {

const Complex kI{0.0, 1.0};

// Local Bell-basis unitary (columns |B(mu)> in the standard |ab> basis).
// Deliberately restated here rather than taken from bell_algebra.
const Mat4& local_bell_matrix() {
  static const Mat4 b = [] {
    const double r = 1.0 / std::sqrt(2.0);
    Mat4 m = Mat4::Zero();
    m.col(0) << r, 0, 0, r;
    m.col(1) << 0, kI * r, kI * r, 0;
    m.col(2) << 0, -r, r, 0;
    m.col(3) << kI * r, 0, 0, -kI * r;
    return m;
  }();
  return b;
}

double local_binary_entropy_e(double x) {
  auto xlx = [](double t) { return t > 0.0 ? t * std::log(t) : 0.0; };
  return -xlx(x) - xlx(1.0 - x);
}

// The ansatz member in the Bell basis, restated from its definition.
Mat4 dense_member(const werner_core::WernerSpec& spec, const werner_core::AnsatzParams& p,
                  int alpha) {
  const Vec3& v = spec.vset[alpha];
  Mat4 k = Mat4::Zero();
  k(0, 0) = spec.m0;
  for (int j = 0; j < 3; ++j) {
    k(0, j + 1) = kI * p.q * v[j];
    k(j + 1, 0) = -kI * p.q * v[j];
    for (int l = 0; l < 3; ++l) {
      const double iv = (j == l && j < spec.dim_v) ? 1.0 : 0.0;
      k(j + 1, l + 1) = spec.m1 * v[j] * v[l] + p.eps * spec.m1 * (iv - v[j] * v[l]);
    }
  }
  return k / double(spec.n_alpha);
}

}  // namespace

EigResult eig_hermitian(const Eigen::MatrixXcd& h) {
  const int n = static_cast<int>(h.rows());
  if (h.cols() != n) throw std::invalid_argument("eig_hermitian: matrix not square");
  const double scale = std::max(1.0, h.norm());
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::invalid_argument("eig_hermitian: matrix not Hermitian");
  }
  Eigen::MatrixXcd a = 0.5 * (h + h.adjoint());
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(n, n);
  const double norm_h = a.norm();

  auto off_norm = [&]() {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (p != q) s += std::norm(a(p, q));
    return std::sqrt(s);
  };

  int sweeps = 0;
  if (norm_h > 0.0) {
    for (sweeps = 1; sweeps <= 100; ++sweeps) {
      if (off_norm() <= 1e-14 * norm_h) break;
      for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
          const Complex g = a(p, q);
          const double absg = std::abs(g);
          if (absg == 0.0) continue;
          const Complex w = g / absg;
          const double app = a(p, p).real();
          const double aqq = a(q, q).real();
          const double tau = (aqq - app) / (2.0 * absg);
          const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;
          // A <- J^dagger A J with J_pp = c, J_pq = s w, J_qp = -s conj(w), J_qq = c
          const Eigen::VectorXcd colp = a.col(p), colq = a.col(q);
          a.col(p) = c * colp - s * std::conj(w) * colq;
          a.col(q) = s * w * colp + c * colq;
          const Eigen::RowVectorXcd rowp = a.row(p), rowq = a.row(q);
          a.row(p) = c * rowp - s * w * rowq;
          a.row(q) = s * std::conj(w) * rowp + c * rowq;
          const Eigen::VectorXcd vp = v.col(p), vq = v.col(q);
          v.col(p) = c * vp - s * std::conj(w) * vq;
          v.col(q) = s * w * vp + c * vq;
        }
      }
      if (sweeps == 100) throw std::runtime_error("eig_hermitian: no convergence in 100 sweeps");
    }
  }

  EigResult r;
  r.sweeps = sweeps;
  r.eigenvalues.resize(n);
  for (int i = 0; i < n; ++i) r.eigenvalues[i] = a(i, i).real();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return r.eigenvalues[i] < r.eigenvalues[j]; });
  Eigen::VectorXd sorted(n);
  Eigen::MatrixXcd vs(n, n);
  for (int i = 0; i < n; ++i) {
    sorted[i] = r.eigenvalues[order[i]];
    vs.col(i) = v.col(order[i]);
  }
  r.eigenvalues = sorted;
  r.eigenvectors = vs;
  return r;
}

Mat2 partial_trace_dense(const Mat4& x_std, bell_algebra::Subsystem traced_out) {
  Mat2 out = Mat2::Zero();
  if (traced_out == bell_algebra::Subsystem::A) {
    for (int b = 0; b < 2; ++b)
      for (int bp = 0; bp < 2; ++bp)
        for (int a = 0; a < 2; ++a) out(b, bp) += x_std(2 * a + b, 2 * a + bp);
  } else {
    for (int a = 0; a < 2; ++a)
      for (int ap = 0; ap < 2; ++ap)
        for (int b = 0; b < 2; ++b) out(a, ap) += x_std(2 * a + b, 2 * ap + b);
  }
  return out;
}

Eigen::MatrixXcd matrix_log_psd(const Eigen::MatrixXcd& h, double support_tol) {
  const EigResult e = eig_hermitian(h);
  const double scale = std::max(1.0, h.norm());
  if (e.eigenvalues.minCoeff() < -1e-10 * scale) {
    throw std::domain_error("matrix_log_psd: negative eigenvalue " +
                            std::to_string(e.eigenvalues.minCoeff()));
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(h.rows(), h.cols());
  for (int i = 0; i < e.eigenvalues.size(); ++i) {
    const double lam = e.eigenvalues[i];
    if (lam > support_tol) {
      out += std::log(lam) * e.eigenvectors.col(i) * e.eigenvectors.col(i).adjoint();
    }
  }
  return out;
}

double lagrangian_dense(const werner_core::WernerSpec& spec,
                        const werner_core::AnsatzParams& p) {
  const Mat4& b = local_bell_matrix();
  double total = 0.0;
  for (int alpha = 0; alpha < spec.n_alpha; ++alpha) {
    const Mat4 k_bell = dense_member(spec, p, alpha);
    const EigResult ek = eig_hermitian(k_bell);
    if (ek.eigenvalues.minCoeff() < -1e-10) {
      throw std::domain_error("lagrangian_dense: member has a negative eigenvalue");
    }
    double l_k = 0.0;
    for (int i = 0; i < 4; ++i) {
      const double lam = ek.eigenvalues[i];
      if (lam > 1e-12) l_k += lam * std::log(lam);
    }
    const Mat4 k_std = b * k_bell * b.adjoint();
    const Mat2 k_a = partial_trace_dense(k_std, bell_algebra::Subsystem::B);
    const Mat2 k_b2 = partial_trace_dense(k_std, bell_algebra::Subsystem::A);
    const Mat4 r_std = double(spec.n_alpha) * kron2(k_a, k_b2);
    const Mat4 ln_r = matrix_log_psd(r_std);
    const double l_r = (k_std * ln_r).trace().real();
    total += l_k - l_r;
  }
  return total;
}

namespace {

double golden_1d(const std::function<double(double)>& f, double a, double b, double tol_x,
                 long& evals) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  evals += 2;
  while (b - a > tol_x) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
    ++evals;
  }
  return 0.5 * (a + b);
}

}  // namespace

BruteResult brute_minimize(const werner_core::WernerSpec& spec, int coarse, int refine_rounds) {
  BruteResult best;
  best.lagrangian = std::numeric_limits<double>::infinity();
  long evals = 0;

  auto eval = [&](double q, double eps) {
    const auto p = werner_core::AnsatzParams::make(spec, q, eps);
    ++evals;
    return lagrangian_dense(spec, p);
  };

  if (spec.dim_v == 1) {
    // L is independent of eps; scan q only.
    const double q_hi = werner_core::q_max(spec, 1.0);
    const double fixed_eps = 1.0;
    if (q_hi < 1e-12) {
      best.q = 0.0;
      best.eps = fixed_eps;
      best.lagrangian = eval(0.0, fixed_eps);
      best.evaluations = evals;
      return best;
    }
    const int n1 = std::max(coarse, 1024);
    int best_i = 0;
    for (int i = 0; i <= n1; ++i) {
      const double q = q_hi * i / n1;
      const double l = eval(q, fixed_eps);
      if (l < best.lagrangian) {
        best.lagrangian = l;
        best.q = q;
        best_i = i;
      }
    }
    const double lo = q_hi * std::max(0, best_i - 1) / n1;
    const double hi = q_hi * std::min(n1, best_i + 1) / n1;
    best.q = golden_1d([&](double q) { return eval(q, fixed_eps); }, lo, hi, 1e-9, evals);
    best.eps = fixed_eps;
    best.lagrangian = eval(best.q, fixed_eps);
    best.evaluations = evals;
    return best;
  }

  // 2-D: eps in [0,1], q in [0, q_max(eps)]
  double eps_lo = 0.0, eps_hi = 1.0;
  double fr_q_lo = 0.0, fr_q_hi = 1.0;  // fraction of q_max(eps)
  const double shrink_guard = 1.0 - 1e-9;
  for (int round = 0; round <= refine_rounds; ++round) {
    const int n = (round == 0) ? coarse : 40;
    double rb_l = std::numeric_limits<double>::infinity();
    double rb_eps = eps_lo, rb_frq = fr_q_lo;
    for (int i = 0; i <= n; ++i) {
      const double eps = eps_lo + (eps_hi - eps_lo) * i / n;
      const double qm = werner_core::q_max(spec, eps) * shrink_guard;
      for (int j = 0; j <= n; ++j) {
        const double frq = fr_q_lo + (fr_q_hi - fr_q_lo) * j / n;
        const double l = eval(qm * frq, eps);
        if (l < rb_l) {
          rb_l = l;
          rb_eps = eps;
          rb_frq = frq;
        }
      }
    }
    if (rb_l < best.lagrangian) {
      best.lagrangian = rb_l;
      best.eps = rb_eps;
      best.q = werner_core::q_max(spec, rb_eps) * shrink_guard * rb_frq;
    }
    // shrink the window to +-2 cells around the best point
    const double d_eps = 2.0 * (eps_hi - eps_lo) / n;
    const double d_frq = 2.0 * (fr_q_hi - fr_q_lo) / n;
    eps_lo = std::max(0.0, rb_eps - d_eps);
    eps_hi = std::min(1.0, rb_eps + d_eps);
    fr_q_lo = std::max(0.0, rb_frq - d_frq);
    fr_q_hi = std::min(1.0, rb_frq + d_frq);
  }

  // coordinate golden-section descent to <= 1e-8 parameter resolution
  double eps = best.eps;
  double frq = best.q / std::max(1e-300, werner_core::q_max(spec, eps) * shrink_guard);
  frq = std::clamp(frq, 0.0, 1.0);
  for (int cycle = 0; cycle < 6; ++cycle) {
    const double we = std::max(1e-9, (eps_hi - eps_lo));
    eps = golden_1d(
        [&](double e) { return eval(werner_core::q_max(spec, e) * shrink_guard * frq, e); },
        std::max(0.0, eps - we), std::min(1.0, eps + we), 1e-10, evals);
    const double wf = std::max(1e-9, (fr_q_hi - fr_q_lo));
    frq = golden_1d(
        [&](double f) { return eval(werner_core::q_max(spec, eps) * shrink_guard * f, eps); },
        std::max(0.0, frq - wf), std::min(1.0, frq + wf), 1e-10, evals);
  }
  const double q = werner_core::q_max(spec, eps) * shrink_guard * frq;
  const double l = eval(q, eps);
  if (l < best.lagrangian) {
    best.lagrangian = l;
    best.eps = eps;
    best.q = q;
  }
  best.evaluations = evals;
  return best;
}

double bell_mixture_eof(const std::array<double, 4>& m) {
  double sum = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (m[i] < -1e-12) throw std::invalid_argument("bell_mixture_eof: negative weight");
    if (i > 0 && m[i] > m[i - 1] + 1e-12) {
      throw std::invalid_argument("bell_mixture_eof: weights must be sorted descending");
    }
    sum += m[i];
  }
  if (std::abs(sum - 1.0) > 1e-10) {
    throw std::invalid_argument("bell_mixture_eof: weights must sum to 1");
  }
  const double c = std::max(0.0, 2.0 * m[0] - 1.0);
  const double x = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c)));
  return local_binary_entropy_e(x) / std::log(2.0);
}

}  // namespace bellmix::oracle

#include "bellmix/eq_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bellmix/rng.hpp"
#include "bellmix/tolerances.hpp"

namespace bellmix::eq_solver {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Aux {
  double eta, u, k, y, x, lp, lm, em;
};

Aux aux_of(const WernerSpec& spec, double eps, double q) {
  Aux a;
  a.eta = spec.dim_v - eps * (spec.dim_v - 1);
  a.u = spec.m0 + a.eta * spec.m1;
  a.k = 0.5 * (spec.m0 - a.eta * spec.m1);
  a.y = q * std::sqrt(static_cast<double>(spec.dim_v));
  a.x = std::hypot(a.k, a.y);
  a.lp = 0.5 * a.u + a.x;
  a.lm = 0.5 * a.u - a.x;
  a.em = eps * spec.m1;
  return a;
}

double ratio_log_u(double x, double u) {
  if (x < 1e-8 * u) return -2.0 / u - 8.0 * x * x / (3.0 * u * u * u);
  return -std::atanh(2.0 * x / u) / x;
}

double ratio_log_half(double y) {
  if (y < 1e-8) return -4.0 - (16.0 / 3.0) * y * y;
  return -2.0 * std::atanh(2.0 * y) / y;
}

double eps_upper(const WernerSpec& spec) {
  return static_cast<double>(spec.dim_v) / (spec.dim_v - 1);
}

}  // namespace

double rho_of(const WernerSpec& spec, double eps, double q) {
  const Aux a = aux_of(spec, eps, q);
  return spec.m0 * spec.m1 * a.eta - q * q * spec.dim_v;
}

Residuals residuals(const WernerSpec& spec, double eps, double q) {
  const Aux a = aux_of(spec, eps, q);
  Residuals r;
  if (a.em <= 0.0 || a.lp <= 0.0 || a.lm <= 0.0) {
    r.r_eps = kInf;
  } else {
    double cp, cm;
    if (a.x < 1e-15) {
      cp = cm = 0.5;
    } else {
      cp = 0.5 - 0.5 * a.k / a.x;
      cm = 0.5 + 0.5 * a.k / a.x;
    }
    r.r_eps = std::log(a.em) - cp * std::log(a.lp) - cm * std::log(a.lm);
  }
  if (a.lm <= 0.0 || a.y >= 0.5) {
    r.r_q = kInf;
  } else {
    r.r_q = ratio_log_u(a.x, a.u) - ratio_log_half(a.y);
  }
  return r;
}

Residuals residuals_power_form(const WernerSpec& spec, double eps, double q) {
  const Aux a = aux_of(spec, eps, q);
  Residuals r;
  double cp, cm;
  if (a.x < 1e-15) {
    cp = cm = 0.5;
  } else {
    cp = 0.5 - 0.5 * a.k / a.x;
    cm = 0.5 + 0.5 * a.k / a.x;
  }
  r.r_eps = a.em - std::pow(a.lp, cp) * std::pow(a.lm, cm);
  r.r_q = std::pow(a.lm / a.lp, a.y) -
          std::pow((0.5 - a.y) / (0.5 + a.y), 2.0 * a.x);
  return r;
}

double f_rho(const WernerSpec& spec, double rho) {
  if (rho < 0.0) throw std::domain_error("f_rho: rho must be >= 0");
  const double y0sq = spec.m0 * (1.0 - spec.m0);
  const double y0 = std::sqrt(y0sq);
  const double t1 = y0sq * (1.0 - std::pow(rho, spec.m0) * (spec.dim_v - 1) / (1.0 - spec.m0));
  const double b = 0.5 - std::pow(rho, y0) * (0.5 + y0);
  return -rho + t1 - b * b;
}

double f_rho_slope_limit(const WernerSpec& spec, double rho) {
  const double dm = spec.m0 - 0.5;
  return (1.0 / std::sqrt(rho)) *
         (-0.25 * (spec.dim_v - 1) * std::pow(rho, dm) + 0.5);
}

double f_rho_curvature_limit(const WernerSpec& spec, double rho) {
  const double dm = spec.m0 - 0.5;
  return std::pow(rho, -1.5) *
         (-0.25 * (spec.dim_v - 1) * (dm - 0.5) * std::pow(rho, dm) - 0.25);
}

std::optional<RhoApprox> solve_approx(const WernerSpec& spec) {
  if (spec.dim_v <= 1) throw std::invalid_argument("solve_approx requires d_v > 1");
  if (spec.m0 <= 0.0 || spec.m0 >= 1.0) return std::nullopt;
  const double rho_max = spec.m0 * spec.m1 * spec.dim_v;
  const double y0 = std::sqrt(spec.m0 * (1.0 - spec.m0));

  // log-spaced samples, with rho = 0 prepended (f(0) = Y0^2 - 1/4 <= 0)
  std::vector<double> rs;
  rs.push_back(0.0);
  const int n = 64;
  const double lo = std::log(1e-12), hi = std::log(rho_max);
  for (int i = 0; i < n; ++i) rs.push_back(std::exp(lo + (hi - lo) * i / (n - 1)));

  double prev_r = rs[0];
  double prev_f = f_rho(spec, prev_r);
  double blo = -1.0, bhi = -1.0, flo = 0.0;
  for (std::size_t i = 1; i < rs.size(); ++i) {
    const double f = f_rho(spec, rs[i]);
    if (prev_f == 0.0 && prev_r > 0.0) {
      blo = bhi = prev_r;
      break;
    }
    if (prev_f * f < 0.0) {
      blo = prev_r;
      bhi = rs[i];
      flo = prev_f;
      break;
    }
    prev_r = rs[i];
    prev_f = f;
  }
  if (blo < 0.0) return std::nullopt;

  double root;
  if (blo == bhi) {
    root = blo;
  } else {
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (blo + bhi);
      const double fm = f_rho(spec, mid);
      if (fm == 0.0) {
        blo = bhi = mid;
        break;
      }
      if (flo * fm < 0.0) {
        bhi = mid;
      } else {
        blo = mid;
        flo = fm;
      }
      if (bhi - blo < 1e-18 + 1e-16 * bhi) break;
    }
    root = 0.5 * (blo + bhi);
  }

  RhoApprox out;
  out.rho = root;
  out.f_residual = std::abs(f_rho(spec, root));
  out.eps = std::pow(root, spec.m0) * spec.dim_v / (1.0 - spec.m0);
  out.q = (0.5 - std::pow(root, y0) * (0.5 + y0)) / std::sqrt(double(spec.dim_v));
  const Aux a = aux_of(spec, out.eps, out.q);
  out.du = std::abs(a.u - 1.0);
  out.dk = std::abs(a.k - (spec.m0 - 0.5));
  out.dx = std::abs(a.x - 0.5);
  out.dy = std::abs(a.y - y0);
  return out;
}

namespace {

struct NewtonResult {
  double eps = 0.0, q = 0.0;
  Residuals res;
  bool converged = false;
  int iterations = 0;
};

double res_norm(const Residuals& r) {
  return std::max(std::abs(r.r_eps), std::abs(r.r_q));
}

void clamp_into_domain(const WernerSpec& spec, double& eps, double& q) {
  const double ehi = eps_upper(spec) - 1e-10;
  eps = std::clamp(eps, 1e-300, ehi);
  const double qm = werner_core::q_max(spec, eps) * (1.0 - 1e-12);
  q = std::clamp(q, 1e-14, std::max(1e-14, qm));
}

NewtonResult newton_from(const WernerSpec& spec, double eps, double q, int max_iter) {
  NewtonResult nr;
  clamp_into_domain(spec, eps, q);
  Residuals r = residuals(spec, eps, q);
  double rn = res_norm(r);
  for (int it = 0; it < max_iter; ++it) {
    if (!std::isfinite(rn)) break;
    if (rn <= 1e-11) {
      nr.converged = true;
      break;
    }
    // finite-difference Jacobian (forward, re-clamped into the domain)
    const double he = std::max(1e-9 * std::abs(eps), 1e-13);
    const double hq = std::max(1e-9 * std::abs(q), 1e-13);
    double ee = eps + he, qe = q;
    clamp_into_domain(spec, ee, qe);
    Residuals re = residuals(spec, ee, q);
    double eq2 = eps, qq2 = q + hq;
    clamp_into_domain(spec, eq2, qq2);
    Residuals rq2 = residuals(spec, eps, qq2);
    const double j11 = (re.r_eps - r.r_eps) / (ee - eps);
    const double j21 = (re.r_q - r.r_q) / (ee - eps);
    const double j12 = (rq2.r_eps - r.r_eps) / (qq2 - q);
    const double j22 = (rq2.r_q - r.r_q) / (qq2 - q);
    const double det = j11 * j22 - j12 * j21;
    if (!std::isfinite(det) || std::abs(det) < 1e-300) break;
    const double de = (-r.r_eps * j22 + r.r_q * j12) / det;
    const double dq = (-j11 * r.r_q + j21 * r.r_eps) / det;

    double t = 1.0;
    bool accepted = false;
    for (int h = 0; h < 30; ++h) {
      double en = eps + t * de, qn = q + t * dq;
      clamp_into_domain(spec, en, qn);
      const Residuals rn2 = residuals(spec, en, qn);
      const double nn = res_norm(rn2);
      if (std::isfinite(nn) && nn < rn) {
        eps = en;
        q = qn;
        r = rn2;
        rn = nn;
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    nr.iterations = it + 1;
    if (!accepted) break;
  }
  if (rn <= 1e-11) nr.converged = true;
  nr.eps = eps;
  nr.q = q;
  nr.res = r;
  return nr;
}

}  // namespace

SolveOutcome solve_exact(const WernerSpec& spec, const SolveOptions& opts) {
  if (spec.dim_v <= 1) {
    throw std::invalid_argument("solve_exact requires d_v > 1 (d_v = 1 is one-dimensional)");
  }
  SolveOutcome out;
  out.seed = solve_approx(spec);

  const double q_pure = std::sqrt(spec.m0 * spec.m1);
  std::vector<NewtonResult> found;
  auto add_root = [&](const NewtonResult& nr) {
    if (!nr.converged) return;
    if (nr.q <= opts.q_min) return;  // trivial-family root, regulator ~ 0
    for (const NewtonResult& f : found) {
      if (std::abs(f.eps - nr.eps) < 1e-7 && std::abs(f.q - nr.q) < 1e-7) return;
    }
    found.push_back(nr);
  };

  if (out.seed) {
    add_root(newton_from(spec, out.seed->eps, out.seed->q, opts.max_iter));
  }

  Rng rng(opts.seed);
  for (int s = 0; s < opts.multistart; ++s) {
    const double eps0 = std::exp(rng.uniform(std::log(1e-6), std::log(eps_upper(spec) * 0.9)));
    const double q0 = rng.uniform(0.05, 0.98) * werner_core::q_max(spec, eps0);
    add_root(newton_from(spec, eps0, q0, opts.max_iter));
  }

  // near-pure: the converged root closest to the pure corner (eps, q) = (0, q_pure)
  int best = -1;
  double best_d = kInf;
  for (std::size_t i = 0; i < found.size(); ++i) {
    const double d = std::abs(found[i].eps) + std::abs(found[i].q - q_pure);
    if (found[i].eps < 0.5 && found[i].q > 0.5 * q_pure && d < best_d) {
      best = static_cast<int>(i);
      best_d = d;
    }
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    EqSystemRoot root;
    root.eps = found[i].eps;
    root.q = found[i].q;
    root.res = found[i].res;
    root.converged = found[i].converged;
    root.iterations = found[i].iterations;
    root.kind = RootKind::Physical;
    if (static_cast<int>(i) == best) {
      out.near_pure = root;
      out.near_pure_found = true;
    } else {
      out.other_roots.push_back(root);
    }
  }
  return out;
}

}  // namespace bellmix::eq_solver

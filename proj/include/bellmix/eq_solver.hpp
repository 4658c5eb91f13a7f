#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bellmix/werner_core.hpp"

namespace bellmix::eq_solver {

using werner_core::WernerSpec;

struct Residuals {
  double r_eps = 0.0;  // ln(eps m1) - sum_s (1/2 - s k/(2X)) ln(u/2 + sX)
  double r_q = 0.0;    // (1/(2X)) ln((u/2-X)/(u/2+X)) - (1/Y) ln((1/2-Y)/(1/2+Y))
};

// Log-form stationarity residuals. Domain violations (non-positive log
// arguments) come back as infinities.
Residuals residuals(const WernerSpec& spec, double eps, double q);

// Equivalent power form; exactly zero at the trivial root (eps, q) = (1, 0).
Residuals residuals_power_form(const WernerSpec& spec, double eps, double q);

// rho = m0 m1 eta - q^2 d_v = (u/2)^2 - X^2.
double rho_of(const WernerSpec& spec, double eps, double q);

enum class RootKind { Trivial, Physical, Approximate };

struct EqSystemRoot {
  double eps = 0.0;
  double q = 0.0;
  Residuals res;
  RootKind kind = RootKind::Physical;
  bool converged = false;
  int iterations = 0;
};

struct RhoApprox {
  double rho = 0.0;
  double eps = 0.0;
  double q = 0.0;
  double f_residual = 0.0;
  // |u - u0|, |k - k0|, |X - X0|, |Y - Y0| at the approximate root
  double du = 0.0, dk = 0.0, dx = 0.0, dy = 0.0;
};

struct SolveOptions {
  double q_min = 1e-8;   // roots with q below this count as trivial
  int max_iter = 200;
  int multistart = 8;
  std::uint64_t seed = 12345;
};

struct SolveOutcome {
  std::optional<EqSystemRoot> near_pure;   // the root adjacent to the pure-min corner
  std::vector<EqSystemRoot> other_roots;   // any distinct roots from multi-start
  std::optional<RhoApprox> seed;           // Appendix-style approximate root, if it exists
  bool near_pure_found = false;
};

// Damped 2-D Newton on the log-form residuals, seeded from the approximate
// root (multi-start fallback when no approximate root exists). d_v > 1 only.
SolveOutcome solve_exact(const WernerSpec& spec, const SolveOptions& opts = {});

// f(rho) whose zeros give the approximate root, plus the small-rho limit
// forms of its first two derivatives (valid for small |m0 - 1/2|).
double f_rho(const WernerSpec& spec, double rho);
double f_rho_slope_limit(const WernerSpec& spec, double rho);
double f_rho_curvature_limit(const WernerSpec& spec, double rho);

// Bracketed bisection on f over log-spaced rho samples; nullopt when no sign
// change exists (d_v = 3 with m0 < 1/2).
std::optional<RhoApprox> solve_approx(const WernerSpec& spec);

}  // namespace bellmix::eq_solver

#pragma once

namespace bellmix::tol {

// Single source for the float-equality tolerances used across the library.
inline constexpr double kAlgebra = 1e-13;        // Bell-algebra float comparisons
inline constexpr double kHermitian = 1e-12;      // accepted Hermiticity residual
inline constexpr double kSupportEig = 1e-12;     // eigenvalues below this count as zero
inline constexpr double kLogRoundTrip = 1e-10;   // log/exp round trips
inline constexpr double kStationarity = 1e-10;   // stationary-equation residuals
inline constexpr double kInsensitivity = 1e-8;   // max alpha-deviation declared insensitive

// Default generic tolerance (1e-10), overridable through the BELLMIX_TOL
// environment variable. Used by the CLI verify suites where no sharper
// module tolerance applies.
double global_default();

}  // namespace bellmix::tol

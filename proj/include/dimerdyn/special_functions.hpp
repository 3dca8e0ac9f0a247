// special_functions.hpp — scalar kernels: Gamma, Re psi on the imaginary
// axis, and a guarded hyperbolic cotangent
#pragma once

namespace dimerdyn {

// Termination control for the digamma series.
struct SeriesControl {
  double tolerance = 1e-10;     // absolute truncation-error bound, in (0, 1e-6]
  long max_terms = 2'000'000;   // at least 10^4
};

// Gamma function for x > 0 (Lanczos approximation, <= 1e-10 relative error).
double gamma_real(double x);

// Re psi(i*y) for y > 0, via the convergent series
//   Re psi(i*y) = -gamma_E + y^2 * sum_{k>=1} 1/(k*(k^2+y^2)),
// summed with compensated accumulation and terminated by the analytic tail
// bound y^2/(2N^2).  For large y an asymptotic expansion in 1/y^2 is used
// once its remainder is below ctl.tolerance.
double re_digamma_imaginary(double y, const SeriesControl& ctl = {});

// coth(x) for x > 0; switches to 1/x + x/3 below x = 1e-4.
double coth_guarded(double x);

}  // namespace dimerdyn

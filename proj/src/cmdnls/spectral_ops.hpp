#ifndef CMDNLS_SPECTRAL_OPS_HPP
#define CMDNLS_SPECTRAL_OPS_HPP

#include "cmdnls/field.hpp"

namespace cmdnls {

// Fourier multiplier conventions, fixed project-wide:
//   - sgn(0) = 0 and the Nyquist mode is killed by the Hilbert transform and
//     the Szego projection, so H stays skew-adjoint and real-preserving.
//   - derivative() zeroes the Nyquist mode (i*xi has no real-symmetric partner
//     there); abs_deriv() keeps |xi| at Nyquist, so |D| = H d/dx only on
//     Nyquist-free fields.
// Results come back in the representation of the input.

/// Hilbert transform, multiplier -i sgn(xi).
Field hilbert(const Field& f);

/// Szego projection onto strictly positive wavenumbers.
Field szego_project(const Field& f);

/// |D| = F^-1 |xi| F.
Field abs_deriv(const Field& f);

/// D+ = -i d/dx Szego: multiplier xi * 1_{xi > 0}.
Field dplus(const Field& f);

/// d/dx, multiplier i xi.
Field derivative(const Field& f);

/// The cutoff ramp chi: 1 on |s| <= 1, cos^2(pi(|s|-1)/2) on 1 < |s| < 2,
/// 0 on |s| >= 2. Satisfies |chi'|^2 <= pi^2 * chi.
double chi_ramp(double s);
double chi_ramp_deriv(double s);

/// chi_R(x) = chi(x/R) sampled on the grid. Warns when the support [-2R, 2R]
/// does not fit inside the domain.
WithWarning<Field> cutoff_chi(const Grid1D& grid, double R);
/// phi_R = 1 - chi_R.
WithWarning<Field> cutoff_phi(const Grid1D& grid, double R);

}  // namespace cmdnls

#endif

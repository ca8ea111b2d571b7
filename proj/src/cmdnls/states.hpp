#ifndef CMDNLS_STATES_HPP
#define CMDNLS_STATES_HPP

#include <array>

#include "cmdnls/field.hpp"

namespace cmdnls {

/// Symmetry-group coordinates (scale, phase, translation) acting as
/// [f]_g(x) = e^{i gamma} lambda^{-1/2} f((x - x0)/lambda).
struct ModulationParams {
    double lambda = 1.0;
    double gamma = 0.0;  // stored canonically in [0, 2pi)
    double x = 0.0;

    ModulationParams() = default;
    ModulationParams(double lam, double gam, double x0);

    ModulationParams inverse() const;  // [f]_g^{-1} = [f]_{g.inverse()}
    static ModulationParams identity() { return {}; }
};

/// Group law: modulate(modulate(f, inner), outer) == modulate(f, compose).
ModulationParams compose_params(const ModulationParams& outer, const ModulationParams& inner);
/// g_{i,j} with compose(g_j, g_{i,j}) == g_i.
ModulationParams relative_params(const ModulationParams& gi, const ModulationParams& gj);
/// Distance on the group: |log(l1/l2)| + circle distance of phases + |x1-x2|.
double params_distance(const ModulationParams& a, const ModulationParams& b);
/// Circle distance of phases in [0, pi].
double phase_distance(double a, double b);

// Closed-form profiles (pointwise, not grid-sampled).
double q_profile(double y);                    // sqrt(2)/sqrt(1+y^2)
double dq_profile(double y);                   // Q'
double lambda_q_profile(double y);             // Q/2 + y Q'
complexd r_profile(double y);                  // sqrt(2)/(y + i)

/// Gauged ground state Q and ungauged ground state R sampled on the grid.
Field ground_state_Q(const Grid1D& grid);
Field ground_state_R(const Grid1D& grid);

/// [f]_g via trigonometric (spectral) interpolation. Rejects scales outside
/// [dx, L]; warns when the rescaled support leaks outside the domain.
WithWarning<Field> modulate(const Field& f, const ModulationParams& g);
/// [f]_g^{-1}; demodulate(modulate(f, g), g) == f up to interpolation error.
WithWarning<Field> demodulate(const Field& f, const ModulationParams& g);

/// Galilean boost e^{i c x - i c^2 t} f(x - 2 c t). The velocity is snapped to
/// the wavenumber ladder (returned in .note when it moved) so the phase factor
/// is exactly periodic; c = 0 returns f unchanged.
WithWarning<Field> galilean(const Field& f, double c, double t);
double snap_velocity(const Grid1D& grid, double c);

/// Gauge transform G(u) = u exp(-(i/2) int_{-L}^x |u|^2), trapezoid cumulative
/// integral from the left edge. The physical gauged variable is -G(u), so that
/// -G(R) = Q; G(R) = -Q. Pointwise modulus is preserved exactly.
Field gauge_transform(const Field& u);
/// G^{-1}(v) = v exp(+(i/2) int_{-L}^x |v|^2); exact inverse on the grid.
Field gauge_inverse(const Field& v);
/// Ungauged -> gauged companion state: v = -G(u) (maps R to Q).
Field to_gauged(const Field& u);
/// Gauged -> ungauged: u = -G^{-1}(v) (maps Q to R).
Field to_ungauged(const Field& v);
/// Phase dropped by starting the cumulative integral at -L instead of -inf
/// is <= mass(|u|^2 tail); reported for diagnostics.
double gauge_tail_phase_bound(const Field& u);

/// Pseudo-conformal transform of a snapshot taken at time t (t != 0):
/// returns |t'|^{-1/2} e^{i x^2 / (4 t')} f(x/|t'|) at the mapped time
/// t' = -1/t. An involution: applying it twice returns the original snapshot.
struct ConformalResult {
    Field field;
    double new_time;
};
ConformalResult pseudo_conformal(const Field& f, double t);

/// Explicit blow-up profile S(t, x) = t^{-1/2} e^{i x^2/(4t)} R(x/t), t > 0.
/// Rejects under-resolved chirps (local frequency L/(2t) above xi_max) with a
/// hint for the required sample count.
Field explicit_blowup_S(double t, const Grid1D& grid);
bool blowup_S_resolved(double t, const Grid1D& grid);

/// Generators of phase, scaling and translation at Q: (iQ, LambdaQ, dxQ),
/// sampled from closed forms.
struct KernelElements {
    Field iQ, LambdaQ, dxQ;
};
KernelElements kernel_elements(const Grid1D& grid);

/// Truncated kernel elements Z1 = LambdaQ*chi, Z2 = iQ*chi, Z3 = dxQ*chi with
/// the unit-radius cutoff.
struct TruncatedKernels {
    Field Z1, Z2, Z3;
};
TruncatedKernels truncated_kernels(const Grid1D& grid);

}  // namespace cmdnls

#endif

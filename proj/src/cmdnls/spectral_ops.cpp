#include "cmdnls/spectral_ops.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace cmdnls {

namespace {

Field apply_multiplier(const Field& f, const std::function<complexd(double, bool)>& mult) {
    const Rep rep_in = f.rep();
    Field spec = f.to_spectral();
    const Grid1D& g = spec.grid();
    for (int j = 0; j < g.n; ++j)
        spec[j] *= mult(g.xi(j), j == g.nyquist_bin());
    return rep_in == Rep::Physical ? spec.to_physical() : spec;
}

}  // namespace

Field hilbert(const Field& f) {
    return apply_multiplier(f, [](double xi, bool nyq) -> complexd {
        if (nyq || xi == 0.0) return 0.0;
        return complexd(0.0, xi > 0 ? -1.0 : 1.0);
    });
}

Field szego_project(const Field& f) {
    return apply_multiplier(f, [](double xi, bool nyq) -> complexd {
        return (!nyq && xi > 0.0) ? 1.0 : 0.0;
    });
}

Field abs_deriv(const Field& f) {
    return apply_multiplier(f, [](double xi, bool) -> complexd { return std::abs(xi); });
}

Field dplus(const Field& f) {
    return apply_multiplier(f, [](double xi, bool nyq) -> complexd {
        return (!nyq && xi > 0.0) ? xi : 0.0;
    });
}

Field derivative(const Field& f) {
    return apply_multiplier(f, [](double xi, bool nyq) -> complexd {
        if (nyq) return 0.0;
        return complexd(0.0, xi);
    });
}

double chi_ramp(double s) {
    const double a = std::fabs(s);
    if (a <= 1.0) return 1.0;
    if (a >= 2.0) return 0.0;
    const double c = std::cos(M_PI * (a - 1.0) / 2.0);
    return c * c;
}

double chi_ramp_deriv(double s) {
    const double a = std::fabs(s);
    if (a <= 1.0 || a >= 2.0) return 0.0;
    const double th = M_PI * (a - 1.0) / 2.0;
    double d = -M_PI * std::cos(th) * std::sin(th);
    return s < 0 ? -d : d;
}

WithWarning<Field> cutoff_chi(const Grid1D& grid, double R) {
    if (!(R > 0.0)) throw std::invalid_argument("cutoff_chi: R must be positive");
    WithWarning<Field> out{Field(grid, Rep::Physical), false, {}};
    for (int i = 0; i < grid.n; ++i) out.value[i] = chi_ramp(grid.x(i) / R);
    if (2.0 * R >= grid.half_width) {
        out.warning = true;
        out.note = "cutoff support [-2R, 2R] exceeds the domain";
    }
    return out;
}

WithWarning<Field> cutoff_phi(const Grid1D& grid, double R) {
    auto out = cutoff_chi(grid, R);
    for (int i = 0; i < grid.n; ++i) out.value[i] = 1.0 - out.value[i].real();
    return out;
}

}  // namespace cmdnls

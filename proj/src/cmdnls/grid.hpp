#ifndef CMDNLS_GRID_HPP
#define CMDNLS_GRID_HPP

#include <cmath>
#include <stdexcept>

namespace cmdnls {

/// Uniform periodic grid on [-L, L) with n samples (n a power of two, n >= 8).
/// Wavenumbers follow FFT index order: xi_k = pi*k/L for k = 0..n/2-1, then
/// k = -n/2..-1. The k = -n/2 entry is the unpaired Nyquist mode.
struct Grid1D {
    int n = 0;
    double half_width = 0.0;  // L

    Grid1D() = default;
    Grid1D(int n_, double L_) : n(n_), half_width(L_) {
        if (n < 8 || (n & (n - 1)) != 0)
            throw std::invalid_argument("Grid1D: n must be a power of two, n >= 8");
        if (!(half_width > 0.0))
            throw std::invalid_argument("Grid1D: half_width must be positive");
    }

    double dx() const { return 2.0 * half_width / n; }
    double x(int i) const { return -half_width + dx() * i; }

    /// Signed integer mode number for FFT bin j.
    int mode(int j) const { return j < n / 2 ? j : j - n; }
    /// Wavenumber of FFT bin j.
    double xi(int j) const { return M_PI * mode(j) / half_width; }
    double xi_max() const { return M_PI * (n / 2) / half_width; }
    int nyquist_bin() const { return n / 2; }

    bool operator==(const Grid1D& o) const { return n == o.n && half_width == o.half_width; }
    bool operator!=(const Grid1D& o) const { return !(*this == o); }
};

}  // namespace cmdnls

#endif

#ifndef CMDNLS_FIELD_HPP
#define CMDNLS_FIELD_HPP

#include <complex>
#include <string>
#include <vector>

#include "cmdnls/grid.hpp"

namespace cmdnls {

using complexd = std::complex<double>;
using cvec = std::vector<complexd>;

enum class Rep { Physical, Spectral };
enum class Gauge { Ungauged, Gauged };

/// Complex field on a Grid1D, in either physical samples or FFT coefficients.
/// Conversions are pure: they return a fresh Field. Discrete L2 norms carry
/// the dx quadrature weight so grid sums approximate line integrals.
class Field {
public:
    Field() = default;
    Field(Grid1D grid, Rep rep) : grid_(grid), rep_(rep), data_(grid.n, complexd{0.0, 0.0}) {}
    Field(Grid1D grid, Rep rep, cvec data);

    const Grid1D& grid() const { return grid_; }
    Rep rep() const { return rep_; }
    int size() const { return grid_.n; }

    const cvec& data() const { return data_; }
    cvec& data() { return data_; }
    complexd operator[](int i) const { return data_[i]; }
    complexd& operator[](int i) { return data_[i]; }

    Field to_physical() const;
    Field to_spectral() const;

    /// sqrt(dx * sum |f_i|^2) in physical rep (Plancherel-consistent in spectral rep).
    double l2_norm() const;
    double max_abs() const;
    bool all_finite() const;

    Field& operator+=(const Field& o);
    Field& operator-=(const Field& o);
    Field& operator*=(complexd s);

private:
    Grid1D grid_;
    Rep rep_ = Rep::Physical;
    cvec data_;
};

Field operator+(Field a, const Field& b);
Field operator-(Field a, const Field& b);
Field operator*(complexd s, Field f);

/// Real L2 pairing (f, g)_r = dx * sum Re(conj(f_i) g_i), physical rep.
double inner_real(const Field& f, const Field& g);

void require_same_grid(const Field& a, const Field& b, const char* who);

/// A result plus a non-fatal diagnostic raised by the producing operation.
template <typename T>
struct WithWarning {
    T value;
    bool warning = false;
    std::string note;
};

}  // namespace cmdnls

#endif

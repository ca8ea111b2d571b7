#include "cmdnls/field.hpp"

#include <cmath>
#include <stdexcept>

#include "cmdnls/fft.hpp"

namespace cmdnls {

Field::Field(Grid1D grid, Rep rep, cvec data) : grid_(grid), rep_(rep), data_(std::move(data)) {
    if (static_cast<int>(data_.size()) != grid_.n)
        throw std::invalid_argument("Field: sample count does not match grid");
}

Field Field::to_physical() const {
    if (rep_ == Rep::Physical) return *this;
    Field out(grid_, Rep::Physical);
    fft::inverse(data_, out.data());
    return out;
}

Field Field::to_spectral() const {
    if (rep_ == Rep::Spectral) return *this;
    Field out(grid_, Rep::Spectral);
    fft::forward(data_, out.data());
    return out;
}

double Field::l2_norm() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    // Plancherel: dx * sum |f|^2 = (dx/n) * sum |fhat|^2
    if (rep_ == Rep::Spectral) s /= grid_.n;
    return std::sqrt(s * grid_.dx());
}

double Field::max_abs() const {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
}

bool Field::all_finite() const {
    for (const auto& z : data_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

Field& Field::operator+=(const Field& o) {
    require_same_grid(*this, o, "Field::operator+=");
    if (rep_ != o.rep_) throw std::invalid_argument("Field: representation mismatch");
    for (int i = 0; i < size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Field& Field::operator-=(const Field& o) {
    require_same_grid(*this, o, "Field::operator-=");
    if (rep_ != o.rep_) throw std::invalid_argument("Field: representation mismatch");
    for (int i = 0; i < size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Field& Field::operator*=(complexd s) {
    for (auto& z : data_) z *= s;
    return *this;
}

Field operator+(Field a, const Field& b) { return a += b; }
Field operator-(Field a, const Field& b) { return a -= b; }
Field operator*(complexd s, Field f) { return f *= s; }

double inner_real(const Field& f, const Field& g) {
    require_same_grid(f, g, "inner_real");
    const Field fp = f.to_physical();
    const Field gp = g.to_physical();
    double s = 0.0;
    for (int i = 0; i < fp.size(); ++i)
        s += fp[i].real() * gp[i].real() + fp[i].imag() * gp[i].imag();
    return s * f.grid().dx();
}

void require_same_grid(const Field& a, const Field& b, const char* who) {
    if (a.grid() != b.grid())
        throw std::invalid_argument(std::string(who) + ": grids differ");
}

}  // namespace cmdnls

#ifndef CMDNLS_FFT_HPP
#define CMDNLS_FFT_HPP

#include <complex>
#include <vector>

namespace cmdnls::fft {

using cvec = std::vector<std::complex<double>>;

/// Forward DFT, no prefactor: out_k = sum_j in_j e^{-2pi i jk/n}.
void forward(const cvec& in, cvec& out);
/// Inverse DFT with 1/n: round-trips forward() to machine epsilon.
void inverse(const cvec& in, cvec& out);

cvec forward(const cvec& in);
cvec inverse(const cvec& in);

/// Evaluates the trigonometric interpolant of spectral coefficients
/// (FFT order, length n, Nyquist bin ignored) at the points
/// p_j = a + j*b, j = 0..m-1, for a grid of half-width L.
/// Bluestein chirp-z transform; cost O((n+m) log(n+m)).
cvec resample_affine(const cvec& spec, double L, double a, double b, int m);

}  // namespace cmdnls::fft

#endif

#include "cmdnls/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace cmdnls::fft {

namespace {

// Plan cache keyed by size. Plans are created with FFTW_UNALIGNED so they can
// execute on any caller buffer; creation is serialized (FFTW planning is not
// thread-safe), execution via fftw_execute_dft is.
class Plans {
public:
    static Plans& instance() {
        static Plans p;
        return p;
    }

    fftw_plan get(int n, int sign) {
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_pair(n, sign);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        cvec a(n), b(n);
        fftw_plan p = fftw_plan_dft_1d(
            n, reinterpret_cast<fftw_complex*>(a.data()),
            reinterpret_cast<fftw_complex*>(b.data()), sign,
            FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!p) throw std::runtime_error("fftw_plan_dft_1d failed");
        cache_[key] = p;
        return p;
    }

private:
    std::mutex mu_;
    std::map<std::pair<int, int>, fftw_plan> cache_;
};

void execute(const cvec& in, cvec& out, int sign) {
    const int n = static_cast<int>(in.size());
    out.resize(n);
    fftw_plan p = Plans::instance().get(n, sign);
    // fftw_execute_dft wants non-const in; the transform does not write to it.
    fftw_execute_dft(p,
                     reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.data())),
                     reinterpret_cast<fftw_complex*>(out.data()));
}

}  // namespace

void forward(const cvec& in, cvec& out) { execute(in, out, FFTW_FORWARD); }

void inverse(const cvec& in, cvec& out) {
    execute(in, out, FFTW_BACKWARD);
    const double s = 1.0 / static_cast<double>(in.size());
    for (auto& z : out) z *= s;
}

cvec forward(const cvec& in) {
    cvec out;
    forward(in, out);
    return out;
}

cvec inverse(const cvec& in) {
    cvec out;
    inverse(in, out);
    return out;
}

cvec resample_affine(const cvec& spec, double L, double a, double b, int m) {
    const int n = static_cast<int>(spec.size());
    // s_j = (1/n) sum_k c_k exp(i xi_k (a + j b)), k = -n/2+1 .. n/2-1.
    // With alpha = pi*b/L this is sum_k d_k w^{kj}, w = e^{i alpha}, computed
    // by Bluestein: kj = (k^2 + j^2 - (j-k)^2)/2. Phases alpha*k^2/2 are large
    // for extreme zooms, so reduce them in long double.
    const long double alpha = static_cast<long double>(M_PI) * b / L;
    const long double twopi = 2.0L * static_cast<long double>(M_PI);
    auto chirp = [&](long double q) -> std::complex<double> {
        long double ph = std::fmod(alpha * q / 2.0L, twopi);
        return {static_cast<double>(std::cos(ph)), static_cast<double>(std::sin(ph))};
    };

    int nfft = 1;
    while (nfft < n + m) nfft <<= 1;

    cvec A(nfft, 0.0), B(nfft, 0.0);
    for (int j = 0; j < n; ++j) {
        int k = j < n / 2 ? j : j - n;
        if (k == -n / 2) continue;  // resampling treats fields as Nyquist-free
        double xik = M_PI * k / L;
        std::complex<double> d = spec[j] / static_cast<double>(n) *
                                 std::polar(1.0, xik * a);
        long double kk = static_cast<long double>(k) * k;
        A[k >= 0 ? k : k + nfft] = d * chirp(kk);
    }
    // kernel w^{-q^2/2} for q = j - k, j in [0, m), k in (-n/2, n/2)
    for (int q = -(n / 2 - 1); q <= m + n / 2 - 2; ++q) {
        long double qq = static_cast<long double>(q) * q;
        B[(q % nfft + nfft) % nfft] = std::conj(chirp(qq));
    }

    cvec Ah = forward(A), Bh = forward(B);
    for (int i = 0; i < nfft; ++i) Ah[i] *= Bh[i];
    cvec conv = inverse(Ah);

    cvec out(m);
    for (int j = 0; j < m; ++j) {
        long double jj = static_cast<long double>(j) * j;
        out[j] = conv[j] * chirp(jj);
    }
    return out;
}

}  // namespace cmdnls::fft

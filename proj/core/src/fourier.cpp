#include "nlkg/fourier.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>
#include <stdexcept>

namespace nlkg {

namespace {
// FFTW planning is not thread-safe; execution with per-instance plans is.
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

RealFft::RealFft(std::size_t n) : n_(n) {
    if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft size must be a power of two");
    real_buf_ = fftw_alloc_real(n);
    cplx_buf_ = fftw_alloc_complex(n / 2 + 1);
    std::lock_guard<std::mutex> lock(plan_mutex());
    plan_fwd_ = fftw_plan_dft_r2c_1d(static_cast<int>(n), real_buf_,
                                     static_cast<fftw_complex*>(cplx_buf_), FFTW_ESTIMATE);
    plan_inv_ = fftw_plan_dft_c2r_1d(static_cast<int>(n),
                                     static_cast<fftw_complex*>(cplx_buf_), real_buf_,
                                     FFTW_ESTIMATE);
}

RealFft::~RealFft() {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_inv_));
    fftw_free(real_buf_);
    fftw_free(cplx_buf_);
}

void RealFft::forward(const double* in, std::complex<double>* out) const {
    std::memcpy(real_buf_, in, n_ * sizeof(double));
    fftw_execute(static_cast<fftw_plan>(plan_fwd_));
    std::memcpy(out, cplx_buf_, (n_ / 2 + 1) * sizeof(std::complex<double>));
}

void RealFft::inverse(const std::complex<double>* in, double* out) const {
    std::memcpy(cplx_buf_, in, (n_ / 2 + 1) * sizeof(std::complex<double>));
    fftw_execute(static_cast<fftw_plan>(plan_inv_));
    const double scale = 1.0 / static_cast<double>(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = real_buf_[i] * scale;
}

void RealFft::derivative(const std::vector<double>& in, std::vector<double>& out,
                         double period) const {
    const std::size_t ns = spectrum_size();
    std::vector<std::complex<double>> spec(ns);
    forward(in.data(), spec.data());
    const double dk = 2.0 * 3.14159265358979323846 / period;
    for (std::size_t i = 0; i < ns; ++i) {
        const double k = dk * static_cast<double>(i);
        spec[i] *= std::complex<double>(0.0, k);
    }
    // Nyquist mode of an even-size transform has no well-defined odd derivative.
    spec[ns - 1] = 0.0;
    out.resize(n_);
    inverse(spec.data(), out.data());
}

}  // namespace nlkg

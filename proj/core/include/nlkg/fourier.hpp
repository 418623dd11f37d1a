#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace nlkg {

/// Real 1D FFT of fixed size (power of two), forward r2c and normalized
/// inverse c2r. Each instance owns its plans and scratch buffers; distinct
/// instances may be used from different threads.
class RealFft {
  public:
    explicit RealFft(std::size_t n);
    ~RealFft();

    RealFft(const RealFft&) = delete;
    RealFft& operator=(const RealFft&) = delete;

    std::size_t size() const { return n_; }
    std::size_t spectrum_size() const { return n_ / 2 + 1; }

    void forward(const double* in, std::complex<double>* out) const;
    void inverse(const std::complex<double>* in, double* out) const;

    /// Spectral derivative d/dx on a periodic domain of length `period`.
    void derivative(const std::vector<double>& in, std::vector<double>& out,
                    double period) const;

  private:
    std::size_t n_;
    void* plan_fwd_;
    void* plan_inv_;
    double* real_buf_;
    void* cplx_buf_;
};

}  // namespace nlkg

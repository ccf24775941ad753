#include "fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <stdexcept>

namespace ringlab {

RealFftPlan::RealFftPlan(std::size_t n) : n_(n) {
  if (n_ < 2) throw std::invalid_argument("RealFftPlan: size must be >= 2");
  in_ = fftw_alloc_real(n_);
  fftw_complex* out = fftw_alloc_complex(n_ / 2 + 1);
  out_ = out;
  if (in_ == nullptr || out == nullptr) {
    fftw_free(in_);
    fftw_free(out);
    throw std::bad_alloc();
  }
  plan_ = fftw_plan_dft_r2c_1d(static_cast<int>(n_), in_, out, FFTW_ESTIMATE);
  if (plan_ == nullptr) {
    fftw_free(in_);
    fftw_free(out);
    throw std::runtime_error("RealFftPlan: planning failed");
  }
}

RealFftPlan::~RealFftPlan() {
  fftw_destroy_plan(static_cast<fftw_plan>(plan_));
  fftw_free(in_);
  fftw_free(static_cast<fftw_complex*>(out_));
}

void RealFftPlan::execute(std::span<const double> in, std::span<std::complex<double>> out) {
  if (in.size() != n_ || out.size() != bins())
    throw std::invalid_argument("RealFftPlan::execute: size mismatch");
  std::memcpy(in_, in.data(), n_ * sizeof(double));
  fftw_execute(static_cast<fftw_plan>(plan_));
  std::memcpy(out.data(), out_, bins() * sizeof(std::complex<double>));
}

std::vector<std::complex<double>> analytic_signal(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n < 2) throw std::invalid_argument("analytic_signal: need at least 2 samples");

  std::vector<std::complex<double>> half(n / 2 + 1);
  {
    RealFftPlan fwd(n);
    fwd.execute(x, half);
  }

  fftw_complex* buf = fftw_alloc_complex(n);
  if (buf == nullptr) throw std::bad_alloc();
  fftw_plan inv =
      fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
  if (inv == nullptr) {
    fftw_free(buf);
    throw std::runtime_error("analytic_signal: planning failed");
  }

  // One-sided spectrum: DC (and Nyquist for even n) keep weight 1, interior
  // positive bins doubled, negative bins zeroed.
  const std::size_t pos_end = (n % 2 == 0) ? n / 2 : (n + 1) / 2;
  buf[0][0] = half[0].real();
  buf[0][1] = half[0].imag();
  for (std::size_t k = 1; k < pos_end; ++k) {
    buf[k][0] = 2.0 * half[k].real();
    buf[k][1] = 2.0 * half[k].imag();
  }
  if (n % 2 == 0) {
    buf[n / 2][0] = half[n / 2].real();
    buf[n / 2][1] = half[n / 2].imag();
  }
  for (std::size_t k = pos_end + ((n % 2 == 0) ? 1 : 0); k < n; ++k) {
    buf[k][0] = 0.0;
    buf[k][1] = 0.0;
  }

  fftw_execute(inv);
  fftw_destroy_plan(inv);

  std::vector<std::complex<double>> z(n);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k)
    z[k] = std::complex<double>(buf[k][0] * scale, buf[k][1] * scale);
  fftw_free(buf);
  return z;
}

}  // namespace ringlab

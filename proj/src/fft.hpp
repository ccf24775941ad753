#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace ringlab {

/// Reusable real-to-complex forward transform of fixed size (FFTW backend,
/// FFTW_ESTIMATE planning: output is deterministic for a given input).
class RealFftPlan {
 public:
  explicit RealFftPlan(std::size_t n);
  ~RealFftPlan();
  RealFftPlan(const RealFftPlan&) = delete;
  RealFftPlan& operator=(const RealFftPlan&) = delete;

  std::size_t size() const { return n_; }
  std::size_t bins() const { return n_ / 2 + 1; }

  /// in.size() == size(); out.size() == bins().
  void execute(std::span<const double> in, std::span<std::complex<double>> out);

 private:
  std::size_t n_;
  void* plan_;
  double* in_;
  void* out_;
};

/// Analytic signal via the one-sided spectrum method: FFT, zero the negative
/// frequencies (doubling the positive ones), inverse FFT.
std::vector<std::complex<double>> analytic_signal(std::span<const double> x);

}  // namespace ringlab

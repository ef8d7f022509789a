#include "fracomplex/fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace fracomplex {

namespace {
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Fft::Fft(int n) : n_(n) {
  std::lock_guard<std::mutex> lock(plan_mutex());
  // Plans are created with FFTW_ESTIMATE | FFTW_UNALIGNED so they can be
  // executed on any caller-provided buffers via the new-array interface.
  fftw_complex* buf = fftw_alloc_complex(static_cast<size_t>(n));
  fwd_ = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD,
                          FFTW_ESTIMATE | FFTW_UNALIGNED);
  inv_ = fftw_plan_dft_1d(n, buf, buf, FFTW_BACKWARD,
                          FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(buf);
}

Fft::~Fft() {
  std::lock_guard<std::mutex> lock(plan_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(inv_));
}

void Fft::forward(const Complex* in, Complex* out) const {
  fftw_execute_dft(static_cast<fftw_plan>(fwd_),
                   reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

void Fft::inverse(const Complex* in, Complex* out) const {
  fftw_execute_dft(static_cast<fftw_plan>(inv_),
                   reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

std::vector<Complex> Fft::forward(const std::vector<Complex>& in) const {
  std::vector<Complex> out(in.size());
  forward(in.data(), out.data());
  return out;
}

std::vector<Complex> Fft::inverse(const std::vector<Complex>& in) const {
  std::vector<Complex> out(in.size());
  inverse(in.data(), out.data());
  return out;
}

int next_pow2(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace fracomplex

#pragma once

#include <vector>

#include "fracomplex/special_functions.hpp"

namespace fracomplex {

// Thin FFTW wrapper. Plan creation is serialized behind a global mutex
// (FFTW planning is not thread-safe); execution is reentrant per instance,
// so each worker thread owns its own Fft.
class Fft {
public:
  explicit Fft(int n);
  ~Fft();
  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;

  int size() const { return n_; }
  // out[k] = sum_j in[j] e^{-2 pi i jk/n} (unnormalized).
  void forward(const Complex* in, Complex* out) const;
  // out[j] = sum_k in[k] e^{+2 pi i jk/n} (unnormalized).
  void inverse(const Complex* in, Complex* out) const;

  std::vector<Complex> forward(const std::vector<Complex>& in) const;
  std::vector<Complex> inverse(const std::vector<Complex>& in) const;

private:
  int n_;
  void* fwd_;
  void* inv_;
};

// Smallest power of two >= n.
int next_pow2(int n);

}  // namespace fracomplex

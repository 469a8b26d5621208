#pragma once

#include <complex>
#include <memory>
#include <vector>

namespace homcorr {

using cplx = std::complex<double>;

// Unscaled DFT of a fixed length:
//   forward:  out[n] = sum_k in[k] exp(-2*pi*i*n*k/N)
//   inverse:  out[n] = sum_k in[k] exp(+2*pi*i*n*k/N)   (no 1/N)
// Power-of-two lengths use an iterative radix-2 FFT, everything else a
// precomputed DFT matrix. Grid lengths here never exceed a few dozen.
class FftPlan {
 public:
  explicit FftPlan(int n);

  int size() const { return n_; }
  void forward(const cplx* in, cplx* out) const { run(in, out, /*inv=*/false); }
  void inverse(const cplx* in, cplx* out) const { run(in, out, /*inv=*/true); }

 private:
  void run(const cplx* in, cplx* out, bool inv) const;
  void fft_pow2(cplx* data, bool inv) const;

  int n_;
  bool pow2_;
  std::vector<int> bitrev_;
  std::vector<cplx> twiddle_fwd_;  // radix-2 stage twiddles or DFT matrix
  std::vector<cplx> twiddle_inv_;
};

// Shared per-length plans, built once and reused read-only.
std::shared_ptr<const FftPlan> fft_plan(int n);

// Index of angular frequency m (possibly negative) in a length-n DFT.
inline int freq_index(int m, int n) { return ((m % n) + n) % n; }

}  // namespace homcorr

#include "homcorr/fft.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace homcorr {

FftPlan::FftPlan(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("FftPlan: length must be positive");
  pow2_ = (n & (n - 1)) == 0;
  if (pow2_) {
    bitrev_.resize(n);
    int log2n = 0;
    while ((1 << log2n) < n) ++log2n;
    for (int i = 0; i < n; ++i) {
      int r = 0;
      for (int b = 0; b < log2n; ++b)
        if (i & (1 << b)) r |= 1 << (log2n - 1 - b);
      bitrev_[i] = r;
    }
    twiddle_fwd_.resize(n / 2);
    twiddle_inv_.resize(n / 2);
    for (int k = 0; k < n / 2; ++k) {
      double a = -2.0 * M_PI * k / n;
      twiddle_fwd_[k] = cplx(std::cos(a), std::sin(a));
      twiddle_inv_[k] = std::conj(twiddle_fwd_[k]);
    }
  } else {
    twiddle_fwd_.resize(static_cast<size_t>(n) * n);
    twiddle_inv_.resize(static_cast<size_t>(n) * n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        double a = -2.0 * M_PI * ((static_cast<long>(r) * c) % n) / n;
        twiddle_fwd_[static_cast<size_t>(r) * n + c] = cplx(std::cos(a), std::sin(a));
        twiddle_inv_[static_cast<size_t>(r) * n + c] = cplx(std::cos(a), -std::sin(a));
      }
  }
}

void FftPlan::fft_pow2(cplx* data, bool inv) const {
  const int n = n_;
  const auto& tw = inv ? twiddle_inv_ : twiddle_fwd_;
  for (int i = 0; i < n; ++i) {
    int j = bitrev_[i];
    if (i < j) std::swap(data[i], data[j]);
  }
  for (int len = 2; len <= n; len <<= 1) {
    int half = len / 2;
    int step = n / len;
    for (int base = 0; base < n; base += len) {
      for (int k = 0; k < half; ++k) {
        cplx w = tw[static_cast<size_t>(k) * step];
        cplx u = data[base + k];
        cplx v = data[base + k + half] * w;
        data[base + k] = u + v;
        data[base + k + half] = u - v;
      }
    }
  }
}

void FftPlan::run(const cplx* in, cplx* out, bool inv) const {
  if (pow2_) {
    if (out != in)
      for (int i = 0; i < n_; ++i) out[i] = in[i];
    fft_pow2(out, inv);
    return;
  }
  const auto& tw = inv ? twiddle_inv_ : twiddle_fwd_;
  std::vector<cplx> tmp(n_);
  for (int r = 0; r < n_; ++r) {
    cplx acc(0.0, 0.0);
    const cplx* row = &tw[static_cast<size_t>(r) * n_];
    for (int c = 0; c < n_; ++c) acc += row[c] * in[c];
    tmp[r] = acc;
  }
  for (int i = 0; i < n_; ++i) out[i] = tmp[i];
}

std::shared_ptr<const FftPlan> fft_plan(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const FftPlan>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto plan = std::make_shared<const FftPlan>(n);
  cache[n] = plan;
  return plan;
}

}  // namespace homcorr

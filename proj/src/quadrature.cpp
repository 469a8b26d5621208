#include "homcorr/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace homcorr {

double colatitude(int B, int j) { return M_PI * (2 * j + 1) / (4.0 * B); }

std::vector<double> colatitude_weights(int B) {
  if (B < 1) throw std::invalid_argument("bandwidth must be >= 1");
  const int n = 2 * B;
  std::vector<double> w(n);
  for (int j = 0; j < n; ++j) {
    double theta = colatitude(B, j);
    double s = 0.0;
    for (int p = 0; p < B; ++p) s += std::sin((2 * p + 1) * theta) / (2 * p + 1);
    w[j] = (2.0 / B) * std::sin(theta) * s;
  }
  return w;
}

std::vector<double> s2_quadrature_weights(int B) {
  const int n = 2 * B;
  std::vector<double> wj = colatitude_weights(B);
  std::vector<double> w(static_cast<size_t>(n) * n);
  const double dphi = M_PI / B;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) w[static_cast<size_t>(j) * n + k] = wj[j] * dphi;
  return w;
}

std::vector<double> so3_quadrature_weights(int B) {
  const int n = 2 * B;
  std::vector<double> wj = colatitude_weights(B);
  std::vector<double> w(static_cast<size_t>(n) * n * n);
  // (1/(8 pi^2)) * (2pi/n)^2 * w_j = w_j / (8 B^2)
  for (int a = 0; a < n; ++a)
    for (int j = 0; j < n; ++j)
      for (int c = 0; c < n; ++c)
        w[(static_cast<size_t>(a) * n + j) * n + c] = wj[j] / (8.0 * B * B);
  return w;
}

}  // namespace homcorr

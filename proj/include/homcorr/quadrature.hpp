#pragma once

#include <vector>

namespace homcorr {

// Equiangular sampling for bandwidth B: 2B colatitudes theta_j = pi(2j+1)/(4B)
// shared by the sphere grid (theta, phi) and the Euler grid (alpha, beta,
// gamma), with 2B equispaced azimuths phi_k = pi*k/B.
//
// The colatitude weights are the standard closed-form equiangular weights
//   w_j = (2/B) sin(theta_j) sum_{p<B} sin((2p+1) theta_j)/(2p+1),
// exact for integrands of Legendre degree < 2B; sum_j w_j = 2.

inline int grid_size(int B) { return 2 * B; }

double colatitude(int B, int j);

// The 2B colatitude weights described above.
std::vector<double> colatitude_weights(int B);

// Per-node weights for the sphere integral with total area 4pi,
// flattened theta-major: index j*2B + k.
std::vector<double> s2_quadrature_weights(int B);

// Per-node weights for the Haar integral on the rotation group normalized to
// total mass 1, flattened (alpha, beta, gamma) row-major.
std::vector<double> so3_quadrature_weights(int B);

}  // namespace homcorr

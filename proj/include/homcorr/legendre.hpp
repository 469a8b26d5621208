#pragma once

#include <vector>

namespace homcorr {

// Normalized associated Legendre function Pbar_l^m(x), orthonormal on [-1,1]
// (integral of Pbar^2 equals 1), Condon-Shortley phase included. The complex
// sphere basis is Pbar_l^m(cos theta) e^{-im phi} / sqrt(2 pi).
//
// Requires 0 <= m <= l and |x| <= 1. Uses the diagonal seed followed by the
// three-term recurrence in degree.
double assoc_legendre(int l, int m, double x);

// Table of Pbar_l^m(cos theta_j) for all 0 <= m <= l < B at the 2B grid
// colatitudes; layout [packed(l,m)][j] with packed(l,m) = l(l+1)/2 + m.
std::vector<double> legendre_table(int B);

inline int legendre_pack(int l, int m) { return l * (l + 1) / 2 + m; }

}  // namespace homcorr

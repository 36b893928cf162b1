#pragma once

#include <complex>
#include <vector>

namespace sgr {

// In-place DFT A[r] = sum_t a[t] e^{sign 2 pi i r t / N} for sign = +-1,
// no normalization.  Power-of-two lengths run radix-2; everything else goes
// through Bluestein's chirp transform, so any N works in O(N log N).
void dft_inplace(std::vector<std::complex<double>>& a, int sign);

// Reference quadratic-time transform, same convention; kept tiny and dumb so
// it can serve as the oracle for dft_inplace.
std::vector<std::complex<double>> dft_naive(
    const std::vector<std::complex<double>>& a, int sign);

}  // namespace sgr

#pragma once

#include <complex>
#include <vector>

namespace nct {

using cplx = std::complex<double>;

// In-place radix-2 FFT for power-of-two lengths. Twiddle tables are cached
// per size behind an internal mutex, so concurrent transforms are safe.
// Forward: X[k] = sum_n x[n] e^{-2*pi*i nk/N}. Inverse carries the 1/N factor.
void fft_forward(std::vector<cplx>& data);
void fft_inverse(std::vector<cplx>& data);

bool is_power_of_two(std::size_t n);

}  // namespace nct

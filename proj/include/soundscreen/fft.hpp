#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace soundscreen {

/// In-place iterative radix-2 FFT. n must be a power of two.
/// inverse=true applies conjugate transform and 1/n scaling.
void fft_radix2(std::vector<std::complex<double>>& x, bool inverse = false);

/// Power spectrum |X_k|^2 for k = 0..n/2 of a real frame zero-padded to n_fft.
std::vector<double> power_spectrum(const float* frame, std::size_t frame_len, std::size_t n_fft);

bool is_power_of_two(std::size_t n);

}  // namespace soundscreen

#ifndef SKEMBED_FFT_HPP
#define SKEMBED_FFT_HPP

#include <complex>
#include <vector>

namespace skembed::detail {

bool is_power_of_two(std::size_t n);

// In-place radix-2 decimation-in-time FFT. `sign = -1` is the forward
// transform X_k = sum_j x_j exp(-2*pi*i*j*k/n); `sign = +1` the unnormalized
// inverse. n must be a power of two. Single-threaded and bit-reproducible.
void fft_radix2(std::vector<std::complex<double>>& data, int sign);

// Forward complex spectrum of real samples (all n bins, conjugate symmetric).
std::vector<std::complex<double>> fft_real_forward(const std::vector<double>& x);

}  // namespace skembed::detail

#endif  // SKEMBED_FFT_HPP

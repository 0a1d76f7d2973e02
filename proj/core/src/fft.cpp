#include "skembed/fft.hpp"

#include <cmath>
#include <numbers>

#include "skembed/errors.hpp"

namespace skembed::detail {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void fft_radix2(std::vector<std::complex<double>>& data, int sign) {
  const std::size_t n = data.size();
  if (!is_power_of_two(n)) {
    fail(ErrorCode::InvalidArgument, "fft size must be a power of two");
  }
  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = data[i + k];
        const std::complex<double> v = data[i + k + len / 2] * w;
        data[i + k] = u + v;
        data[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

std::vector<std::complex<double>> fft_real_forward(const std::vector<double>& x) {
  std::vector<std::complex<double>> data(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) data[i] = x[i];
  fft_radix2(data, -1);
  return data;
}

}  // namespace skembed::detail

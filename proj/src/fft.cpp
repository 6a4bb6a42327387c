#include "soundscreen/fft.hpp"

#include <cmath>
#include <numbers>

#include "soundscreen/errors.hpp"

namespace soundscreen {

bool is_power_of_two(std::size_t n) {
    return n > 0 && (n & (n - 1)) == 0;
}

void fft_radix2(std::vector<std::complex<double>>& x, bool inverse) {
    const std::size_t n = x.size();
    if (!is_power_of_two(n)) throw ShapeMismatch("fft size must be a power of two");
    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle =
            (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(angle), std::sin(angle));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = x[i + k];
                const std::complex<double> v = x[i + k + len / 2] * w;
                x[i + k] = u + v;
                x[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse) {
        const double inv = 1.0 / static_cast<double>(n);
        for (auto& c : x) c *= inv;
    }
}

std::vector<double> power_spectrum(const float* frame, std::size_t frame_len, std::size_t n_fft) {
    if (frame_len > n_fft) throw ShapeMismatch("frame longer than n_fft");
    std::vector<std::complex<double>> buf(n_fft, {0.0, 0.0});
    for (std::size_t i = 0; i < frame_len; ++i) buf[i] = std::complex<double>(frame[i], 0.0);
    fft_radix2(buf);
    std::vector<double> power(n_fft / 2 + 1);
    for (std::size_t k = 0; k <= n_fft / 2; ++k) power[k] = std::norm(buf[k]);
    return power;
}

}  // namespace soundscreen

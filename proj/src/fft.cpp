#include "taucube/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace taucube {

namespace {

bool power_of_two(std::size_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

// Iterative Cooley-Tukey, decimation in time. sign = -1 forward, +1 inverse.
void fft_radix2(std::vector<Complex>& a, int sign) {
    const std::size_t n = a.size();
    if (!power_of_two(n)) throw std::domain_error("transform length must be a power of two");
    if (n == 1) return;

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    std::vector<Complex> twiddle(n / 2);
    const double base = static_cast<double>(sign) * 2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t k = 0; k < n / 2; ++k) twiddle[k] = std::polar(1.0, base * static_cast<double>(k));

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t start = 0; start < n; start += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const Complex w = twiddle[k * stride];
                const Complex u = a[start + k];
                const Complex v = a[start + k + len / 2] * w;
                a[start + k] = u + v;
                a[start + k + len / 2] = u - v;
            }
        }
    }
}

}  // namespace

std::vector<Complex> dft(const std::vector<Complex>& v) {
    std::vector<Complex> out = v;
    fft_radix2(out, -1);
    return out;
}

std::vector<Complex> idft(const std::vector<Complex>& v) {
    std::vector<Complex> out = v;
    fft_radix2(out, +1);
    const double scale = 1.0 / static_cast<double>(out.size());
    for (Complex& z : out) z *= scale;
    return out;
}

}  // namespace taucube

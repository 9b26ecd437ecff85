#include "eegqml/dsp/fft.hpp"

#include <cmath>

#include "eegqml/errors.hpp"

namespace eegqml::dsp {

namespace {

using cd = std::complex<double>;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Iterative radix-2, bit-reversal permutation then butterflies.
void fft_pow2(std::vector<cd>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = 2.0 * M_PI / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
    const cd wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cd w(1.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const cd u = a[i + k];
        const cd v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (inverse) {
    for (auto& x : a) x /= static_cast<double>(n);
  }
}

// Bluestein's algorithm: DFT of arbitrary N as a circular convolution of
// chirp-modulated sequences, carried out at the next power of two >= 2N-1.
void fft_bluestein(std::vector<cd>& a, bool inverse) {
  const std::size_t n = a.size();
  const double sign = inverse ? 1.0 : -1.0;

  std::vector<cd> chirp(n);
  for (std::size_t k = 0; k < n; ++k) {
    // angle = pi * k^2 / n, k^2 reduced mod 2n to keep the argument small
    const std::size_t k2 = (k * k) % (2 * n);
    const double ang = sign * M_PI * static_cast<double>(k2) / static_cast<double>(n);
    chirp[k] = cd(std::cos(ang), std::sin(ang));
  }

  const std::size_t m = next_pow2(2 * n - 1);
  std::vector<cd> u(m, cd(0.0)), v(m, cd(0.0));
  for (std::size_t k = 0; k < n; ++k) u[k] = a[k] * chirp[k];
  v[0] = std::conj(chirp[0]);
  for (std::size_t k = 1; k < n; ++k) {
    v[k] = std::conj(chirp[k]);
    v[m - k] = std::conj(chirp[k]);
  }

  fft_pow2(u, false);
  fft_pow2(v, false);
  for (std::size_t k = 0; k < m; ++k) u[k] *= v[k];
  fft_pow2(u, true);

  for (std::size_t k = 0; k < n; ++k) a[k] = u[k] * chirp[k];
  if (inverse) {
    for (auto& x : a) x /= static_cast<double>(n);
  }
}

}  // namespace

void fft_inplace(std::vector<cd>& data, bool inverse) {
  if (data.empty()) throw DataError("fft: empty input");
  if (data.size() == 1) return;
  if (is_pow2(data.size())) {
    fft_pow2(data, inverse);
  } else {
    fft_bluestein(data, inverse);
  }
}

std::vector<cd> real_dft_onesided(const std::vector<double>& samples) {
  std::vector<cd> buf(samples.begin(), samples.end());
  fft_inplace(buf, false);
  buf.resize(samples.size() / 2 + 1);
  return buf;
}

}  // namespace eegqml::dsp

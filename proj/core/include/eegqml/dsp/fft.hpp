#pragma once

#include <complex>
#include <vector>

namespace eegqml::dsp {

/// In-place complex DFT of arbitrary length: radix-2 Cooley-Tukey for
/// powers of two, Bluestein's chirp-z otherwise. inverse=true applies the
/// inverse transform including the 1/N factor.
void fft_inplace(std::vector<std::complex<double>>& data, bool inverse = false);

/// Forward DFT of a real sequence, first floor(N/2)+1 bins (one-sided).
std::vector<std::complex<double>> real_dft_onesided(
    const std::vector<double>& samples);

}  // namespace eegqml::dsp

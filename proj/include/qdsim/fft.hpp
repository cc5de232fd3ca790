#pragma once

#include <complex>
#include <vector>

namespace qdsim {

/// In-place radix-2 FFT. Length must be a power of two. The inverse
/// transform carries the 1/N factor. Bit-identical results regardless of
/// caller threading (no plans, no globals).
void fft_inplace(std::vector<std::complex<double>>& data, bool inverse);

std::vector<std::complex<double>> fft(std::vector<std::complex<double>> data);
std::vector<std::complex<double>> ifft(std::vector<std::complex<double>> data);

bool is_power_of_two(size_t n);

}  // namespace qdsim

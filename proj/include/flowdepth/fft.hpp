#ifndef FLOWDEPTH_FFT_HPP
#define FLOWDEPTH_FFT_HPP

#include <complex>
#include <vector>

namespace flowdepth {

/// In-place radix-2 FFT; size must be a power of two. The inverse transform
/// includes the 1/n normalization.
void fft(std::vector<std::complex<double>>& a, bool inverse);

bool is_power_of_two(int n);

}  // namespace flowdepth

#endif

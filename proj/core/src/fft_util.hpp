#pragma once

// Thin FFTW3 wrappers. FFTW planner calls are not thread-safe; all plan
// creation/destruction is serialized behind a global mutex. Execution of a
// created plan on its own buffers is safe.

#include <complex>
#include <mutex>
#include <vector>

namespace hermite::fft {

inline std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// Real-to-complex forward transform of a length-n real array; returns n/2+1
// complex bins (unnormalized, FFTW convention).
std::vector<std::complex<double>> rfft(const std::vector<double>& in);

// Inverse of rfft: n/2+1 bins -> length-n real array, scaled by 1/n.
std::vector<double> irfft(const std::vector<std::complex<double>>& in, std::size_t n);

// In-place-style complex transforms (unnormalized forward; inverse scaled 1/n).
std::vector<std::complex<double>> fft(const std::vector<std::complex<double>>& in);
std::vector<std::complex<double>> ifft(const std::vector<std::complex<double>>& in);

}  // namespace hermite::fft

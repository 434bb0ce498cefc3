#pragma once

#include <complex>
#include <vector>

#include "besovlab/grid.hpp"

namespace besovlab::fft {

// Forward transform with 1/M^N normalization: coefficients are the amplitudes
// of e^{i k.x}, so a constant field has a single zero-mode entry equal to it.
std::vector<std::complex<double>> forward(const Grid& grid,
                                          const std::vector<double>& physical);

// Synthesis: sum of coefficients times e^{i k.x}; returns the real part and,
// if imag_max is given, reports the largest imaginary residue encountered.
std::vector<double> inverse(const Grid& grid,
                            const std::vector<std::complex<double>>& spectral,
                            double* imag_max = nullptr);

// Complex-to-complex helpers used for padded products.
void forward_c2c(int dim, int m, std::vector<std::complex<double>>& data);
void inverse_c2c(int dim, int m, std::vector<std::complex<double>>& data);

} // namespace besovlab::fft

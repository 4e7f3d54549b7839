#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ocr/segment.hpp"

namespace ocr {

// 42x24 glyphs are zero-padded into the smallest enclosing power-of-two grid.
inline constexpr int kSpectrumRows = 64;
inline constexpr int kSpectrumCols = 32;
inline constexpr std::size_t kSpectrumSize = 2048;  // 64 * 32

// In-place orthonormal fast Walsh-Hadamard transform in natural (Hadamard)
// order: butterflies are adds/subtracts only, one 1/sqrt(N) scale at the end.
// Length must be a power of two.
void fwht1d_inplace(std::span<double> v);
std::vector<double> fwht1d(std::vector<double> v);

// Maps natural (Hadamard) index -> sequency index: bit reversal followed by
// Gray-code decoding. The basis vector placed at sequency index s has exactly
// s sign changes.
std::vector<std::size_t> sequency_permutation(std::size_t n);

// Reorders natural-order coefficients into sequency order.
std::vector<double> to_sequency(const std::vector<double>& v);

// 2D WHT coefficients of one glyph, sequency-ordered along both axes.
struct WhtSpectrum {
    std::vector<double> coefficients;  // 64 x 32 row-major

    double at(int r, int c) const { return coefficients[static_cast<std::size_t>(r) * kSpectrumCols + c]; }
};

// Embed the glyph (ink = 1.0) in the top-left of a zeroed 64x32 grid,
// transform every row then every column, then sequency-order both axes.
WhtSpectrum wht2d(const BinaryImage& glyph);
WhtSpectrum wht2d(const NormalizedGlyph& glyph);

// Row-major flatten: coefficient (r, c) lands at index r*32 + c.
std::vector<double> flatten(const WhtSpectrum& s);

}  // namespace ocr

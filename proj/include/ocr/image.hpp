#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ocr {

// Grayscale raster, row-major intensities in [0, 255].
struct GrayImage {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> pixels;

    std::uint8_t at(int r, int c) const { return pixels[static_cast<std::size_t>(r) * cols + c]; }
    std::uint8_t& at(int r, int c) { return pixels[static_cast<std::size_t>(r) * cols + c]; }
};

// Two-valued raster. The convention is fixed: 1 = ink (text foreground),
// 0 = background, whatever the polarity of the source image was.
struct BinaryImage {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> pixels;

    std::uint8_t at(int r, int c) const { return pixels[static_cast<std::size_t>(r) * cols + c]; }
    std::uint8_t& at(int r, int c) { return pixels[static_cast<std::size_t>(r) * cols + c]; }

    bool operator==(const BinaryImage&) const = default;
};

BinaryImage make_binary(int rows, int cols);

long ink_count(const BinaryImage& img);
int row_ink(const BinaryImage& img, int r);
int col_ink(const BinaryImage& img, int c);

// Otsu's between-class-variance maximization over the 256-bin histogram.
// Returns a threshold T such that `pixel < T` selects the dark class.
int otsu_threshold(const GrayImage& img);

// Threshold (Otsu when absent), dark pixels become ink, then flip polarity
// when ink covers strictly more than half of the image so that the result is
// always dark-text-on-light-background.
BinaryImage binarize(const GrayImage& img, std::optional<int> threshold = std::nullopt);

// Tight bounding box of all ink pixels. Throws empty_content_error when the
// image has no ink at all.
BinaryImage crop_to_content(const BinaryImage& img);

// Axis-aligned sub-rectangle, bounds-checked.
BinaryImage crop_rect(const BinaryImage& img, int row0, int col0, int rows, int cols);

// Nearest-neighbor resampling: output cell (r, c) takes input cell
// (floor(r*rows/out_rows), floor(c*cols/out_cols)).
BinaryImage resample(const BinaryImage& img, int out_rows, int out_cols);

BinaryImage mirror_h(const BinaryImage& img);  // reverses column order
BinaryImage mirror_v(const BinaryImage& img);  // reverses row order

// Pearson product-moment correlation over all cells. When either input is
// constant the coefficient is undefined; the convention here is 1 for
// cell-for-cell equal inputs and 0 otherwise.
double corr2(std::span<const double> a, std::span<const double> b);
double corr2(const BinaryImage& a, const BinaryImage& b);

std::vector<double> to_real(const BinaryImage& img);

}  // namespace ocr

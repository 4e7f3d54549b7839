#pragma once

#include <vector>

#include "ocr/image.hpp"

namespace ocr {

// Template raster the classifier was designed around.
inline constexpr int kGlyphRows = 42;
inline constexpr int kGlyphCols = 24;

// A horizontal band of the page whose every row contains ink.
struct LineStrip {
    int row_begin = 0;  // inclusive page rows
    int row_end = 0;
    BinaryImage image;  // full page width
};

// One segmented character, tight-cropped, with its provenance on the page.
struct GlyphBox {
    int line_index = 0;
    int glyph_index = 0;
    int row_begin = 0;  // inclusive page coordinates
    int row_end = 0;
    int col_begin = 0;
    int col_end = 0;
    BinaryImage image;
};

struct NormalizedGlyph {
    BinaryImage image;  // exactly 42 x 24, at least one ink pixel
    GlyphBox origin;
};

// Maximal runs of consecutive rows with ink, top to bottom. An all-background
// page yields an empty list.
std::vector<LineStrip> split_lines(const BinaryImage& page);

// Maximal runs of consecutive columns with ink, left to right, each then
// tight-cropped.
std::vector<GlyphBox> split_glyphs(const LineStrip& line, int line_index = 0);

// crop_to_content followed by nearest-neighbor resampling to 42 x 24.
NormalizedGlyph normalize_glyph(const GlyphBox& box);

// Single-glyph path: treat the whole image as one glyph.
NormalizedGlyph normalize_image(const BinaryImage& glyph);

}  // namespace ocr

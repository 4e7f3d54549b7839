#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ocr/ann.hpp"

namespace ocr {

struct RoiRect {
    int x = 0;  // column of the top-left corner
    int y = 0;  // row
    int w = 0;
    int h = 0;
};

struct PipelineOptions {
    std::optional<RoiRect> roi;
    bool spaces = false;  // insert ' ' at gaps >= half the median glyph width
};

struct GlyphResult {
    int line_index = 0;
    int glyph_index = 0;
    char label = '?';
    double confidence = 0;
    FeatureVector features;
};

struct RecognitionResult {
    std::vector<std::string> lines;
    std::vector<GlyphResult> per_glyph;  // reading order
};

// Full pipeline: binarize -> optional ROI crop -> line/glyph segmentation ->
// normalize -> features -> classify.
RecognitionResult recognize_page(const MlpModel& model, const TemplateDatabase& db,
                                 const GrayImage& page, const PipelineOptions& options = {});

}  // namespace ocr

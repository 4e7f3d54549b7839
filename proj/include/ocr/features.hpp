#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "ocr/segment.hpp"
#include "ocr/wht.hpp"

namespace ocr {

// The eleven glyph measurements, in their fixed order. Integer-valued
// features are stored as exact integral doubles.
struct FeatureVector {
    double h30 = 0, h50 = 0, h80 = 0;  // ink along horizontal lines, 0..24
    double v30 = 0, v50 = 0, v80 = 0;  // ink along vertical lines, 0..42
    double hsym = 0, vsym = 0;         // degree of symmetry, [0, 1]
    double pos = 0;                    // best-correlating template, 1..36
    double cc = 0;                     // closed areas (holes)
    double sumt = 0;                   // sum of the other ten

    std::array<double, 11> values() const {
        return {h30, h50, h80, v30, v50, v80, hsym, vsym, pos, cc, sumt};
    }
    static const std::array<const char*, 11>& names();
};

// Class symbols in database order: A..Z then 1..9 then 0.
const std::string& label_order();

// Ink count along the row at height c*42 (1-based index round(c*42), clamped).
int line_sum_h(const BinaryImage& glyph, double c);
// Ink count along the column at width c*24.
int line_sum_v(const BinaryImage& glyph, double c);

// Correlation between the glyph and a version of itself whose right half is
// the mirror of its left half, clamped to [0, 1].
double h_symmetry(const BinaryImage& glyph);
// Same with the lower half mirrored from the upper half.
double v_symmetry(const BinaryImage& glyph);

// Count of background components (4-connected) that do not touch the border.
int closed_areas(const BinaryImage& glyph);

// The 36 canonical glyphs with their feature vectors and flattened
// sequency-ordered WHT spectra.
struct TemplateDatabase {
    std::string labels;                        // fixed A..Z 1..9 0
    std::vector<NormalizedGlyph> templates;    // 36
    std::vector<FeatureVector> vectors;        // 36
    std::vector<std::vector<double>> spectra;  // 36 x 2048

    int index_of(char label) const;  // -1 when unknown
};

// 1-based index of the database spectrum with the highest correlation to the
// glyph's spectrum; ties go to the lowest index. `keep` optionally truncates
// the comparison to the first `keep` sequency-ordered coefficients.
int wht_pos(const NormalizedGlyph& glyph, const TemplateDatabase& db, std::size_t keep = kSpectrumSize);
int wht_pos(const std::vector<double>& flat_spectrum, const TemplateDatabase& db,
            std::size_t keep = kSpectrumSize);

FeatureVector feature_vector(const NormalizedGlyph& glyph, const TemplateDatabase& db);

// Loads <label>.pbm/.pgm for all 36 labels from a directory, binarizes and
// normalizes each, then computes spectra and feature vectors.
TemplateDatabase build_database(const std::string& template_dir);

void save_database(const TemplateDatabase& db, const std::string& path);
TemplateDatabase load_database(const std::string& path);

}  // namespace ocr

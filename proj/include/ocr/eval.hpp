#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ocr/ann.hpp"

namespace ocr {

struct FontRow {
    std::string font;
    long correct = 0;
    long total = 0;
    double rate_percent = 0;  // 100*correct/total, rounded half-up to 2 decimals
};

struct ConfusionPair {
    char truth = '?';
    char predicted = '?';
    int count = 0;
};

struct EvalReport {
    std::vector<FontRow> rows;  // rate descending, then name
    FontRow aggregate;          // font = "ALL", column sums
    std::vector<std::pair<std::string, std::string>> skipped;  // (font, reason)
    std::vector<ConfusionPair> confusions;                     // count descending
};

// 100*correct/total rounded half-up to two decimals (0 when total is 0).
double rate_percent(long correct, long total);

// Sorts rows (rate descending, name ascending), fills per-row rates and the
// aggregate. Confusions/skips are left as given.
EvalReport finalize_report(std::vector<FontRow> rows);

// Classifies the 36 labeled glyph files of every subdirectory of fonts_root.
// Malformed subdirectories are skipped and recorded.
EvalReport evaluate_fonts(const MlpModel& model, const TemplateDatabase& db,
                          const std::string& fonts_root);

// CSV with header font,correct,total,rate_percent, one row per font, an ALL
// aggregate row, then one "# skipped <font>: <reason>" comment line per skip.
std::string to_csv(const EvalReport& report);

}  // namespace ocr

#include "ocr/image.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "ocr/errors.hpp"

namespace ocr {

BinaryImage make_binary(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("image dimensions must be positive");
    return BinaryImage{rows, cols, std::vector<std::uint8_t>(static_cast<std::size_t>(rows) * cols, 0)};
}

long ink_count(const BinaryImage& img) {
    long n = 0;
    for (auto p : img.pixels) n += p;
    return n;
}

int row_ink(const BinaryImage& img, int r) {
    int n = 0;
    for (int c = 0; c < img.cols; ++c) n += img.at(r, c);
    return n;
}

int col_ink(const BinaryImage& img, int c) {
    int n = 0;
    for (int r = 0; r < img.rows; ++r) n += img.at(r, c);
    return n;
}

int otsu_threshold(const GrayImage& img) {
    std::array<long, 256> hist{};
    for (auto p : img.pixels) ++hist[p];
    const double total = static_cast<double>(img.pixels.size());

    double sum_all = 0;
    for (int v = 0; v < 256; ++v) sum_all += static_cast<double>(v) * hist[v];

    // Split between t and t+1; the dark class is [0, t].
    int best_t = 0;
    double best_var = -1.0;
    long w0 = 0;
    double sum0 = 0;
    for (int t = 0; t < 255; ++t) {
        w0 += hist[t];
        sum0 += static_cast<double>(t) * hist[t];
        const long w1 = static_cast<long>(total) - w0;
        if (w0 == 0 || w1 == 0) continue;
        const double mu0 = sum0 / w0;
        const double mu1 = (sum_all - sum0) / w1;
        const double between = static_cast<double>(w0) * static_cast<double>(w1) * (mu0 - mu1) * (mu0 - mu1);
        if (between > best_var) {
            best_var = between;
            best_t = t;
        }
    }
    if (best_var < 0) return 1;  // constant image: no valid split
    return best_t + 1;
}

BinaryImage binarize(const GrayImage& img, std::optional<int> threshold) {
    const int t = threshold ? *threshold : otsu_threshold(img);
    BinaryImage out{img.rows, img.cols, std::vector<std::uint8_t>(img.pixels.size())};
    long ink = 0;
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        out.pixels[i] = img.pixels[i] < t ? 1 : 0;
        ink += out.pixels[i];
    }
    // Enforce dark-text-on-light-background: flip only on a strict majority.
    if (2 * ink > static_cast<long>(out.pixels.size())) {
        for (auto& p : out.pixels) p ^= 1;
    }
    return out;
}

BinaryImage crop_to_content(const BinaryImage& img) {
    int rmin = img.rows, rmax = -1, cmin = img.cols, cmax = -1;
    for (int r = 0; r < img.rows; ++r) {
        for (int c = 0; c < img.cols; ++c) {
            if (img.at(r, c)) {
                rmin = std::min(rmin, r);
                rmax = std::max(rmax, r);
                cmin = std::min(cmin, c);
                cmax = std::max(cmax, c);
            }
        }
    }
    if (rmax < 0) throw empty_content_error("crop_to_content: image has no ink pixels");
    return crop_rect(img, rmin, cmin, rmax - rmin + 1, cmax - cmin + 1);
}

BinaryImage crop_rect(const BinaryImage& img, int row0, int col0, int rows, int cols) {
    if (row0 < 0 || col0 < 0 || rows < 1 || cols < 1 || row0 + rows > img.rows || col0 + cols > img.cols)
        throw std::invalid_argument("crop_rect: rectangle out of bounds");
    BinaryImage out = make_binary(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) out.at(r, c) = img.at(row0 + r, col0 + c);
    return out;
}

BinaryImage resample(const BinaryImage& img, int out_rows, int out_cols) {
    BinaryImage out = make_binary(out_rows, out_cols);
    for (int r = 0; r < out_rows; ++r) {
        const int sr = static_cast<int>(static_cast<long long>(r) * img.rows / out_rows);
        for (int c = 0; c < out_cols; ++c) {
            const int sc = static_cast<int>(static_cast<long long>(c) * img.cols / out_cols);
            out.at(r, c) = img.at(sr, sc);
        }
    }
    return out;
}

BinaryImage mirror_h(const BinaryImage& img) {
    BinaryImage out = img;
    for (int r = 0; r < img.rows; ++r)
        for (int c = 0; c < img.cols; ++c) out.at(r, c) = img.at(r, img.cols - 1 - c);
    return out;
}

BinaryImage mirror_v(const BinaryImage& img) {
    BinaryImage out = img;
    for (int r = 0; r < img.rows; ++r)
        for (int c = 0; c < img.cols; ++c) out.at(r, c) = img.at(img.rows - 1 - r, c);
    return out;
}

double corr2(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("corr2: dimension mismatch");
    if (a.empty()) throw std::invalid_argument("corr2: empty input");

    bool const_a = true, const_b = true;
    bool equal = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const_a = const_a && a[i] == a[0];
        const_b = const_b && b[i] == b[0];
        equal = equal && a[i] == b[i];
    }
    if (const_a || const_b) return equal ? 1.0 : 0.0;

    double mean_a = 0, mean_b = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        mean_a += a[i];
        mean_b += b[i];
    }
    mean_a /= static_cast<double>(a.size());
    mean_b /= static_cast<double>(b.size());

    double sab = 0, saa = 0, sbb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double da = a[i] - mean_a;
        const double db = b[i] - mean_b;
        sab += da * db;
        saa += da * da;
        sbb += db * db;
    }
    return sab / std::sqrt(saa * sbb);
}

double corr2(const BinaryImage& a, const BinaryImage& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("corr2: dimension mismatch");
    return corr2(std::span<const double>(to_real(a)), std::span<const double>(to_real(b)));
}

std::vector<double> to_real(const BinaryImage& img) {
    return {img.pixels.begin(), img.pixels.end()};
}

}  // namespace ocr

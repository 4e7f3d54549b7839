#pragma once

#include <span>
#include <string>

#include "ocr/image.hpp"

namespace ocr {

// Reads a PBM (P1/P4) or PGM (P2/P5) file. PBM black (1) maps to intensity 0,
// white to 255. Header comments (#...) are tolerated; PGM maxval must be in
// [1, 255]. Malformed or truncated input is reported with the byte offset.
GrayImage load_image(const std::string& path);

// Same parser over an in-memory buffer; `origin` names the source in errors.
GrayImage parse_netpbm(std::span<const unsigned char> bytes, const std::string& origin);

}  // namespace ocr

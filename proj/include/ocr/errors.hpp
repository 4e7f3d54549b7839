#pragma once

#include <stdexcept>
#include <string>

namespace ocr {

// Raised when an operation that needs at least one ink pixel is handed an
// all-background image.
struct empty_content_error : std::runtime_error {
    explicit empty_content_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ocr

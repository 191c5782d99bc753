#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "lsscrypt/image.hpp"

namespace lsscrypt {

struct PgmError : std::runtime_error {
    enum class Kind { missing_file, unsupported_format, bad_header, bad_maxval, truncated, io_failure };

    PgmError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
    Kind kind;
};

/// Binary PGM (P5) with maxval 255 only. Row-major byte-for-byte load.
GrayImage read_pgm(const std::filesystem::path& path);

/// Canonical header "P5\n<W> <H>\n255\n" followed by the raw payload;
/// identical images produce byte-identical files.
void write_pgm(const GrayImage& img, const std::filesystem::path& path);

} // namespace lsscrypt

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "lsscrypt/cipher.hpp"

namespace lsscrypt {

struct KeyFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// "r=<decimal> x0=<decimal> I=<integer>", whitespace separated. Decimals go
/// through exact round-to-nearest parsing so implementations agree on the
/// binary key.
MasterKey parse_key_text(std::string_view text);

/// "r,x0,I" as accepted on the command line.
MasterKey parse_key_arg(std::string_view text);

MasterKey read_key_file(const std::filesystem::path& path);
void write_key_file(const std::filesystem::path& path, const MasterKey& key);

/// Key-file form with 17-significant-digit reals.
std::string format_key(const MasterKey& key);

} // namespace lsscrypt

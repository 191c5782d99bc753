#include "lsscrypt/pgm.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace lsscrypt {

namespace {

// Reads one PNM header token, skipping whitespace and '#' comments.
std::string next_token(std::istream& in) {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {}
            continue;
        }
        if (!std::isspace(c)) {
            tok.push_back(static_cast<char>(c));
            break;
        }
    }
    while ((c = in.get()) != EOF && !std::isspace(c) && c != '#') tok.push_back(static_cast<char>(c));
    if (c == '#') in.unget();
    return tok;
}

int parse_dim(const std::string& tok) {
    if (tok.empty()) return -1;
    for (char ch : tok)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return -1;
    try {
        return std::stoi(tok);
    } catch (...) {
        return -1;
    }
}

} // namespace

GrayImage read_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PgmError(PgmError::Kind::missing_file, "cannot open " + path.string());

    std::string magic = next_token(in);
    if (magic != "P5") {
        if (magic.size() == 2 && magic[0] == 'P')
            throw PgmError(PgmError::Kind::unsupported_format,
                           "unsupported format " + magic + " (only binary P5 is handled)");
        throw PgmError(PgmError::Kind::bad_header, "not a PGM file: " + path.string());
    }

    int width = parse_dim(next_token(in));
    int height = parse_dim(next_token(in));
    int maxval = parse_dim(next_token(in));
    if (width < 1 || height < 1)
        throw PgmError(PgmError::Kind::bad_header, "malformed PGM header in " + path.string());
    if (maxval != 255)
        throw PgmError(PgmError::Kind::bad_maxval, "maxval must be 255, got " + std::to_string(maxval));

    // exactly one whitespace byte separates header and payload
    GrayImage img(height, width);
    in.read(reinterpret_cast<char*>(img.pixels.data()), static_cast<std::streamsize>(img.size()));
    if (static_cast<std::size_t>(in.gcount()) != img.size())
        throw PgmError(PgmError::Kind::truncated, "truncated pixel payload in " + path.string());
    return img;
}

void write_pgm(const GrayImage& img, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw PgmError(PgmError::Kind::io_failure, "cannot write " + path.string());
    out << "P5\n" << img.width << ' ' << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()), static_cast<std::streamsize>(img.size()));
    if (!out) throw PgmError(PgmError::Kind::io_failure, "write failed for " + path.string());
}

} // namespace lsscrypt

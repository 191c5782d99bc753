#include "lsscrypt/keyfile.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace lsscrypt {

namespace {

double parse_double(std::string_view text, std::string_view what) {
    double value;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw KeyFormatError("bad key: cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
    return value;
}

int parse_int(std::string_view text, std::string_view what) {
    int value;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw KeyFormatError("bad key: cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
    return value;
}

MasterKey make_key(double r, double x0, int iterations) {
    try {
        return MasterKey(ChaosParams(r, x0), iterations);
    } catch (const std::exception& e) {
        throw KeyFormatError(std::string("bad key: ") + e.what());
    }
}

} // namespace

MasterKey parse_key_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tok;
    bool have_r = false, have_x0 = false, have_i = false;
    double r = 0.0, x0 = 0.0;
    int iterations = 0;
    while (in >> tok) {
        if (tok.rfind("r=", 0) == 0) {
            r = parse_double(std::string_view(tok).substr(2), "r");
            have_r = true;
        } else if (tok.rfind("x0=", 0) == 0) {
            x0 = parse_double(std::string_view(tok).substr(3), "x0");
            have_x0 = true;
        } else if (tok.rfind("I=", 0) == 0) {
            iterations = parse_int(std::string_view(tok).substr(2), "I");
            have_i = true;
        } else {
            throw KeyFormatError("bad key: unexpected token '" + tok + "'");
        }
    }
    if (!have_r || !have_x0 || !have_i)
        throw KeyFormatError("bad key: expected 'r=<decimal> x0=<decimal> I=<integer>'");
    return make_key(r, x0, iterations);
}

MasterKey parse_key_arg(std::string_view text) {
    auto c1 = text.find(',');
    auto c2 = c1 == std::string_view::npos ? c1 : text.find(',', c1 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos || text.find(',', c2 + 1) != std::string_view::npos)
        throw KeyFormatError("bad key: expected 'r,x0,I'");
    double r = parse_double(text.substr(0, c1), "r");
    double x0 = parse_double(text.substr(c1 + 1, c2 - c1 - 1), "x0");
    int iterations = parse_int(text.substr(c2 + 1), "I");
    return make_key(r, x0, iterations);
}

MasterKey read_key_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw KeyFormatError("cannot open key file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_key_text(buf.str());
}

std::string format_key(const MasterKey& key) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "r=%.17g x0=%.17g I=%d", key.params.r(), key.params.x0(), key.iterations);
    return buf;
}

void write_key_file(const std::filesystem::path& path, const MasterKey& key) {
    std::ofstream out(path);
    if (!out) throw KeyFormatError("cannot write key file " + path.string());
    out << format_key(key) << '\n';
}

} // namespace lsscrypt

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lsscrypt/analysis.hpp"
#include "lsscrypt/automata.hpp"
#include "lsscrypt/chaos.hpp"
#include "lsscrypt/cipher.hpp"
#include "lsscrypt/keyfile.hpp"
#include "lsscrypt/pgm.hpp"

namespace fs = std::filesystem;
using namespace lsscrypt;

namespace {

// Exit codes: 0 ok, 1 runtime/I-O, 2 usage, 3 bad key, 4 bad image size.
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadKey = 3;
constexpr int kExitBadSize = 4;

struct KeyOptions {
    std::string key_file;
    std::string key_arg;
};

MasterKey load_key(const KeyOptions& opts) {
    if (opts.key_file.empty() == opts.key_arg.empty())
        throw KeyFormatError("exactly one of --key-file or --key is required");
    if (!opts.key_file.empty()) return read_key_file(opts.key_file);
    return parse_key_arg(opts.key_arg);
}

GrayImage load_cipher_input(const std::string& path) {
    GrayImage img = read_pgm(path);
    if (!tileable16(img)) {
        std::ostringstream msg;
        msg << "image is " << img.width << "x" << img.height
            << "; the cipher requires dimensions that are multiples of 16";
        throw std::domain_error(msg.str());
    }
    return img;
}

void write_trace(const CipherTrace& trace, const fs::path& dir) {
    fs::create_directories(dir);
    write_pgm(trace.shuffled, dir / "shuffled.pgm");
    write_pgm(trace.substituted, dir / "substituted.pgm");
    write_pgm(trace.mask_tile, dir / "mask.pgm");
    write_pgm(trace.ciphertext, dir / "ciphertext.pgm");
}

int run_crypt(bool encrypting, const std::string& in, const std::string& out,
              const KeyOptions& key_opts, const std::string& trace_dir) {
    MasterKey key = load_key(key_opts);
    GrayImage img = load_cipher_input(in);
    GrayImage result(1, 1);
    if (encrypting && !trace_dir.empty()) {
        CipherTrace trace;
        result = encrypt_traced(img, key, trace);
        write_trace(trace, trace_dir);
    } else {
        result = encrypting ? encrypt(img, key) : decrypt(img, key);
    }
    write_pgm(result, out);
    return 0;
}

const char* direction_name(Direction d) {
    switch (d) {
        case Direction::vertical: return "vertical";
        case Direction::horizontal: return "horizontal";
        default: return "diagonal";
    }
}

int run_analyze(const std::string& in, const std::string& against,
                const std::string& out_dir, int scatter_n, std::uint64_t seed) {
    GrayImage img = read_pgm(in);
    fs::create_directories(out_dir);
    fs::path dir(out_dir);

    Histogram256 hist = histogram(img);
    {
        std::ofstream f(dir / "histogram.csv");
        write_histogram_csv(f, hist);
    }

    std::vector<std::pair<std::string, double>> metrics;
    metrics.emplace_back("entropy", shannon_entropy(img));
    metrics.emplace_back("chi_square", chi_square_uniform(hist));
    GlcmMetrics gm = glcm_metrics(glcm(img));
    metrics.emplace_back("glcm_homogeneity", gm.homogeneity);
    metrics.emplace_back("glcm_contrast", gm.contrast);
    metrics.emplace_back("glcm_energy", gm.energy);

    for (Direction d : {Direction::vertical, Direction::horizontal, Direction::diagonal}) {
        CorrResult c = adjacent_correlation(img, d);
        metrics.emplace_back(std::string("adjacent_corr_") + direction_name(d), c.value);
        if (c.degenerate)
            std::cerr << "warning: constant series in " << direction_name(d) << " correlation\n";

        auto pairs = scatter_sample(img, d, std::min<std::size_t>(scatter_n, c.pairs), seed);
        std::ofstream f(dir / (std::string("scatter_") + direction_name(d) + ".csv"));
        write_scatter_csv(f, pairs);
    }

    if (!against.empty()) {
        GrayImage plain = read_pgm(against);
        for (Direction d : {Direction::vertical, Direction::horizontal, Direction::diagonal}) {
            CorrResult c = cross_correlation(plain, img, d);
            metrics.emplace_back(std::string("cross_corr_") + direction_name(d), c.value);
        }
    }

    {
        std::ofstream f(dir / "metrics.csv");
        write_metrics_csv(f, metrics);
    }
    for (const auto& [name, value] : metrics) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6g", value);
        std::cout << name << " = " << buf << '\n';
    }
    return 0;
}

int run_bench(int size, int repeats) {
    if (size < 16 || size % 16 != 0) throw std::domain_error("--size must be a positive multiple of 16");
    if (repeats < 1) throw std::domain_error("--repeats must be >= 1");

    GrayImage img(size, size);
    std::uint32_t lcg = 0x12345678u;
    for (auto& p : img.pixels) {
        lcg = lcg * 1664525u + 1013904223u;
        p = static_cast<std::uint8_t>(lcg >> 24);
    }
    MasterKey key(ChaosParams(3.93, 0.4142135623), 30);

    auto time_once = [&](auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        auto t1 = std::chrono::steady_clock::now();
        return std::chrono::duration<double>(t1 - t0).count();
    };

    const double mb = static_cast<double>(img.size()) / 1.0e6;
    GrayImage ct = encrypt(img, key); // warm caches, keep a ciphertext for decrypt timing
    std::vector<double> enc_rates, dec_rates;
    for (int rep = 0; rep < repeats; ++rep) {
        double te = time_once([&] { ct = encrypt(img, key); });
        double td = time_once([&] { img = decrypt(ct, key); });
        enc_rates.push_back(mb / te);
        dec_rates.push_back(mb / td);
    }

    auto report = [&](const char* label, const std::vector<double>& rates) {
        double mean = 0.0;
        for (double v : rates) mean += v;
        mean /= static_cast<double>(rates.size());
        double var = 0.0;
        for (double v : rates) var += (v - mean) * (v - mean);
        double sd = rates.size() > 1 ? std::sqrt(var / static_cast<double>(rates.size() - 1)) : 0.0;
        std::printf("%s: %.2f MB/s (stddev %.2f, n=%d, %dx%d)\n", label, mean, sd, repeats, size, size);
    };
    report("encrypt", enc_rates);
    report("decrypt", dec_rates);
    return 0;
}

int run_ca_pattern(int width, int steps, const std::string& out, const std::string& format) {
    if (width < 1) throw std::domain_error("--width must be >= 1");
    Cells1D row(static_cast<std::size_t>(width), 0);
    row[static_cast<std::size_t>(width) / 2] = 1;
    auto trajectory = evolve_1d(row, steps);
    if (format == "pgm") {
        GrayImage img(static_cast<int>(trajectory.size()), width);
        for (int i = 0; i < img.height; ++i)
            for (int j = 0; j < img.width; ++j)
                img.at(i, j) = trajectory[i][j] ? 0 : 255;
        write_pgm(img, out);
    } else {
        std::ofstream f(out);
        if (!f) throw std::runtime_error("cannot write " + out);
        write_pattern_text(f, trajectory);
    }
    return 0;
}

int run_bifurcation(double r_min, double r_max, int steps, int samples,
                    int warmup, double x0, const std::string& map_name, const std::string& out) {
    ScanMap map = ScanMap::lss;
    if (map_name == "logistic") map = ScanMap::logistic;
    else if (map_name == "sine") map = ScanMap::sine;
    else if (map_name != "lss") throw std::domain_error("--map must be lss, logistic or sine");
    auto rows = bifurcation_scan(r_min, r_max, steps, warmup, samples, x0, map);
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    write_scan_csv(f, rows);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"chaotic image cipher (logistic-sine map + rule-30 mask) and analysis harness"};
    app.require_subcommand(1);

    // encrypt / decrypt
    std::string in_path, out_path, trace_dir;
    KeyOptions key_opts;
    auto add_crypt_opts = [&](CLI::App* cmd, bool with_trace) {
        cmd->add_option("--in", in_path, "input PGM (P5)")->required();
        cmd->add_option("--out", out_path, "output PGM")->required();
        cmd->add_option("--key-file", key_opts.key_file, "key file: r=<v> x0=<v> I=<n>");
        cmd->add_option("--key", key_opts.key_arg, "inline key: r,x0,I");
        if (with_trace) cmd->add_option("--trace-dir", trace_dir, "dump stage images to this directory");
    };
    CLI::App* enc = app.add_subcommand("encrypt", "encrypt a PGM image");
    add_crypt_opts(enc, true);
    CLI::App* dec = app.add_subcommand("decrypt", "decrypt a PGM image");
    add_crypt_opts(dec, false);

    // analyze
    std::string against, out_dir;
    int scatter_n = 4096;
    std::uint64_t scatter_seed = 1;
    CLI::App* ana = app.add_subcommand("analyze", "statistical analysis of an image");
    ana->add_option("--in", in_path, "image to analyze")->required();
    ana->add_option("--against", against, "plaintext for cross-correlation");
    ana->add_option("--out-dir", out_dir, "directory for CSV outputs")->required();
    ana->add_option("--scatter-n", scatter_n, "pairs per scatter CSV");
    ana->add_option("--scatter-seed", scatter_seed, "sample seed");

    // bifurcation
    double r_min = 0.1, r_max = 3.9, scan_x0 = 0.31;
    int scan_steps = 400, scan_samples = 200, scan_warmup = kDefaultWarmup;
    std::string map_name = "lss";
    CLI::App* bif = app.add_subcommand("bifurcation", "export a bifurcation scan CSV");
    bif->add_option("--r-min", r_min, "grid start");
    bif->add_option("--r-max", r_max, "grid end");
    bif->add_option("--steps", scan_steps, "grid points");
    bif->add_option("--samples", scan_samples, "samples per r");
    bif->add_option("--warmup", scan_warmup, "discarded iterations per r");
    bif->add_option("--x0", scan_x0, "initial state");
    bif->add_option("--map", map_name, "lss | logistic | sine");
    bif->add_option("--out", out_path, "output CSV")->required();

    // ca-pattern
    int ca_width = 101, ca_steps = 50;
    std::string ca_format = "text";
    CLI::App* cap = app.add_subcommand("ca-pattern", "rule-30 triangle from a single seed cell");
    cap->add_option("--width", ca_width, "row width");
    cap->add_option("--steps", ca_steps, "evolution steps");
    cap->add_option("--format", ca_format, "text | pgm");
    cap->add_option("--out", out_path, "output file")->required();

    // bench
    int bench_size = 256, bench_repeats = 20;
    CLI::App* ben = app.add_subcommand("bench", "encrypt/decrypt throughput");
    ben->add_option("--size", bench_size, "square image edge (multiple of 16)");
    ben->add_option("--repeats", bench_repeats, "timing repetitions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (enc->parsed()) return run_crypt(true, in_path, out_path, key_opts, trace_dir);
        if (dec->parsed()) return run_crypt(false, in_path, out_path, key_opts, trace_dir);
        if (ana->parsed()) return run_analyze(in_path, against, out_dir, scatter_n, scatter_seed);
        if (bif->parsed()) return run_bifurcation(r_min, r_max, scan_steps, scan_samples,
                                                  scan_warmup, scan_x0, map_name, out_path);
        if (cap->parsed()) return run_ca_pattern(ca_width, ca_steps, out_path, ca_format);
        if (ben->parsed()) return run_bench(bench_size, bench_repeats);
    } catch (const KeyFormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadKey;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadSize;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return 0;
}

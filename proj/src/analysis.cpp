#include "lsscrypt/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace lsscrypt {

namespace {

void direction_offset(Direction dir, int& di, int& dj) {
    switch (dir) {
        case Direction::vertical: di = 1; dj = 0; break;
        case Direction::horizontal: di = 0; dj = 1; break;
        case Direction::diagonal: di = 1; dj = 1; break;
    }
}

// Integer pair moments: exact, so the result is independent of the
// parallel partitioning and identical to the serial reference.
struct PairMoments {
    std::int64_t n = 0, sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
};

PairMoments directional_moments(const GrayImage& a, const GrayImage& b, Direction dir) {
    int di, dj;
    direction_offset(dir, di, dj);
    const int rows = a.height - di;
    const int cols = a.width - dj;
    PairMoments m;
    std::int64_t sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    #pragma omp parallel for schedule(static) reduction(+:sx,sy,sxx,syy,sxy)
    for (int i = 0; i < rows; ++i) {
        const std::uint8_t* pa = &a.pixels[static_cast<std::size_t>(i) * a.width];
        const std::uint8_t* pb = &b.pixels[static_cast<std::size_t>(i + di) * b.width + dj];
        for (int j = 0; j < cols; ++j) {
            std::int64_t x = pa[j];
            std::int64_t y = pb[j];
            sx += x; sy += y; sxx += x * x; syy += y * y; sxy += x * y;
        }
    }
    m.n = static_cast<std::int64_t>(rows) * cols;
    m.sx = sx; m.sy = sy; m.sxx = sxx; m.syy = syy; m.sxy = sxy;
    return m;
}

CorrResult pearson_from_moments(const PairMoments& m) {
    CorrResult res;
    res.pairs = static_cast<std::size_t>(m.n);
    const double var_x = static_cast<double>(m.n * m.sxx - m.sx * m.sx);
    const double var_y = static_cast<double>(m.n * m.syy - m.sy * m.sy);
    if (var_x <= 0.0 || var_y <= 0.0) {
        res.degenerate = true; // constant series
        res.value = 0.0;
        return res;
    }
    const double cov = static_cast<double>(m.n * m.sxy - m.sx * m.sy);
    res.value = cov / std::sqrt(var_x * var_y);
    return res;
}

void check_pairs(const GrayImage& img, Direction dir) {
    int di, dj;
    direction_offset(dir, di, dj);
    if (img.height <= di || img.width <= dj)
        throw std::invalid_argument("correlation: image too small for this direction");
}

} // namespace

Histogram256 histogram(const GrayImage& img) {
    Histogram256 h;
    #pragma omp parallel
    {
        std::array<std::uint64_t, 256> local{};
        #pragma omp for schedule(static) nowait
        for (int i = 0; i < img.height; ++i) {
            const std::uint8_t* row = &img.pixels[static_cast<std::size_t>(i) * img.width];
            for (int j = 0; j < img.width; ++j) ++local[row[j]];
        }
        #pragma omp critical(lsscrypt_histogram_merge)
        for (int v = 0; v < 256; ++v) h.counts[v] += local[v];
    }
    return h;
}

double chi_square_uniform(const Histogram256& h) {
    std::uint64_t total = 0;
    for (auto c : h.counts) total += c;
    if (total == 0) return 0.0;
    const double expected = static_cast<double>(total) / 256.0;
    double stat = 0.0;
    for (auto c : h.counts) {
        double d = static_cast<double>(c) - expected;
        stat += d * d / expected;
    }
    return stat;
}

double shannon_entropy(const GrayImage& img) {
    Histogram256 h = histogram(img);
    const double total = static_cast<double>(img.size());
    double bits = 0.0;
    for (auto c : h.counts) {
        if (c == 0) continue;
        double p = static_cast<double>(c) / total;
        bits -= p * std::log2(p);
    }
    return bits;
}

GlcmMatrix glcm(const GrayImage& img) {
    if (img.width < 2) throw std::invalid_argument("glcm: width must be >= 2");
    std::array<std::uint64_t, 64> counts{};
    #pragma omp parallel
    {
        std::array<std::uint64_t, 64> local{};
        #pragma omp for schedule(static) nowait
        for (int i = 0; i < img.height; ++i) {
            const std::uint8_t* row = &img.pixels[static_cast<std::size_t>(i) * img.width];
            for (int j = 0; j + 1 < img.width; ++j) {
                int a = row[j] >> 5; // v*8/256
                int b = row[j + 1] >> 5;
                ++local[a * 8 + b];
            }
        }
        #pragma omp critical(lsscrypt_glcm_merge)
        for (int k = 0; k < 64; ++k) counts[k] += local[k];
    }
    GlcmMatrix g;
    const double total = static_cast<double>(img.height) * (img.width - 1);
    for (int k = 0; k < 64; ++k) g.probs[k] = static_cast<double>(counts[k]) / total;
    return g;
}

GlcmMetrics glcm_metrics(const GlcmMatrix& g) {
    GlcmMetrics m{0.0, 0.0, 0.0};
    for (int a = 0; a < 8; ++a) {
        for (int b = 0; b < 8; ++b) {
            double p = g.at(a, b);
            int d = a - b;
            m.homogeneity += p / (1.0 + std::abs(d));
            m.contrast += static_cast<double>(d) * d * p;
            m.energy += p * p;
        }
    }
    return m;
}

CorrResult adjacent_correlation(const GrayImage& img, Direction dir) {
    check_pairs(img, dir);
    return pearson_from_moments(directional_moments(img, img, dir));
}

CorrResult cross_correlation(const GrayImage& a, const GrayImage& b, Direction dir) {
    if (a.height != b.height || a.width != b.width)
        throw std::invalid_argument("cross_correlation: dimension mismatch");
    check_pairs(a, dir);
    return pearson_from_moments(directional_moments(a, b, dir));
}

CorrelationReport correlation_report(const GrayImage& img) {
    CorrResult v = adjacent_correlation(img, Direction::vertical);
    CorrResult h = adjacent_correlation(img, Direction::horizontal);
    CorrResult d = adjacent_correlation(img, Direction::diagonal);
    return {v.value, h.value, d.value, v.pairs + h.pairs + d.pairs};
}

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.empty())
        throw std::invalid_argument("pearson: series must be non-empty and equal length");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i]; sy += y[i];
        sxx += x[i] * x[i]; syy += y[i] * y[i]; sxy += x[i] * y[i];
    }
    double var_x = n * sxx - sx * sx;
    double var_y = n * syy - sy * sy;
    if (var_x <= 0.0 || var_y <= 0.0) return 0.0;
    return (n * sxy - sx * sy) / std::sqrt(var_x * var_y);
}

std::vector<std::pair<std::uint8_t, std::uint8_t>>
scatter_sample(const GrayImage& img, Direction dir, std::size_t n, std::uint64_t seed) {
    int di, dj;
    direction_offset(dir, di, dj);
    const std::int64_t rows = img.height - di;
    const std::int64_t cols = img.width - dj;
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("scatter_sample: image too small");
    const std::uint64_t available = static_cast<std::uint64_t>(rows) * static_cast<std::uint64_t>(cols);
    if (n > available) throw std::invalid_argument("scatter_sample: n exceeds available pairs");

    // Partial Fisher-Yates over pair indices. splitmix64 keeps the sample
    // identical across standard libraries (uniform_int_distribution is not
    // portable).
    std::uint64_t s = seed;
    auto next_u64 = [&s]() {
        s += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    };

    std::vector<std::uint64_t> pool(available);
    for (std::uint64_t i = 0; i < available; ++i) pool[i] = i;
    std::vector<std::pair<std::uint8_t, std::uint8_t>> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::uint64_t pick = k + next_u64() % (available - k);
        std::swap(pool[k], pool[pick]);
        int i = static_cast<int>(pool[k] / static_cast<std::uint64_t>(cols));
        int j = static_cast<int>(pool[k] % static_cast<std::uint64_t>(cols));
        out.emplace_back(img.at(i, j), img.at(i + di, j + dj));
    }
    return out;
}

void write_histogram_csv(std::ostream& out, const Histogram256& h) {
    out << "value,count\n";
    for (int v = 0; v < 256; ++v) out << v << ',' << h.counts[v] << '\n';
}

void write_scatter_csv(std::ostream& out, const std::vector<std::pair<std::uint8_t, std::uint8_t>>& pairs) {
    out << "v,neighbor\n";
    for (const auto& [v, nb] : pairs) out << static_cast<int>(v) << ',' << static_cast<int>(nb) << '\n';
}

void write_metrics_csv(std::ostream& out, const std::vector<std::pair<std::string, double>>& metrics) {
    out << "metric,value\n";
    char buf[64];
    for (const auto& [name, value] : metrics) {
        std::snprintf(buf, sizeof(buf), "%.17g", value);
        out << name << ',' << buf << '\n';
    }
}

} // namespace lsscrypt

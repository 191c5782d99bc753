#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lsscrypt/image.hpp"

namespace lsscrypt {

struct Histogram256 {
    std::array<std::uint64_t, 256> counts{};
};

Histogram256 histogram(const GrayImage& img);

/// Chi-square statistic of the histogram against the uniform expectation.
double chi_square_uniform(const Histogram256& h);

/// -sum p log2 p over the pixel-value histogram; 0 for constant images,
/// 8 for an exactly uniform one.
double shannon_entropy(const GrayImage& img);

/// 8-level right-neighbor co-occurrence matrix, normalized, non-symmetric.
/// Levels are v*8/256.
struct GlcmMatrix {
    std::array<double, 64> probs{};

    double at(int a, int b) const { return probs[static_cast<std::size_t>(a) * 8 + b]; }
};

GlcmMatrix glcm(const GrayImage& img);

struct GlcmMetrics {
    double homogeneity; // sum p/(1+|a-b|)
    double contrast;    // sum (a-b)^2 p
    double energy;      // sum p^2
};

GlcmMetrics glcm_metrics(const GlcmMatrix& g);

enum class Direction { vertical, horizontal, diagonal };

struct CorrResult {
    double value = 0.0;
    std::size_t pairs = 0;
    bool degenerate = false; // a zero-variance series; value reported as 0
};

/// Pearson correlation over the full population of (pixel, neighbor) pairs.
/// Offsets: vertical (+1,0), horizontal (0,+1), diagonal (+1,+1).
CorrResult adjacent_correlation(const GrayImage& img, Direction dir);

/// Pearson correlation pairing a(i,j) with b at the directional offset.
CorrResult cross_correlation(const GrayImage& a, const GrayImage& b, Direction dir);

struct CorrelationReport {
    double vertical;
    double horizontal;
    double diagonal;
    std::size_t sample_count;
};

CorrelationReport correlation_report(const GrayImage& img);

/// Plain Pearson on two equal-length series (test and plot helper).
double pearson(std::span<const double> x, std::span<const double> y);

/// Reproducible sample of n (value, neighbor) pairs for scatter export.
std::vector<std::pair<std::uint8_t, std::uint8_t>>
scatter_sample(const GrayImage& img, Direction dir, std::size_t n, std::uint64_t seed);

void write_histogram_csv(std::ostream& out, const Histogram256& h);
void write_scatter_csv(std::ostream& out, const std::vector<std::pair<std::uint8_t, std::uint8_t>>& pairs);
void write_metrics_csv(std::ostream& out, const std::vector<std::pair<std::string, double>>& metrics);

} // namespace lsscrypt

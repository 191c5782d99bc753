#pragma once

// Shared fixtures: the repository's fixed test key and two deterministic
// 256x256 grayscale scenes. The scenes are smooth wave/gradient mixtures,
// rank-equalized so every byte value appears exactly 256 times; adjacent
// pixels stay strongly correlated (> 0.99 horizontally).

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "lsscrypt/cipher.hpp"
#include "lsscrypt/image.hpp"
#include "lsscrypt/permute.hpp"

namespace fixtures {

inline constexpr double kTestR = 3.93;
inline constexpr double kTestX0 = 0.4142135623;
inline constexpr int kTestIterations = 30;

inline lsscrypt::MasterKey test_key() {
    return lsscrypt::MasterKey(lsscrypt::ChaosParams(kTestR, kTestX0), kTestIterations);
}

inline lsscrypt::GrayImage equalize(const std::vector<double>& field, int n) {
    auto order = lsscrypt::argsort_keys(field);
    lsscrypt::GrayImage img(n, n);
    const std::size_t per_value = field.size() / 256;
    for (std::size_t rank = 0; rank < order.size(); ++rank)
        img.pixels[order[rank]] = static_cast<std::uint8_t>(rank / per_value);
    return img;
}

// Crossing wave packets over a gentle ramp.
inline lsscrypt::GrayImage scene_waves(int n = 256) {
    constexpr double tau = 2.0 * std::numbers::pi;
    std::vector<double> field(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double v = 110.0 * std::sin(tau * i / 181.0) * std::cos(tau * j / 211.0)
                     + 70.0 * std::sin(tau * (i + j) / 97.0)
                     + 55.0 * std::cos(tau * (2.0 * i - j) / 139.0)
                     + 0.35 * i + 0.6 * j;
            field[static_cast<std::size_t>(i) * n + j] = v;
        }
    }
    return equalize(field, n);
}

// Interference ripples with a diagonal drift.
inline lsscrypt::GrayImage scene_ripples(int n = 256) {
    constexpr double tau = 2.0 * std::numbers::pi;
    std::vector<double> field(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double v = 95.0 * std::cos(tau * i / 157.0) * std::sin(tau * j / 233.0)
                     + 65.0 * std::sin(tau * (i - j) / 109.0)
                     + 50.0 * std::sin(tau * i / 61.0) * std::sin(tau * j / 83.0)
                     + 0.3 * i + 0.55 * j;
            field[static_cast<std::size_t>(i) * n + j] = v;
        }
    }
    return equalize(field, n);
}

inline lsscrypt::GrayImage random_image(std::mt19937& gen, int h, int w) {
    lsscrypt::GrayImage img(h, w);
    for (auto& p : img.pixels) p = static_cast<std::uint8_t>(gen() & 0xFF);
    return img;
}

inline lsscrypt::MasterKey random_key(std::mt19937& gen) {
    std::uniform_real_distribution<double> r_dist(0.5, 3.99);
    std::uniform_real_distribution<double> x_dist(0.01, 0.99);
    std::uniform_int_distribution<int> i_dist(1, 60);
    return lsscrypt::MasterKey(lsscrypt::ChaosParams(r_dist(gen), x_dist(gen)), i_dist(gen));
}

} // namespace fixtures

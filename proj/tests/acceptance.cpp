// Acceptance suite: runs every gate criterion end to end and prints one
// PASS/FAIL line each. Exit code is the number of failed criteria.

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lsscrypt/analysis.hpp"
#include "lsscrypt/automata.hpp"
#include "lsscrypt/chaos.hpp"
#include "lsscrypt/cipher.hpp"
#include "support/fixtures.hpp"

using namespace lsscrypt;

namespace {

int failures = 0;

void report(int criterion, bool ok, const char* what, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion, what, detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(const char* f, ...) {
    char buf[256];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof(buf), f, args);
    va_end(args);
    return buf;
}

// 1. decrypt(encrypt(x,k),k) == x for >= 1000 random (image, key) pairs
//    across 16x16, 64x64 and 256x256.
void criterion_round_trip() {
    std::mt19937 gen(0xACCE01);
    int total = 0, ok = 0;
    auto run = [&](int size, int reps) {
        for (int t = 0; t < reps; ++t) {
            GrayImage img = fixtures::random_image(gen, size, size);
            MasterKey key = fixtures::random_key(gen);
            ++total;
            if (decrypt(encrypt(img, key), key) == img) ++ok;
        }
    };
    run(16, 700);
    run(64, 250);
    run(256, 50);
    report(1, ok == total && total >= 1000, "exact round trip",
           fmt("%d/%d pairs across 16/64/256", ok, total));
}

// 2. Shannon entropy of both fixed-key ciphertexts >= 7.99.
void criterion_entropy(const GrayImage& ct_a, const GrayImage& ct_b) {
    double ea = shannon_entropy(ct_a);
    double eb = shannon_entropy(ct_b);
    report(2, ea >= 7.99 && eb >= 7.99, "ciphertext entropy >= 7.99",
           fmt("waves %.5f, ripples %.5f", ea, eb));
}

// 3. GLCM metrics of both ciphertexts inside the published bands, after the
//    closed-form uniform-GLCM check at 1e-12.
void criterion_glcm(const GrayImage& ct_a, const GrayImage& ct_b) {
    GlcmMatrix uniform;
    for (double& p : uniform.probs) p = 1.0 / 64.0;
    GlcmMetrics ideal = glcm_metrics(uniform);
    bool closed_form = std::abs(ideal.energy - 0.015625) <= 1e-12 &&
                       std::abs(ideal.contrast - 10.5) <= 1e-12 &&
                       std::abs(ideal.homogeneity - 0.3893973214285714) <= 1e-12;

    bool in_band = true;
    std::string detail;
    for (const GrayImage* ct : {&ct_a, &ct_b}) {
        GlcmMetrics m = glcm_metrics(glcm(*ct));
        in_band = in_band && std::abs(m.energy - 0.0156) <= 0.002 &&
                  std::abs(m.contrast - 10.5) <= 0.4 && std::abs(m.homogeneity - 0.389) <= 0.01;
        detail += fmt("[hom %.4f con %.3f ene %.5f]", m.homogeneity, m.contrast, m.energy);
    }
    report(3, closed_form && in_band, "GLCM closed form + ciphertext bands", detail);
}

// 4. Ciphertext adjacent correlations <= 0.02 in magnitude in all three
//    directions; plaintext horizontal baseline above 0.8.
void criterion_adjacent(const GrayImage& plain_a, const GrayImage& plain_b,
                        const GrayImage& ct_a, const GrayImage& ct_b) {
    double worst = 0.0;
    for (const GrayImage* ct : {&ct_a, &ct_b})
        for (Direction d : {Direction::vertical, Direction::horizontal, Direction::diagonal})
            worst = std::max(worst, std::abs(adjacent_correlation(*ct, d).value));
    double base_a = adjacent_correlation(plain_a, Direction::horizontal).value;
    double base_b = adjacent_correlation(plain_b, Direction::horizontal).value;
    report(4, worst <= 0.02 && base_a > 0.8 && base_b > 0.8,
           "adjacent correlation broken", fmt("worst |cipher| %.5f, baselines %.3f/%.3f", worst, base_a, base_b));
}

// 5. Plaintext-to-ciphertext correlations <= 0.02 in magnitude.
void criterion_cross(const GrayImage& plain_a, const GrayImage& plain_b,
                     const GrayImage& ct_a, const GrayImage& ct_b) {
    double worst = 0.0;
    for (Direction d : {Direction::vertical, Direction::horizontal, Direction::diagonal}) {
        worst = std::max(worst, std::abs(cross_correlation(plain_a, ct_a, d).value));
        worst = std::max(worst, std::abs(cross_correlation(plain_b, ct_b, d).value));
    }
    report(5, worst <= 0.02, "plaintext-ciphertext correlation", fmt("worst %.5f", worst));
}

// 6. rule30_local truth table plus oracle-checked trajectories on >= 500
//    random rows (width <= 64, steps <= 64).
void criterion_rule30() {
    static const int truth[8][4] = {
        {0, 0, 1, 1}, {0, 1, 1, 1}, {0, 1, 0, 1}, {1, 0, 0, 1},
        {0, 0, 0, 0}, {1, 0, 1, 0}, {1, 1, 0, 0}, {1, 1, 1, 0},
    };
    bool table_ok = true;
    for (const auto& row : truth)
        table_ok = table_ok && rule30_local(row[0], row[1], row[2]) == row[3];

    std::mt19937 gen(0xACCE06);
    int cases = 0, good = 0;
    for (int t = 0; t < 500; ++t) {
        Cells1D row(1 + gen() % 64);
        for (auto& c : row) c = static_cast<std::uint8_t>(gen() & 1);
        int steps = static_cast<int>(gen() % 65);
        auto traj = evolve_1d(row, steps);
        bool match = traj.size() == static_cast<std::size_t>(steps) + 1;
        Cells1D cur = row;
        for (int s = 1; s <= steps && match; ++s) {
            Cells1D next(cur.size());
            for (std::size_t i = 0; i < cur.size(); ++i) {
                int l = i > 0 ? cur[i - 1] : 0;
                int r = i + 1 < cur.size() ? cur[i + 1] : 0;
                next[i] = static_cast<std::uint8_t>(l ^ (cur[i] | r));
            }
            cur = next;
            match = traj[s] == cur;
        }
        ++cases;
        if (match) ++good;
    }
    report(6, table_ok && good == cases, "rule 30 exactness",
           fmt("truth table %s, %d/%d trajectories", table_ok ? "ok" : "BAD", good, cases));
}

// 7. evolve_mask equals per-bit-plane 1D evolution on >= 200 random
//    matrices, exactly.
void criterion_bit_planes() {
    std::mt19937 gen(0xACCE07);
    int good = 0;
    const int cases = 200;
    for (int t = 0; t < cases; ++t) {
        MaskMatrix m;
        for (auto& b : m.bytes) b = static_cast<std::uint8_t>(gen() & 0xFF);
        int iters = static_cast<int>(gen() % 50);

        MaskMatrix expected{};
        for (int bit = 0; bit < 8; ++bit) {
            for (int j = 0; j < 16; ++j) {
                Cells1D col(16);
                for (int i = 0; i < 16; ++i) col[i] = (m.at(i, j) >> bit) & 1;
                Cells1D evolved = evolve_1d(col, iters).back();
                for (int i = 0; i < 16; ++i)
                    expected.at(i, j) = static_cast<std::uint8_t>(expected.at(i, j) | (evolved[i] << bit));
            }
        }
        if (evolve_mask(m, iters) == expected) ++good;
    }
    report(7, good == cases, "byte mask equals bit-plane evolution", fmt("%d/%d exact", good, cases));
}

// 8. x0 +- 1e-12 flips >= 99% of ciphertext bytes (mean of 20 trials);
//    wrong-key decryption mismatches >= 99%.
void criterion_key_sensitivity(const GrayImage& plain) {
    double mean_flip = 0.0;
    for (int t = 0; t < 20; ++t) {
        double x0 = 0.05 + 0.0451 * t; // grid avoids x0 = 0.5, whose orbit collapses
        MasterKey a(ChaosParams(fixtures::kTestR, x0), fixtures::kTestIterations);
        MasterKey b(ChaosParams(fixtures::kTestR, x0 + 1e-12), fixtures::kTestIterations);
        GrayImage ca = encrypt(plain, a);
        GrayImage cb = encrypt(plain, b);
        std::size_t diff = 0;
        for (std::size_t k = 0; k < ca.size(); ++k)
            if (ca.pixels[k] != cb.pixels[k]) ++diff;
        mean_flip += static_cast<double>(diff) / static_cast<double>(ca.size());
    }
    mean_flip /= 20.0;

    GrayImage ct = encrypt(plain, fixtures::test_key());
    MasterKey wrong(ChaosParams(fixtures::kTestR, fixtures::kTestX0 + 1e-12), fixtures::kTestIterations);
    GrayImage bad = decrypt(ct, wrong);
    std::size_t mism = 0;
    for (std::size_t k = 0; k < plain.size(); ++k)
        if (bad.pixels[k] != plain.pixels[k]) ++mism;
    double wrong_frac = static_cast<double>(mism) / static_cast<double>(plain.size());

    report(8, mean_flip >= 0.99 && wrong_frac >= 0.99, "key avalanche",
           fmt("mean flip %.4f over 20 trials, wrong-key mismatch %.4f", mean_flip, wrong_frac));
}

// 9. 256-bin chi-square of both ciphertext histograms below the alpha=0.05
//    critical value 293.25.
void criterion_histogram(const GrayImage& ct_a, const GrayImage& ct_b) {
    double xa = chi_square_uniform(histogram(ct_a));
    double xb = chi_square_uniform(histogram(ct_b));
    report(9, xa < 293.25 && xb < 293.25, "ciphertext histogram flatness",
           fmt("chi2 %.2f and %.2f < 293.25", xa, xb));
}

// 10. Bifurcation harness: logistic fixed point at r=2.5 within 1e-9 of
//     0.6; LSS density >= 50/64 bins for >= 90 of 100 grid points.
void criterion_bifurcation() {
    auto fixed = bifurcation_scan(2.5, 2.6, 1, 1000, 200, 0.31, ScanMap::logistic);
    bool fixed_ok = fixed.size() == 200;
    double worst = 0.0;
    for (const auto& row : fixed) {
        worst = std::max(worst, std::abs(row.x - 0.6));
        fixed_ok = fixed_ok && std::abs(row.x - 0.6) < 1e-9;
    }

    auto scan = bifurcation_scan(0.1, 3.9, 100, 1000, 200, 0.31, ScanMap::lss);
    int dense = 0;
    for (int k = 0; k < 100; ++k) {
        std::set<int> bins;
        for (int i = 0; i < 200; ++i)
            bins.insert(std::min(63, static_cast<int>(scan[k * 200 + i].x * 64.0)));
        if (bins.size() >= 50) ++dense;
    }
    report(10, fixed_ok && dense >= 90, "bifurcation harness",
           fmt("fixed-point err %.2e, dense %d/100", worst, dense));
}

} // namespace

int main() {
    std::printf("fixed test key: r=%.17g x0=%.17g I=%d\n", fixtures::kTestR, fixtures::kTestX0,
                fixtures::kTestIterations);

    GrayImage plain_a = fixtures::scene_waves();
    GrayImage plain_b = fixtures::scene_ripples();
    GrayImage ct_a = encrypt(plain_a, fixtures::test_key());
    GrayImage ct_b = encrypt(plain_b, fixtures::test_key());

    criterion_round_trip();
    criterion_entropy(ct_a, ct_b);
    criterion_glcm(ct_a, ct_b);
    criterion_adjacent(plain_a, plain_b, ct_a, ct_b);
    criterion_cross(plain_a, plain_b, ct_a, ct_b);
    criterion_rule30();
    criterion_bit_planes();
    criterion_key_sensitivity(plain_a);
    criterion_histogram(ct_a, ct_b);
    criterion_bifurcation();

    if (failures == 0) std::printf("all criteria passed\n");
    else std::printf("%d criteria FAILED\n", failures);
    return failures;
}

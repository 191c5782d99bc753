#include "lsscrypt/chaos.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace lsscrypt {

namespace {

// No argument checks; callers validated at construction.
double lss_step_unchecked(double r, double x) {
    double logistic = r * x * (1.0 - x);
    double sine = (4.0 - r) * std::sin(std::numbers::pi * x) / 4.0;
    double y = logistic + sine;
    y -= std::floor(y);
    if (y >= 1.0) y -= 1.0; // floor rounding can leave exactly 1.0
    return y;
}

double logistic_step(double r, double x) {
    double y = r * x * (1.0 - x);
    y -= std::floor(y);
    if (y >= 1.0) y -= 1.0;
    return y;
}

double sine_step(double r, double x) {
    double y = (4.0 - r) * std::sin(std::numbers::pi * x) / 4.0;
    y -= std::floor(y);
    if (y >= 1.0) y -= 1.0;
    return y;
}

} // namespace

ChaosParams::ChaosParams(double r, double x0) : r_(r), x0_(x0) {
    if (!(r > 0.0) || !(r < 4.0)) throw std::domain_error("ChaosParams: r must be in (0, 4)");
    if (!(x0 > 0.0) || !(x0 < 1.0)) throw std::domain_error("ChaosParams: x0 must be in (0, 1)");
}

double lss_step(const ChaosParams& params, double x) {
    if (!(x >= 0.0) || !(x < 1.0)) throw std::domain_error("lss_step: x must be in [0, 1)");
    return lss_step_unchecked(params.r(), x);
}

double lss_step(double r, double x) {
    if (!(r > 0.0) || !(r < 4.0)) throw std::domain_error("lss_step: r must be in (0, 4)");
    if (!(x >= 0.0) || !(x < 1.0)) throw std::domain_error("lss_step: x must be in [0, 1)");
    return lss_step_unchecked(r, x);
}

ChaosStream::ChaosStream(ChaosParams params, int warmup) : params_(params), state_(params.x0()) {
    if (warmup < 0) throw std::invalid_argument("ChaosStream: warmup must be >= 0");
    for (int i = 0; i < warmup; ++i) state_ = lss_step_unchecked(params_.r(), state_);
}

double ChaosStream::next() {
    state_ = lss_step_unchecked(params_.r(), state_);
    return state_;
}

std::vector<double> ChaosStream::take(std::size_t n) {
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(next());
    return out;
}

std::uint8_t mod3_of_real(double v) {
    // llround is round-half-away-from-zero, the pinned rule
    return static_cast<std::uint8_t>(std::llround(v * 1000.0) % 3);
}

std::vector<std::uint8_t> mod3_selector_stream(ChaosStream& stream, std::size_t n) {
    std::vector<std::uint8_t> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(mod3_of_real(stream.next()));
    return out;
}

std::vector<ScanRow> bifurcation_scan(double r_min, double r_max, int r_steps,
                                      int warmup, int samples_per_r,
                                      double x0, ScanMap map) {
    if (!(r_min > 0.0) || !(r_min < r_max) || !(r_max < 4.0))
        throw std::domain_error("bifurcation_scan: need 0 < r_min < r_max < 4");
    if (r_steps < 1) throw std::invalid_argument("bifurcation_scan: r_steps must be >= 1");
    if (warmup < 0 || samples_per_r < 0) throw std::invalid_argument("bifurcation_scan: negative count");
    if (!(x0 > 0.0) || !(x0 < 1.0)) throw std::domain_error("bifurcation_scan: x0 must be in (0, 1)");

    auto step = [map](double r, double x) {
        switch (map) {
            case ScanMap::logistic: return logistic_step(r, x);
            case ScanMap::sine: return sine_step(r, x);
            default: return lss_step_unchecked(r, x);
        }
    };

    std::vector<ScanRow> rows;
    rows.reserve(static_cast<std::size_t>(r_steps) * samples_per_r);
    for (int k = 0; k < r_steps; ++k) {
        double r = r_steps == 1 ? r_min : r_min + k * (r_max - r_min) / (r_steps - 1);
        double x = x0;
        for (int i = 0; i < warmup; ++i) x = step(r, x);
        for (int i = 0; i < samples_per_r; ++i) {
            x = step(r, x);
            rows.push_back({r, x});
        }
    }
    return rows;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
    out << "r,x\n";
    char buf[64];
    for (const auto& row : rows) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", row.r, row.x);
        out << buf;
    }
}

} // namespace lsscrypt

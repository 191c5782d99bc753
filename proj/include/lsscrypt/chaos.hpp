#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace lsscrypt {

// Transient iterations discarded before a stream emits anything.
inline constexpr int kDefaultWarmup = 1000;

/// Control parameter r in (0,4) and initial state x0 in (0,1).
/// x0 = 0 is the map's fixed point and is rejected.
class ChaosParams {
  public:
    ChaosParams(double r, double x0);

    double r() const { return r_; }
    double x0() const { return x0_; }

  private:
    double r_;
    double x0_;
};

/// One iterate of the logistic-sine hybrid map:
///   (r*x*(1-x) + (4-r)*sin(pi*x)/4) mod 1
/// Throws std::domain_error outside r in (0,4), x in [0,1).
double lss_step(const ChaosParams& params, double x);
double lss_step(double r, double x);

/// Sequential iterator over the map. Deterministic: identical (r, x0,
/// warmup) give identical draws. Not safe for concurrent mutation.
class ChaosStream {
  public:
    explicit ChaosStream(ChaosParams params, int warmup = kDefaultWarmup);

    double next();
    std::vector<double> take(std::size_t n);
    const ChaosParams& params() const { return params_; }

  private:
    ChaosParams params_;
    double state_;
};

/// round(v*1000) mod 3, rounding half away from zero.
std::uint8_t mod3_of_real(double v);

/// mod3_of_real applied to n consecutive draws.
std::vector<std::uint8_t> mod3_selector_stream(ChaosStream& stream, std::size_t n);

enum class ScanMap { lss, logistic, sine };

struct ScanRow {
    double r;
    double x;
};

/// Post-warmup iterates over an inclusive r grid, for bifurcation plots.
/// The logistic/sine variants zero the other term but keep the mod-1 wrap.
std::vector<ScanRow> bifurcation_scan(double r_min, double r_max, int r_steps,
                                      int warmup, int samples_per_r,
                                      double x0 = 0.31, ScanMap map = ScanMap::lss);

/// CSV with header "r,x", 17 significant digits.
void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);

} // namespace lsscrypt

#ifndef VZ0_ANTENNA_HPP
#define VZ0_ANTENNA_HPP

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace vz0 {

struct FrequencySample {
    double f_mhz = 0.0;
    double eff_pct = 0.0;   // radiation efficiency, percent
    double gmax_dbi = 0.0;  // maximum pattern gain
    double gmin_dbi = 0.0;  // minimum pattern gain
    double gfwd_dbi = 0.0;  // forward (+x axis) gain
    double rin_ohm = 0.0;   // input resistance
    double xin_ohm = 0.0;   // input reactance
    double vswr = 0.0;      // VSWR relative to the table's z0_ohm
};

struct SweepTable {
    std::vector<FrequencySample> rows;  // strictly increasing f_mhz
    double z0_ohm = 50.0;
    // Average power gain per row when the source provides it (else empty).
    std::vector<double> avg_power_gain;
};

struct PerformanceSummary {
    double vswr_min = 0.0, vswr_max = 0.0;
    double rin_min = 0.0, rin_max = 0.0;
    double xin_min = 0.0, xin_max = 0.0;
    double eff_min = 0.0, eff_max = 0.0;
    double gmax_min = 0.0, gmax_max = 0.0;
    double gfwd_min = 0.0, gfwd_max = 0.0;
};

struct Band {
    double f_lo = 0.0, f_hi = 0.0;  // MHz
    double width = 0.0;             // f_hi - f_lo
    double fc = 0.0;                // (f_lo + f_hi)/2
    double frac_pct = 0.0;          // 100 * width / fc
};

struct YagiCoefficients {
    double c1 = 0.0, c2 = 0.0, c3 = 0.0, c4 = 0.0, c5 = 0.0, c6 = 0.0;
};

// Fitness reported for antenna models whose engine run is unusable
// (failed run or negative minimum efficiency).
inline constexpr double kInvalidModelFitness = -98765.0;

// VSWR of load Z = rin + j*xin relative to a purely resistive z0:
// |Gamma| = |(Z - z0)/(Z + z0)|, VSWR = (1 + |Gamma|)/(1 - |Gamma|),
// +infinity when |Gamma| = 1. Throws ValidationError for z0 <= 0.
double vswr(double z0, double rin, double xin);

// Componentwise min/max over rows with f_lo <= f <= f_hi.
// Throws ValidationError when no row falls in the window.
PerformanceSummary summarize(const SweepTable& table, double f_lo, double f_hi);

// Maximal runs of consecutive rows with vswr <= threshold; edges are row
// frequencies (no interpolation).
std::vector<Band> extract_bands(const SweepTable& table, double threshold);

// F = (min(eff) + 5*min(Gmax)) / (|max(Rin) - z0| * (maxVSWR - minVSWR) * (maxXin - minXin)).
// Returns kInvalidModelFitness when min efficiency is negative; throws
// std::domain_error when a denominator factor is zero.
double bowtie_fitness(const PerformanceSummary& summary, double z0);

// F = c1*G(fL) - c2*V(fL) + c3*G(fC) - c4*V(fC) + c5*G(fU) - c6*V(fU).
double yagi_fitness(const std::array<double, 3>& gfwd_dbi,
                    const std::array<double, 3>& vswr_vals,
                    const YagiCoefficients& coeffs);

// Parse a whitespace/tab-delimited sweep table (header lines skipped).
// 8 columns: F, Eff, Gmax, Gmin, Gfwd, Rin, Xin, VSWR.
// 9 columns: F, Eff, Gfwd, Gmax, Gmin, Rin, Xin, VSWR, AvgPwrGain.
// Throws ParseError (with line number) on malformed rows.
SweepTable load_sweep_table(std::istream& in, double z0);
SweepTable load_sweep_table_file(const std::string& path, double z0);

}  // namespace vz0

#endif

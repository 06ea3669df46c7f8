#include "vz0/antenna.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <limits>
#include <sstream>

#include "vz0/errors.hpp"

namespace vz0 {

double vswr(double z0, double rin, double xin) {
    if (z0 <= 0.0) throw ValidationError("vswr: z0 must be positive");
    const std::complex<double> z(rin, xin);
    const double gamma = std::abs((z - z0) / (z + z0));
    if (gamma >= 1.0) return std::numeric_limits<double>::infinity();
    return (1.0 + gamma) / (1.0 - gamma);
}

PerformanceSummary summarize(const SweepTable& table, double f_lo, double f_hi) {
    PerformanceSummary s;
    bool first = true;
    for (const auto& row : table.rows) {
        if (row.f_mhz < f_lo || row.f_mhz > f_hi) continue;
        if (first) {
            s.vswr_min = s.vswr_max = row.vswr;
            s.rin_min = s.rin_max = row.rin_ohm;
            s.xin_min = s.xin_max = row.xin_ohm;
            s.eff_min = s.eff_max = row.eff_pct;
            s.gmax_min = s.gmax_max = row.gmax_dbi;
            s.gfwd_min = s.gfwd_max = row.gfwd_dbi;
            first = false;
            continue;
        }
        s.vswr_min = std::min(s.vswr_min, row.vswr);
        s.vswr_max = std::max(s.vswr_max, row.vswr);
        s.rin_min = std::min(s.rin_min, row.rin_ohm);
        s.rin_max = std::max(s.rin_max, row.rin_ohm);
        s.xin_min = std::min(s.xin_min, row.xin_ohm);
        s.xin_max = std::max(s.xin_max, row.xin_ohm);
        s.eff_min = std::min(s.eff_min, row.eff_pct);
        s.eff_max = std::max(s.eff_max, row.eff_pct);
        s.gmax_min = std::min(s.gmax_min, row.gmax_dbi);
        s.gmax_max = std::max(s.gmax_max, row.gmax_dbi);
        s.gfwd_min = std::min(s.gfwd_min, row.gfwd_dbi);
        s.gfwd_max = std::max(s.gfwd_max, row.gfwd_dbi);
    }
    if (first) throw ValidationError("summarize: no rows in the requested window");
    return s;
}

std::vector<Band> extract_bands(const SweepTable& table, double threshold) {
    if (threshold < 1.0) throw ValidationError("extract_bands: threshold must be >= 1");
    std::vector<Band> bands;
    std::size_t i = 0;
    const auto& rows = table.rows;
    while (i < rows.size()) {
        if (rows[i].vswr > threshold) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < rows.size() && rows[j + 1].vswr <= threshold) ++j;
        Band b;
        b.f_lo = rows[i].f_mhz;
        b.f_hi = rows[j].f_mhz;
        b.width = b.f_hi - b.f_lo;
        b.fc = (b.f_lo + b.f_hi) / 2.0;
        b.frac_pct = 100.0 * b.width / b.fc;
        bands.push_back(b);
        i = j + 1;
    }
    return bands;
}

double bowtie_fitness(const PerformanceSummary& s, double z0) {
    if (s.eff_min < 0.0) return kInvalidModelFitness;
    const double d1 = std::abs(s.rin_max - z0);
    const double d2 = s.vswr_max - s.vswr_min;
    const double d3 = s.xin_max - s.xin_min;
    if (d1 == 0.0 || d2 == 0.0 || d3 == 0.0)
        throw std::domain_error("bowtie_fitness: zero denominator factor");
    return (s.eff_min + 5.0 * s.gmax_min) / (d1 * d2 * d3);
}

double yagi_fitness(const std::array<double, 3>& g, const std::array<double, 3>& v,
                    const YagiCoefficients& c) {
    return c.c1 * g[0] - c.c2 * v[0] + c.c3 * g[1] - c.c4 * v[1] + c.c5 * g[2] - c.c6 * v[2];
}

SweepTable load_sweep_table(std::istream& in, double z0) {
    SweepTable table;
    table.z0_ohm = z0;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ss >> tok) tokens.push_back(tok);
        if (tokens.empty()) continue;
        // Header / comment lines don't start with a number.
        char* end = nullptr;
        std::strtod(tokens[0].c_str(), &end);
        if (end == tokens[0].c_str()) continue;
        if (tokens.size() != 8 && tokens.size() != 9)
            throw ParseError("expected 8 or 9 columns, got " + std::to_string(tokens.size()),
                             line_no);
        std::vector<double> v;
        for (const auto& t : tokens) {
            char* e = nullptr;
            const double x = std::strtod(t.c_str(), &e);
            if (e == t.c_str() || *e != '\0')
                throw ParseError("malformed numeric field '" + t + "'", line_no);
            v.push_back(x);
        }
        FrequencySample row;
        row.f_mhz = v[0];
        row.eff_pct = v[1];
        if (tokens.size() == 8) {
            row.gmax_dbi = v[2];
            row.gmin_dbi = v[3];
            row.gfwd_dbi = v[4];
        } else {
            row.gfwd_dbi = v[2];
            row.gmax_dbi = v[3];
            row.gmin_dbi = v[4];
        }
        row.rin_ohm = v[5];
        row.xin_ohm = v[6];
        row.vswr = v[7];
        if (!table.rows.empty() && row.f_mhz <= table.rows.back().f_mhz)
            throw ParseError("frequencies must be strictly increasing", line_no);
        table.rows.push_back(row);
        if (tokens.size() == 9) table.avg_power_gain.push_back(v[8]);
    }
    return table;
}

SweepTable load_sweep_table_file(const std::string& path, double z0) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open sweep table: " + path);
    return load_sweep_table(in, z0);
}

}  // namespace vz0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <vector>

#include "vz0/antenna.hpp"
#include "vz0/errors.hpp"

using namespace vz0;

namespace {

const char* kLoadedTable = VZ0_TEST_DATA_DIR "/loaded_bowtie_sweep.tsv";
const char* kUnloadedTable = VZ0_TEST_DATA_DIR "/unloaded_bowtie_sweep.tsv";

const FrequencySample* row_at(const SweepTable& t, double f) {
    for (const auto& r : t.rows)
        if (r.f_mhz == f) return &r;
    return nullptr;
}

SweepTable random_table(std::mt19937_64& rng, int n) {
    SweepTable t;
    t.z0_ohm = 100.0;
    std::uniform_real_distribution<double> v(1.0, 4.0);
    for (int i = 0; i < n; ++i) {
        FrequencySample s;
        s.f_mhz = 100.0 + 10.0 * i;
        s.vswr = v(rng);
        t.rows.push_back(s);
    }
    return t;
}

}  // namespace

TEST_CASE("vswr basic examples") {
    CHECK(vswr(50, 50, 0) == 1.0);
    CHECK(vswr(715, 111.51, -34.45) == doctest::Approx(6.43).epsilon(0.01 / 6.43));
    CHECK(vswr(715, 361.81, 62.86) == doctest::Approx(2.00).epsilon(0.01 / 2.0));
    // Heavily reactive, mismatched load: well above the matched value.
    const double v = vswr(50, 119.38, -285.46);
    CHECK(v >= 2.67);
    CHECK(std::isfinite(v));
    CHECK(std::isinf(vswr(50, 0, 0)));  // |Gamma| = 1 at a short
    CHECK_THROWS_AS(vswr(0, 50, 0), ValidationError);
    CHECK_THROWS_AS(vswr(-5, 50, 0), ValidationError);
}

TEST_CASE("vswr symmetry and scale-invariance properties") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> z0d(1.0, 1000.0), rd(0.1, 1000.0),
        xd(-500.0, 500.0), kd(0.1, 10.0);
    for (int i = 0; i < 10000; ++i) {
        const double z0 = z0d(rng), r = rd(rng), x = xd(rng), k = kd(rng);
        const double v = vswr(z0, r, x);
        CHECK(v == vswr(z0, r, -x));                       // conjugate symmetry
        CHECK(vswr(k * z0, k * r, k * x) == doctest::Approx(v).epsilon(1e-12));
        CHECK(v >= 1.0);
    }
    for (double z0 : {1.0, 50.0, 715.0, 10000.0}) CHECK(vswr(z0, z0, 0) == 1.0);
}

TEST_CASE("loaded-table fixture loads fully") {
    SweepTable t = load_sweep_table_file(kLoadedTable, 715.0);
    CHECK(t.rows.size() == 1001);
    CHECK(t.z0_ohm == 715.0);
    CHECK(t.rows.front().f_mhz == 200.0);
    CHECK(t.rows.back().f_mhz == 15200.0);
    for (std::size_t i = 1; i < t.rows.size(); ++i)
        CHECK(t.rows[i].f_mhz > t.rows[i - 1].f_mhz);
}

TEST_CASE("tabulated VSWR column is reproduced by the formula") {
    SweepTable t = load_sweep_table_file(kLoadedTable, 715.0);
    // A fixed sample of rows spread across the sweep, plus the two anchors.
    const double sample[] = {200,  950,  1700, 2450, 3200, 3950, 4700,
                             5450, 6200, 6950, 7700, 8450, 9200, 9950,
                             12200, 12950, 13700, 14450, 15200, 800, 1655};
    int checked = 0;
    for (double f : sample) {
        const auto* r = row_at(t, f);
        REQUIRE(r != nullptr);
        CHECK(vswr(715.0, r->rin_ohm, r->xin_ohm) ==
              doctest::Approx(r->vswr).epsilon(0.011 / r->vswr));
        ++checked;
    }
    CHECK(checked >= 20);
    // Across the whole table the formula agrees within +-0.01 on all but a
    // handful of transcription-damaged rows.
    int agree = 0;
    for (const auto& r : t.rows)
        if (std::abs(vswr(715.0, r.rin_ohm, r.xin_ohm) - r.vswr) <= 0.01) ++agree;
    CHECK(agree >= 970);
}

TEST_CASE("summarize over the 800-12000 MHz window") {
    SweepTable t = load_sweep_table_file(kLoadedTable, 715.0);
    PerformanceSummary s = summarize(t, 800.0, 12000.0);
    CHECK(s.vswr_max == doctest::Approx(6.43));
    CHECK(s.eff_min == doctest::Approx(24.25));
    CHECK(s.vswr_min <= s.vswr_max);
    CHECK(s.rin_min <= s.rin_max);
    CHECK(s.xin_min <= s.xin_max);
    CHECK(s.gmax_min <= s.gmax_max);
    CHECK(s.gfwd_min <= s.gfwd_max);
}

TEST_CASE("summarize degenerate windows") {
    SweepTable t = load_sweep_table_file(kLoadedTable, 715.0);
    PerformanceSummary one = summarize(t, 800.0, 800.0);
    CHECK(one.vswr_min == one.vswr_max);
    CHECK(one.rin_min == one.rin_max);
    CHECK(one.rin_min == doctest::Approx(111.51));
    CHECK_THROWS_AS(summarize(t, 801.0, 802.0), ValidationError);
}

TEST_CASE("summarize equals a brute-force scan on random tables") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int trial = 0; trial < 200; ++trial) {
        SweepTable t;
        const int n = 2 + static_cast<int>(rng() % 30);
        for (int i = 0; i < n; ++i) {
            FrequencySample s;
            s.f_mhz = 100.0 + 5.0 * i;
            s.eff_pct = u(rng);
            s.gmax_dbi = u(rng);
            s.gmin_dbi = u(rng);
            s.gfwd_dbi = u(rng);
            s.rin_ohm = u(rng) + 20.0;
            s.xin_ohm = u(rng);
            s.vswr = 1.0 + std::abs(u(rng));
            t.rows.push_back(s);
        }
        PerformanceSummary s = summarize(t, 100.0, 1000.0);
        double vmin = std::numeric_limits<double>::infinity(), vmax = -vmin;
        double emin = vmin;
        for (const auto& r : t.rows) {
            vmin = std::min(vmin, r.vswr);
            vmax = std::max(vmax, r.vswr);
            emin = std::min(emin, r.eff_pct);
        }
        CHECK(s.vswr_min == vmin);
        CHECK(s.vswr_max == vmax);
        CHECK(s.eff_min == emin);
    }
}

TEST_CASE("band extraction reproduces the reference 2:1 bands") {
    SweepTable t = load_sweep_table_file(kLoadedTable, 715.0);
    const std::vector<Band> bands = extract_bands(t, 2.0);
    REQUIRE(bands.size() == 4);
    struct Ref {
        double lo, hi, width, frac;
    };
    const Ref refs[] = {{1655, 1865, 210, 11.9},
                        {3185, 5210, 2025, 48.2},
                        {6365, 8345, 1980, 26.9},
                        {11420, 11675, 255, 2.21}};
    for (int i = 0; i < 4; ++i) {
        CHECK(bands[i].f_lo == refs[i].lo);
        CHECK(bands[i].f_hi == refs[i].hi);
        CHECK(bands[i].width == refs[i].width);
        CHECK(bands[i].fc == (refs[i].lo + refs[i].hi) / 2.0);
        CHECK(std::abs(bands[i].frac_pct - refs[i].frac) <= 0.1);
    }
}

TEST_CASE("band extraction edge cases") {
    SweepTable t = random_table(*(new std::mt19937_64(1)), 10);
    for (auto& r : t.rows) r.vswr = 5.0;
    CHECK(extract_bands(t, 2.0).empty());  // nothing qualifies
    for (auto& r : t.rows) r.vswr = 1.5;
    const auto all = extract_bands(t, 2.0);
    REQUIRE(all.size() == 1);
    CHECK(all[0].f_lo == t.rows.front().f_mhz);
    CHECK(all[0].f_hi == t.rows.back().f_mhz);
}

TEST_CASE("band extraction equals brute-force classification on random tables") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 1000; ++trial) {
        SweepTable t = random_table(rng, 1 + static_cast<int>(rng() % 40));
        const double threshold = 2.0;
        const auto bands = extract_bands(t, threshold);
        // Brute-force row classification.
        std::vector<bool> in_band(t.rows.size(), false);
        for (const auto& b : bands) {
            CHECK(b.f_lo <= b.f_hi);
            CHECK(b.width == b.f_hi - b.f_lo);
            CHECK(b.fc == (b.f_lo + b.f_hi) / 2.0);
            for (std::size_t i = 0; i < t.rows.size(); ++i)
                if (t.rows[i].f_mhz >= b.f_lo && t.rows[i].f_mhz <= b.f_hi) {
                    CHECK(!in_band[i]);  // bands are disjoint
                    in_band[i] = true;
                }
        }
        for (std::size_t i = 0; i < t.rows.size(); ++i)
            CHECK(in_band[i] == (t.rows[i].vswr <= threshold));
        for (std::size_t i = 1; i < bands.size(); ++i)
            CHECK(bands[i].f_lo > bands[i - 1].f_hi);  // ordered
    }
}

TEST_CASE("bowtie_fitness worked example and errors") {
    PerformanceSummary s;
    s.eff_min = 50.0;
    s.gmax_min = 2.0;
    s.rin_max = 800.0;
    s.vswr_min = 1.0;
    s.vswr_max = 3.0;
    s.xin_min = -100.0;
    s.xin_max = 100.0;
    CHECK(bowtie_fitness(s, 700.0) == doctest::Approx(1.5e-3).epsilon(1e-12));

    PerformanceSummary degenerate = s;
    degenerate.rin_max = 700.0;  // max Rin == z0
    CHECK_THROWS_AS(bowtie_fitness(degenerate, 700.0), std::domain_error);
    degenerate = s;
    degenerate.vswr_max = degenerate.vswr_min;
    CHECK_THROWS_AS(bowtie_fitness(degenerate, 700.0), std::domain_error);
    degenerate = s;
    degenerate.xin_max = degenerate.xin_min;
    CHECK_THROWS_AS(bowtie_fitness(degenerate, 700.0), std::domain_error);

    PerformanceSummary invalid = s;
    invalid.eff_min = -1.0;
    CHECK(bowtie_fitness(invalid, 700.0) == kInvalidModelFitness);
}

TEST_CASE("bowtie_fitness matches a direct-arithmetic oracle on random summaries") {
    std::mt19937_64 rng(31337);
    std::uniform_real_distribution<double> u(0.5, 100.0);
    for (int trial = 0; trial < 1000; ++trial) {
        PerformanceSummary s;
        s.eff_min = u(rng);
        s.gmax_min = u(rng) - 50.0;
        s.rin_max = 100.0 + u(rng);
        s.vswr_min = 1.0 + u(rng) * 0.01;
        s.vswr_max = s.vswr_min + u(rng) * 0.1;
        s.xin_min = -u(rng);
        s.xin_max = u(rng);
        const double z0 = 300.0 + u(rng);
        const double oracle =
            (s.eff_min + 5.0 * s.gmax_min) /
            (std::abs(s.rin_max - z0) * (s.vswr_max - s.vswr_min) *
             (s.xin_max - s.xin_min));
        const double got = bowtie_fitness(s, z0);
        CHECK(got == doctest::Approx(oracle).epsilon(1e-12));
    }
}

TEST_CASE("bowtie_fitness sensitivity in min efficiency is 1/denominator") {
    PerformanceSummary s;
    s.eff_min = 50.0;
    s.gmax_min = 2.0;
    s.rin_max = 800.0;
    s.vswr_min = 1.0;
    s.vswr_max = 3.0;
    s.xin_min = -100.0;
    s.xin_max = 100.0;
    const double denom = 100.0 * 2.0 * 200.0;
    PerformanceSummary s2 = s;
    s2.eff_min += 1.0;
    CHECK(bowtie_fitness(s2, 700.0) - bowtie_fitness(s, 700.0) ==
          doctest::Approx(1.0 / denom).epsilon(1e-12));
}

TEST_CASE("yagi_fitness worked example and oracle") {
    YagiCoefficients c{0.2, 2.0, 1.0, 4.0, 1.0, 0.4};
    CHECK(yagi_fitness({8.0, 9.0, 11.0}, {1.5, 1.2, 1.8}, c) ==
          doctest::Approx(13.08).epsilon(1e-12));
    CHECK(yagi_fitness({8.0, 9.0, 11.0}, {1.5, 1.2, 1.8}, YagiCoefficients{}) == 0.0);

    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::array<double, 3> g{u(rng), u(rng), u(rng)};
        const std::array<double, 3> v{1.0 + std::abs(u(rng)), 1.0 + std::abs(u(rng)),
                                      1.0 + std::abs(u(rng))};
        YagiCoefficients cc{std::abs(u(rng)), std::abs(u(rng)), std::abs(u(rng)),
                            std::abs(u(rng)), std::abs(u(rng)), std::abs(u(rng))};
        const double oracle = cc.c1 * g[0] - cc.c2 * v[0] + cc.c3 * g[1] -
                              cc.c4 * v[1] + cc.c5 * g[2] - cc.c6 * v[2];
        CHECK(yagi_fitness(g, v, cc) == doctest::Approx(oracle).epsilon(1e-12));
    }
}

TEST_CASE("nine-column (unloaded) table parses with average power gain") {
    SweepTable t = load_sweep_table_file(kUnloadedTable, 715.0);
    CHECK(t.rows.size() == 992);
    CHECK(t.avg_power_gain.size() == t.rows.size());
    for (double agt : t.avg_power_gain) CHECK(agt > 0.0);
}

TEST_CASE("table parser error handling") {
    std::istringstream bad("F Eff\n100 1 2 3\n");
    CHECK_THROWS_AS(load_sweep_table(bad, 50.0), ParseError);
    std::istringstream nonmono("100 1 2 3 4 5 6 7\n100 1 2 3 4 5 6 7\n");
    CHECK_THROWS_AS(load_sweep_table(nonmono, 50.0), ParseError);
    CHECK_THROWS_AS(load_sweep_table_file("/nonexistent/file.tsv", 50.0), ParseError);
}

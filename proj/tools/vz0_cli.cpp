// Command-line surface for the optimization toolkit: benchmark sweeps,
// sweep-table analytics, deck generation, listing parsing, and full
// optimization runs against an external modeling engine.

#include <sys/stat.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "vz0/antenna.hpp"
#include "vz0/benchmarks.hpp"
#include "vz0/cfo.hpp"
#include "vz0/errors.hpp"
#include "vz0/nec.hpp"
#include "vz0/report.hpp"

namespace {

using namespace vz0;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitEngine = 3;
constexpr int kExitParse = 4;
constexpr int kExitInternal = 5;

void ensure_dir(const std::string& path) {
    ::mkdir(path.c_str(), 0755);
}

struct CfoCliOverrides {
    int nt = -1;
    int n_gamma = -1;
    int max_np = -1;

    void apply(CfoParams& params) const {
        if (nt >= 0) params.nt = nt;
        if (n_gamma >= 1) params.n_gamma = n_gamma;
        if (max_np >= 2) params.max_np_per_dim = max_np;
    }
};

RunRecord run_benchmark_sweep(const std::string& name, const CfoParams& params,
                              const std::string& out_dir) {
    const BenchmarkSpec* spec = find_benchmark(name);
    if (!spec) throw ValidationError("unknown benchmark: " + name);

    DecisionSpace space = DecisionSpace::from_bounds(spec->lower, spec->upper);
    const auto t0 = std::chrono::steady_clock::now();
    SweepResult result = sweep(spec->evaluator, space, params);
    const auto t1 = std::chrono::steady_clock::now();

    ensure_dir(out_dir);
    write_series(out_dir + "/best_fitness.dat", result.best_history.best_fitness);
    write_series(out_dir + "/davg.dat", result.best_history.davg);
    write_series(out_dir + "/best_probe.dat", result.best_history.best_probe);

    RunRecord record;
    record.config["objective"] = spec->name;
    record.config["nt"] = std::to_string(params.nt);
    record.config["n_gamma"] = std::to_string(params.n_gamma);
    record.config["max_np_per_dim"] = std::to_string(params.max_np_per_dim);
    record.best = result.best;
    record.evaluations = result.evaluations;
    record.wall_time_s = std::chrono::duration<double>(t1 - t0).count();
    record.series_files = {"best_fitness.dat", "davg.dat", "best_probe.dat"};
    write_run_record(out_dir + "/runrecord.json", record);

    std::cout << spec->name << ": best fitness " << format_double(result.best.fitness)
              << " at step " << result.best.step << " (probe " << result.best.probe
              << ", Np/Nd " << result.best.np_per_dim << ", gamma "
              << format_double(result.best.gamma) << ", " << result.evaluations
              << " evaluations)\n";
    return record;
}

int cmd_analyze(const std::string& table_path, double z0, double threshold,
                double f_lo, double f_hi, const std::string& out_path) {
    SweepTable table = load_sweep_table_file(table_path, z0);
    // The VSWR column is recomputed against the requested z0 so analyses are
    // consistent regardless of the table's original reference impedance.
    for (auto& row : table.rows) row.vswr = vswr(z0, row.rin_ohm, row.xin_ohm);

    if (f_lo < 0.0) f_lo = table.rows.front().f_mhz;
    if (f_hi < 0.0) f_hi = table.rows.back().f_mhz;

    std::ostringstream out;
    out << "band,f_lo_mhz,f_hi_mhz,width_mhz,fc_mhz,frac_pct\n";
    const auto bands = extract_bands(table, threshold);
    char frac[32];
    for (std::size_t i = 0; i < bands.size(); ++i) {
        std::snprintf(frac, sizeof frac, "%.1f", bands[i].frac_pct);
        out << (i + 1) << ',' << format_double(bands[i].f_lo) << ','
            << format_double(bands[i].f_hi) << ',' << format_double(bands[i].width) << ','
            << format_double(bands[i].fc) << ',' << frac << '\n';
    }
    const PerformanceSummary s = summarize(table, f_lo, f_hi);
    out << "metric,min,max\n";
    out << "vswr," << format_double(s.vswr_min) << ',' << format_double(s.vswr_max) << '\n';
    out << "rin_ohm," << format_double(s.rin_min) << ',' << format_double(s.rin_max) << '\n';
    out << "xin_ohm," << format_double(s.xin_min) << ',' << format_double(s.xin_max) << '\n';
    out << "eff_pct," << format_double(s.eff_min) << ',' << format_double(s.eff_max) << '\n';
    out << "gmax_dbi," << format_double(s.gmax_min) << ',' << format_double(s.gmax_max) << '\n';
    out << "gfwd_dbi," << format_double(s.gfwd_min) << ',' << format_double(s.gfwd_max) << '\n';

    if (out_path.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream f(out_path);
        if (!f) throw ValidationError("cannot write: " + out_path);
        f << out.str();
    }
    return kExitOk;
}

BowtieDesign bowtie_from_kv(const KeyValues& kv) {
    BowtieDesign d;
    d.arm_len_m = kv.get_double("arm_len");
    d.half_angle_deg = kv.get_double("half_angle");
    d.load_seg = kv.get_int("load_seg");
    d.r_load_ohm = kv.get_double("r_load");
    d.z0_ohm = kv.get_double("z0");
    return d;
}

YagiDesign yagi_from_kv(const KeyValues& kv) {
    YagiDesign d;
    d.n_elements = kv.get_int("n_elements");
    for (int i = 1; i <= d.n_elements; ++i) {
        d.lengths_wl.push_back(kv.get_double("length" + std::to_string(i)));
        d.spacings_wl.push_back(i == 1 ? kv.get_double("spacing1", 0.0)
                                       : kv.get_double("spacing" + std::to_string(i)));
    }
    d.z0_ohm = kv.get_double("z0");
    return d;
}

int cmd_necgen(const std::string& design_path, const std::string& out_path) {
    const KeyValues kv = load_key_values(design_path);
    const std::string type = kv.get_str("type");
    FreqRange freq;
    freq.start_mhz = kv.get_double("freq_start");
    freq.step_mhz = kv.get_double("freq_step");
    freq.count = kv.get_int("freq_count");

    NecDeck deck;
    if (type == "bowtie") {
        deck = gen_bowtie_deck(bowtie_from_kv(kv), freq);
    } else if (type == "yagi") {
        deck = gen_yagi_deck(yagi_from_kv(kv), freq);
    } else {
        throw ValidationError("design type must be 'bowtie' or 'yagi', got '" + type + "'");
    }
    std::ofstream f(out_path);
    if (!f) throw ValidationError("cannot write deck: " + out_path);
    f << deck.text();
    std::cout << "wrote " << deck.lines.size() << " cards to " << out_path
              << " (file ID " << deck.file_id << ")\n";
    return kExitOk;
}

int cmd_necparse(const std::string& listing_path, double z0, int angles) {
    std::ifstream f(listing_path);
    if (!f) throw ParseError("cannot open listing: " + listing_path);
    std::ostringstream buf;
    buf << f.rdbuf();
    const NecRunOutput out = parse_nec_output(buf.str(), z0, angles);
    if (!out.run_completed) {
        std::cerr << "engine failure: listing has no RUN TIME marker\n";
        return kExitEngine;
    }
    std::cout << "f_mhz\teff_pct\tgmax_dbi\tgmin_dbi\tgfwd_dbi\trin_ohm\txin_ohm\tvswr\n";
    for (const auto& r : out.table.rows) {
        std::cout << format_double(r.f_mhz) << '\t' << format_double(r.eff_pct) << '\t'
                  << format_double(r.gmax_dbi) << '\t' << format_double(r.gmin_dbi) << '\t'
                  << format_double(r.gfwd_dbi) << '\t' << format_double(r.rin_ohm) << '\t'
                  << format_double(r.xin_ohm) << '\t' << format_double(r.vswr) << '\n';
    }
    return kExitOk;
}

std::string engine_path_from(const KeyValues& kv) {
    if (kv.has("engine")) return kv.get_str("engine");
    if (const char* env = std::getenv("VZ0_NEC_ENGINE")) return env;
    return "";
}

int cmd_optimize(const std::string& config_path) {
    const KeyValues kv = load_key_values(config_path);
    const std::string objective = kv.get_str("objective");
    const std::string out_dir = kv.get_str("out_dir", "out");
    CfoParams params;
    apply_cfo_overrides(kv, params);

    if (objective != "bowtie" && objective != "yagi") {
        run_benchmark_sweep(objective, params, out_dir);
        return kExitOk;
    }

    const std::string engine = engine_path_from(kv);
    if (engine.empty()) {
        std::cerr << "refused: objective '" << objective
                  << "' needs an external modeling engine; set 'engine' in the config "
                     "or the VZ0_NEC_ENGINE environment variable\n";
        return kExitValidation;
    }
    const std::string workdir = kv.get_str("workdir", out_dir + "/engine");
    ensure_dir(out_dir);
    ensure_dir(workdir);

    Objective fn;
    std::map<std::string, std::string> config_snapshot(kv.items());
    DecisionSpace space;

    if (objective == "bowtie") {
        const double band_lo = kv.get_double("band_lo", 800.0);
        const double band_hi = kv.get_double("band_hi", 12000.0);
        FreqRange freq;
        freq.start_mhz = kv.get_double("freq_start", 800.0);
        freq.step_mhz = kv.get_double("freq_step", 100.0);
        freq.count = kv.get_int("freq_count", 113);

        Eigen::VectorXd lo(5), hi(5);
        lo << 0.01, 10.0, 1.0, 1.0, 50.0;
        hi << 0.08, 80.0, 9.0, 1000.0, 1000.0;
        space = DecisionSpace::from_bounds(lo, hi);

        fn = [=](const Eigen::VectorXd& x) {
            BowtieDesign d;
            d.arm_len_m = x(0);
            d.half_angle_deg = x(1);
            d.load_seg = std::max(static_cast<int>(x(2)), 1);
            d.r_load_ohm = x(3);
            d.z0_ohm = x(4);
            try {
                const NecDeck deck = gen_bowtie_deck(d, freq);
                const NecRunOutput out = run_engine(deck, engine, workdir, d.z0_ohm);
                if (!out.run_completed) return kInvalidModelFitness;
                const PerformanceSummary s = summarize(out.table, band_lo, band_hi);
                if (s.eff_min < 0.0) return kInvalidModelFitness;
                return bowtie_fitness(s, d.z0_ohm);
            } catch (const std::domain_error&) {
                return kInvalidModelFitness;
            }
        };
    } else {
        const int n_el = kv.get_int("n_elements", 6);
        const double f_l = kv.get_double("f_l", 275.0);
        const double f_c = kv.get_double("f_c", 300.0);
        const double f_u = kv.get_double("f_u", 325.0);
        YagiCoefficients coeffs;
        coeffs.c1 = kv.get_double("c1", 0.2);
        coeffs.c2 = kv.get_double("c2", 2.0);
        coeffs.c3 = kv.get_double("c3", 1.0);
        coeffs.c4 = kv.get_double("c4", 4.0);
        coeffs.c5 = kv.get_double("c5", 1.0);
        coeffs.c6 = kv.get_double("c6", 0.4);
        FreqRange freq;
        freq.start_mhz = f_l;
        freq.step_mhz = (f_u - f_l) / 2.0;
        freq.count = 3;

        // Layout: n_el spacings (first fixed at 0), n_el lengths, then z0.
        const int nd = 2 * n_el + 1;
        Eigen::VectorXd lo(nd), hi(nd);
        lo(0) = hi(0) = 0.0;
        for (int i = 1; i < n_el; ++i) {
            lo(i) = 0.1;
            hi(i) = 0.5;
        }
        for (int i = n_el; i < 2 * n_el; ++i) {
            lo(i) = 0.2;
            hi(i) = 0.6;
        }
        lo(nd - 1) = 5.0;
        hi(nd - 1) = 600.0;
        space = DecisionSpace::from_bounds(lo, hi);

        fn = [=](const Eigen::VectorXd& x) {
            YagiDesign d;
            d.n_elements = n_el;
            for (int i = 0; i < n_el; ++i) d.spacings_wl.push_back(x(i));
            for (int i = 0; i < n_el; ++i) d.lengths_wl.push_back(x(n_el + i));
            d.z0_ohm = x(2 * n_el);
            try {
                const NecDeck deck = gen_yagi_deck(d, freq);
                const NecRunOutput out = run_engine(deck, engine, workdir, d.z0_ohm);
                if (!out.run_completed || out.table.rows.size() < 3)
                    return kInvalidModelFitness;
                const auto& r = out.table.rows;
                return yagi_fitness({r[0].gfwd_dbi, r[1].gfwd_dbi, r[2].gfwd_dbi},
                                    {r[0].vswr, r[1].vswr, r[2].vswr}, coeffs);
            } catch (const std::domain_error&) {
                return kInvalidModelFitness;
            }
        };
        config_snapshot["f_l"] = format_double(f_l);
        config_snapshot["f_c"] = format_double(f_c);
        config_snapshot["f_u"] = format_double(f_u);
    }

    const auto t0 = std::chrono::steady_clock::now();
    SweepResult result = sweep(fn, space, params);
    const auto t1 = std::chrono::steady_clock::now();

    write_series(out_dir + "/best_fitness.dat", result.best_history.best_fitness);
    write_series(out_dir + "/davg.dat", result.best_history.davg);
    write_series(out_dir + "/best_probe.dat", result.best_history.best_probe);

    RunRecord record;
    record.config = config_snapshot;
    record.best = result.best;
    record.evaluations = result.evaluations;
    record.wall_time_s = std::chrono::duration<double>(t1 - t0).count();
    record.series_files = {"best_fitness.dat", "davg.dat", "best_probe.dat"};
    write_run_record(out_dir + "/runrecord.json", record);

    std::cout << objective << ": best fitness " << format_double(result.best.fitness)
              << " (" << result.evaluations << " evaluations)\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deterministic CFO optimization toolkit with antenna analytics"};
    app.require_subcommand(1);

    // bench
    auto* bench = app.add_subcommand("bench", "run the default sweep on a catalog benchmark");
    std::string bench_name;
    std::string bench_out = "out";
    CfoCliOverrides bench_ov;
    bench->add_option("name", bench_name, "benchmark name")->required();
    bench->add_option("--out", bench_out, "output directory");
    bench->add_option("--nt", bench_ov.nt, "max time steps");
    bench->add_option("--n-gamma", bench_ov.n_gamma, "gamma grid size");
    bench->add_option("--max-np", bench_ov.max_np, "max probes per dimension");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "band extraction and window summary of a sweep table");
    std::string an_table, an_out;
    double an_z0 = 50.0, an_threshold = 2.0, an_flo = -1.0, an_fhi = -1.0;
    analyze->add_option("table", an_table, "sweep table path")->required();
    analyze->add_option("--z0", an_z0, "reference impedance, ohms")->required();
    analyze->add_option("--threshold", an_threshold, "VSWR band threshold");
    analyze->add_option("--flo", an_flo, "summary window lower edge, MHz");
    analyze->add_option("--fhi", an_fhi, "summary window upper edge, MHz");
    analyze->add_option("--out", an_out, "write CSV here instead of stdout");

    // necgen
    auto* necgen = app.add_subcommand("necgen", "generate an input card deck from a design file");
    std::string ng_design, ng_out = "deck.nec";
    necgen->add_option("design", ng_design, "design key/value file")->required();
    necgen->add_option("--out", ng_out, "deck output path");

    // necparse
    auto* necparse = app.add_subcommand("necparse", "parse an engine output listing to TSV");
    std::string np_listing;
    double np_z0 = 50.0;
    int np_angles = 19;
    necparse->add_option("listing", np_listing, "engine output listing")->required();
    necparse->add_option("--z0", np_z0, "reference impedance, ohms")->required();
    necparse->add_option("--angles", np_angles, "pattern rows per frequency block");

    // optimize
    auto* optimize = app.add_subcommand("optimize", "full optimization run from a config file");
    std::string opt_config;
    optimize->add_option("config", opt_config, "run config key/value file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (bench->parsed()) {
            CfoParams params;
            bench_ov.apply(params);
            run_benchmark_sweep(bench_name, params, bench_out);
            return kExitOk;
        }
        if (analyze->parsed())
            return cmd_analyze(an_table, an_z0, an_threshold, an_flo, an_fhi, an_out);
        if (necgen->parsed()) return cmd_necgen(ng_design, ng_out);
        if (necparse->parsed()) return cmd_necparse(np_listing, np_z0, np_angles);
        if (optimize->parsed()) return cmd_optimize(opt_config);
        return kExitValidation;
    } catch (const vz0::EngineError& e) {
        std::cerr << "engine error: " << e.what() << '\n';
        return kExitEngine;
    } catch (const vz0::ParseError& e) {
        std::cerr << "parse error";
        if (e.line > 0) std::cerr << " (line " << e.line << ")";
        std::cerr << ": " << e.what() << '\n';
        return kExitParse;
    } catch (const vz0::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

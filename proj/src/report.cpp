#include "vz0/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <type_traits>

#include "json.hpp"
#include "vz0/errors.hpp"

namespace vz0 {

std::string KeyValues::get_str(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw ValidationError("missing config key: " + key);
    return it->second;
}

std::string KeyValues::get_str(const std::string& key, const std::string& fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

double KeyValues::get_double(const std::string& key) const {
    const std::string s = get_str(key);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw ValidationError("config key '" + key + "' is not a number: " + s);
    return v;
}

double KeyValues::get_double(const std::string& key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
}

int KeyValues::get_int(const std::string& key) const {
    const double v = get_double(key);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v)
        throw ValidationError("config key '" + key + "' is not an integer");
    return i;
}

int KeyValues::get_int(const std::string& key, int fallback) const {
    return has(key) ? get_int(key) : fallback;
}

KeyValues load_key_values(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file: " + path);
    KeyValues kv;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        auto trim = [](std::string s) {
            const char* ws = " \t\r\n";
            const auto b = s.find_first_not_of(ws);
            if (b == std::string::npos) return std::string();
            const auto e = s.find_last_not_of(ws);
            return s.substr(b, e - b + 1);
        };
        const std::string t = trim(line);
        if (t.empty()) continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value'", line_no);
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty()) throw ParseError("empty key", line_no);
        kv.set(key, value);
    }
    return kv;
}

void apply_cfo_overrides(const KeyValues& kv, CfoParams& params) {
    params.nt = kv.get_int("nt", params.nt);
    params.n_gamma = kv.get_int("n_gamma", params.n_gamma);
    params.max_np_per_dim = kv.get_int("max_np_per_dim", params.max_np_per_dim);
    params.frep_init = kv.get_double("frep_init", params.frep_init);
    params.frep_delta = kv.get_double("frep_delta", params.frep_delta);
    params.frep_min = kv.get_double("frep_min", params.frep_min);
    params.g_const = kv.get_double("g_const", params.g_const);
    params.dt = kv.get_double("dt", params.dt);
    params.shrink_every = kv.get_int("shrink_every", params.shrink_every);
    params.sat_window = kv.get_int("sat_window", params.sat_window);
    params.sat_tol = kv.get_double("sat_tol", params.sat_tol);
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    // Prefer the shortest representation that round-trips.
    for (int prec = 1; prec <= 16; ++prec) {
        char shorter[64];
        std::snprintf(shorter, sizeof shorter, "%.*g", prec, x);
        if (std::strtod(shorter, nullptr) == x) return shorter;
    }
    return buf;
}

void write_run_record(const std::string& path, const RunRecord& record) {
    nlohmann::json j;
    j["config"] = record.config;
    j["best"]["fitness"] = record.best.fitness;
    j["best"]["probe"] = record.best.probe;
    j["best"]["step"] = record.best.step;
    j["best"]["np_per_dim"] = record.best.np_per_dim;
    j["best"]["gamma"] = record.best.gamma;
    j["best"]["last_step"] = record.best.last_step;
    std::vector<double> pos(record.best.best_positions.data(),
                            record.best.best_positions.data() +
                                record.best.best_positions.size());
    j["best"]["positions"] = pos;
    j["evaluations"] = record.evaluations;
    j["wall_time_s"] = record.wall_time_s;
    j["series_files"] = record.series_files;
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write run record: " + path);
    out << j.dump(2) << '\n';
}

namespace {
template <typename T>
void write_series_impl(const std::string& path, const std::vector<T>& values) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write series file: " + path);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if constexpr (std::is_same_v<T, double>) {
            out << i << ' ' << format_double(values[i]) << '\n';
        } else {
            out << i << ' ' << values[i] << '\n';
        }
    }
}
}  // namespace

void write_series(const std::string& path, const std::vector<double>& values) {
    write_series_impl(path, values);
}

void write_series(const std::string& path, const std::vector<int>& values) {
    write_series_impl(path, values);
}

}  // namespace vz0

#ifndef VZ0_REPORT_HPP
#define VZ0_REPORT_HPP

#include <map>
#include <string>
#include <vector>

#include "vz0/cfo.hpp"

namespace vz0 {

// Flat "key = value" configuration text ('#' starts a comment).
class KeyValues {
public:
    void set(const std::string& key, const std::string& value) { values_[key] = value; }
    bool has(const std::string& key) const { return values_.count(key) != 0; }
    std::string get_str(const std::string& key) const;                 // throws if absent
    std::string get_str(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key) const;
    int get_int(const std::string& key, int fallback) const;
    const std::map<std::string, std::string>& items() const { return values_; }

private:
    std::map<std::string, std::string> values_;
};

KeyValues load_key_values(const std::string& path);  // throws ParseError

// Apply nt / n_gamma / max_np_per_dim / frep_* / shrink_every / sat_* keys.
void apply_cfo_overrides(const KeyValues& kv, CfoParams& params);

struct RunRecord {
    std::map<std::string, std::string> config;
    RunBest best;
    std::int64_t evaluations = 0;
    double wall_time_s = 0.0;
    std::vector<std::string> series_files;
};

// Locale-independent shortest round-trip formatting for emitted numbers.
std::string format_double(double x);

void write_run_record(const std::string& path, const RunRecord& record);

// Two-column "step value" plot data, one row per step 0..last.
void write_series(const std::string& path, const std::vector<double>& values);
void write_series(const std::string& path, const std::vector<int>& values);

}  // namespace vz0

#endif

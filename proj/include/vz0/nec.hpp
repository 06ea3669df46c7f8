#ifndef VZ0_NEC_HPP
#define VZ0_NEC_HPP

#include <string>
#include <vector>

#include "vz0/antenna.hpp"

namespace vz0 {

struct BowtieDesign {
    double arm_len_m = 0.0;       // flare arm length, meters
    double half_angle_deg = 0.0;  // vertex half-angle, degrees
    int load_seg = 1;             // loaded segment index on each arm, 1..9
    double r_load_ohm = 0.0;      // series load resistance (0 = unloaded)
    double z0_ohm = 0.0;          // feed-system characteristic impedance
    double feed_len_m = 0.02;     // fixed feed-wire length
    double wire_radius_m = 0.0005;
    int n_segs_arm = 9;
    int n_segs_feed = 3;

    void validate() const;  // throws ValidationError
};

struct YagiDesign {
    int n_elements = 0;
    std::vector<double> lengths_wl;   // element lengths in wavelengths
    std::vector<double> spacings_wl;  // spacing from previous element; [0] = 0
    double z0_ohm = 0.0;
    double radius_wl = 0.00635;
    double fc_mhz = 299.8;
    int n_segs = 9;

    void validate() const;  // throws ValidationError
};

struct FreqRange {
    double start_mhz = 0.0;
    double step_mhz = 0.0;
    int count = 0;
};

struct NecDeck {
    std::vector<std::string> lines;  // ordered cards, CM..EN
    std::string file_id;             // digits-only token echoed in the CM block

    std::string text() const;  // lines joined with '\n', trailing newline
    // Cards excluding the CM/CE comment block (GW..EN).
    std::vector<std::string> card_lines() const;
};

// Format a number in the card style: shortest decimal form, no trailing
// zeros, leading zero suppressed for |x| < 1 (".049", "-.032"), and a
// trailing "." on integral values ("0.", "200.", "100000.").
std::string format_nec_number(double x);

// Digits-only run token (UTC timestamp + per-process counter).
std::string make_file_id();

NecDeck gen_bowtie_deck(const BowtieDesign& design, const FreqRange& freq,
                        const std::string& file_id = "");
NecDeck gen_yagi_deck(const YagiDesign& design, const FreqRange& freq,
                      const std::string& file_id = "");

struct NecRunOutput {
    SweepTable table;
    bool run_completed = false;  // "RUN TIME" marker seen
    bool file_id_match = true;   // false when the output's token differs
    std::string file_id;         // token found in the output, digits only
};

// Parse a NEC-style output listing. Impedance is read from fixed columns
// 61-72 / 73-84 (1-based) of the line two below "INPUT PARAMETERS"; gains
// from columns 37-44 of the pattern rows following "E(THETA)".
// Throws ParseError (with line number) on malformed numeric fields.
NecRunOutput parse_nec_output(const std::string& text, double z0,
                              int n_pattern_angles = 19,
                              const std::string& expected_file_id = "");

// Write the deck plus an INFILE pointer file (input path on line 1, output
// path on line 2) into workdir, run the engine there, and parse the output.
// Throws EngineError for spawn failure / nonzero exit / timeout / stale
// file-ID, each with its own kind.
NecRunOutput run_engine(const NecDeck& deck, const std::string& engine_path,
                        const std::string& workdir, double z0,
                        double timeout_s = 300.0, int n_pattern_angles = 19);

// True where the average power gain lies inside the credible range [0.8, 1.2].
std::vector<bool> agt_validate(const std::vector<double>& avg_power_gain);

}  // namespace vz0

#endif

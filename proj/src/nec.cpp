#include "vz0/nec.hpp"

#include <sys/stat.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>
#include <thread>

#include "vz0/errors.hpp"

namespace vz0 {

namespace {

constexpr double kPi = 3.14159265358979323846;

double round_to(double x, int places) {
    const double scale = std::pow(10.0, places);
    return std::round(x * scale) / scale;
}

std::string fmt(double x) { return format_nec_number(x); }

std::string digits_only(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c))) out += c;
    }
    return out;
}

double parse_field(const std::string& line, std::size_t pos0, std::size_t width,
                   long line_no) {
    if (line.size() <= pos0) throw ParseError("line too short for fixed-column field", line_no);
    const std::string field = line.substr(pos0, width);
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (end == field.c_str()) throw ParseError("malformed numeric field '" + field + "'", line_no);
    return v;
}

}  // namespace

void BowtieDesign::validate() const {
    if (arm_len_m < 0.01 || arm_len_m > 0.08)
        throw ValidationError("bowtie: arm length must lie in [0.01, 0.08] m");
    if (half_angle_deg < 10.0 || half_angle_deg > 80.0)
        throw ValidationError("bowtie: half angle must lie in [10, 80] degrees");
    if (load_seg < 1 || load_seg > 9)
        throw ValidationError("bowtie: load segment must lie in 1..9");
    if (r_load_ohm != 0.0 && (r_load_ohm < 1.0 || r_load_ohm > 1000.0))
        throw ValidationError("bowtie: load resistance must be 0 or in [1, 1000] ohms");
    if (z0_ohm < 50.0 || z0_ohm > 1000.0)
        throw ValidationError("bowtie: z0 must lie in [50, 1000] ohms");
}

void YagiDesign::validate() const {
    if (n_elements < 2) throw ValidationError("yagi: need at least 2 elements");
    if (static_cast<int>(lengths_wl.size()) != n_elements ||
        static_cast<int>(spacings_wl.size()) != n_elements)
        throw ValidationError("yagi: lengths/spacings size must equal n_elements");
    if (spacings_wl[0] != 0.0)
        throw ValidationError("yagi: first element spacing is fixed at 0");
    for (double len : lengths_wl) {
        if (len < 0.2 || len > 0.6)
            throw ValidationError("yagi: element lengths must lie in [0.2, 0.6] wavelengths");
    }
    for (std::size_t i = 1; i < spacings_wl.size(); ++i) {
        if (spacings_wl[i] < 0.1 || spacings_wl[i] > 0.5)
            throw ValidationError("yagi: spacings must lie in [0.1, 0.5] wavelengths");
    }
    if (z0_ohm < 5.0 || z0_ohm > 600.0)
        throw ValidationError("yagi: z0 must lie in [5, 600] ohms");
}

std::string NecDeck::text() const {
    std::string out;
    for (const auto& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

std::vector<std::string> NecDeck::card_lines() const {
    std::vector<std::string> out;
    for (const auto& l : lines) {
        if (l.rfind("CM", 0) == 0 || l.rfind("CE", 0) == 0) continue;
        out.push_back(l);
    }
    return out;
}

std::string format_nec_number(double x) {
    if (x == 0.0) x = 0.0;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    std::string s(buf);
    while (!s.empty() && s.back() == '0') s.pop_back();
    // s now ends with '.' for integral values, which is the card convention.
    if (s.rfind("0.", 0) == 0 && s.size() > 2) {
        s.erase(0, 1);
    } else if (s.rfind("-0.", 0) == 0 && s.size() > 3) {
        s.erase(1, 1);
    }
    return s;
}

std::string make_file_id() {
    static std::atomic<unsigned> counter{0};
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y%m%d%H%M%S", &tm_utc);
    char out[40];
    std::snprintf(out, sizeof out, "%s%03u", buf, counter++ % 1000);
    return out;
}

NecDeck gen_bowtie_deck(const BowtieDesign& design, const FreqRange& freq,
                        const std::string& file_id) {
    design.validate();
    if (freq.count < 1 || freq.step_mhz <= 0.0 || freq.start_mhz <= 0.0)
        throw ValidationError("bowtie deck: invalid frequency range");

    NecDeck deck;
    deck.file_id = file_id.empty() ? make_file_id() : digits_only(file_id);

    const double arm = round_to(design.arm_len_m, 3);
    const double ang = round_to(design.half_angle_deg * kPi / 180.0, 3);
    const double feed_half = round_to(design.feed_len_m / 2.0, 3);
    const double y2 = round_to(feed_half + arm * std::cos(ang), 3);
    const double z2 = round_to(arm * std::sin(ang), 3);
    const double rload = round_to(design.r_load_ohm, 2);
    const double z0 = round_to(design.z0_ohm, 1);
    const double rad = design.wire_radius_m;
    const int seg = design.load_seg;

    auto gw = [&](int tag, int nsegs, double x1, double yy1, double z1, double x2,
                  double yy2, double zz2) {
        std::ostringstream os;
        os << "GW" << tag << ',' << nsegs << ',' << fmt(x1) << ',' << fmt(yy1) << ','
           << fmt(z1) << ',' << fmt(x2) << ',' << fmt(yy2) << ',' << fmt(zz2) << ','
           << fmt(rad);
        return os.str();
    };

    auto& L = deck.lines;
    L.push_back("CM File: BOWTIE.NEC");
    L.push_back("CM R-LOADED BOWTIE IN FREE SPACE WITH");
    L.push_back("CM Zo AS AN OPTIMIZATION PARAMETER.");
    L.push_back("CM Antenna in Y-Z plane.");
    L.push_back("CM Fitness function:");
    L.push_back("CM [Min(Eff)+5*Min(Gmax)]/[|Zo-MaxRin|*(MaxVSWR-MinVSWR)*(MaxXin-MinXin)]");
    L.push_back("CM Arm Length = " + fmt(arm) + " meters");
    L.push_back("CM Bowtie HALF Angle = " + fmt(design.half_angle_deg) + " degrees");
    L.push_back("CM Zo = " + fmt(z0) + " ohms");
    L.push_back("CM Rload = " + fmt(rload) + " ohms");
    L.push_back("CM Loaded Seg # = " + std::to_string(seg) + "/" +
                std::to_string(design.n_segs_arm));
    L.push_back("CM File ID " + deck.file_id);
    L.push_back("CE");
    L.push_back(gw(1, design.n_segs_feed, 0, -feed_half, 0, 0, feed_half, 0));
    L.push_back(gw(2, design.n_segs_arm, 0, feed_half, 0, 0, y2, z2));
    L.push_back(gw(3, design.n_segs_arm, 0, feed_half, 0, 0, y2, -z2));
    L.push_back(gw(4, design.n_segs_arm, 0, y2, z2, 0, y2, -z2));
    L.push_back(gw(5, design.n_segs_arm, 0, -feed_half, 0, 0, -y2, z2));
    L.push_back(gw(6, design.n_segs_arm, 0, -feed_half, 0, 0, -y2, -z2));
    L.push_back(gw(7, design.n_segs_arm, 0, -y2, z2, 0, -y2, -z2));
    L.push_back("GE");
    if (rload != 0.0) {
        for (int wire : {2, 3, 5, 6}) {
            L.push_back("LD0," + std::to_string(wire) + ',' + std::to_string(seg) + ',' +
                        std::to_string(seg) + ',' + fmt(rload) + ",0.,0.");
        }
    }
    L.push_back("FR 0," + std::to_string(freq.count) + ",0,0," + fmt(freq.start_mhz) + ',' +
                fmt(freq.step_mhz));
    L.push_back("EX 0,1,2,1,1,0.");
    L.push_back("RP 0,19,1,1001,0.,0.,5.,0.,100000.");
    L.push_back("EN");
    return deck;
}

NecDeck gen_yagi_deck(const YagiDesign& design, const FreqRange& freq,
                      const std::string& file_id) {
    design.validate();
    if (freq.count < 1 || freq.step_mhz <= 0.0 || freq.start_mhz <= 0.0)
        throw ValidationError("yagi deck: invalid frequency range");

    NecDeck deck;
    deck.file_id = file_id.empty() ? make_file_id() : digits_only(file_id);
    const double z0 = round_to(design.z0_ohm, 2);

    auto& L = deck.lines;
    L.push_back("CM File: YAGI.NEC");
    L.push_back("CM YAGI ARRAY IN FREE SPACE");
    L.push_back("CM Band center frequency, Fc = " + fmt(design.fc_mhz) + " MHz");
    L.push_back("CM Fitness function:");
    L.push_back("CM c1*Gfwd(L)-c2*VSWR(L)+c3*Gfwd(M)-c4*VSWR(M)+c5*Gfwd(U)-c6*VSWR(U)");
    L.push_back("CM where L,M,U are lower/mid/upper frequencies");
    L.push_back("CM Zo=" + fmt(z0) + " ohms");
    L.push_back("CM File ID " + deck.file_id);
    L.push_back("CE");

    double boom = 0.0;
    for (int i = 0; i < design.n_elements; ++i) {
        boom += round_to(design.spacings_wl[i], 3);
        const double x = round_to(boom, 3);
        const double y = round_to(design.lengths_wl[i] / 2.0, 3);
        std::ostringstream os;
        os << "GW" << (i + 1) << ',' << design.n_segs << ',' << fmt(x) << ',' << fmt(-y)
           << ",0.," << fmt(x) << ',' << fmt(y) << ",0.," << fmt(design.radius_wl);
        L.push_back(os.str());
    }
    L.push_back("GE");
    L.push_back("FR 0," + std::to_string(freq.count) + ",0,0," + fmt(freq.start_mhz) + ',' +
                fmt(freq.step_mhz));
    // Excitation on the driven element (element 2), center segment.
    L.push_back("EX 0,2," + std::to_string((design.n_segs + 1) / 2) + ",1,1,0.");
    L.push_back("RP 0,19,19,1001,0.,0.,5.,10.,100000.");
    L.push_back("EN");
    return deck;
}

NecRunOutput parse_nec_output(const std::string& text, double z0, int n_pattern_angles,
                              const std::string& expected_file_id) {
    NecRunOutput out;
    out.table.z0_ohm = z0;
    out.run_completed = text.find("RUN TIME") != std::string::npos;
    if (!out.run_completed) return out;

    std::istringstream in(text);
    std::string line;
    long line_no = 0;
    double f = 0.0, eff = 0.0, rin = 0.0, xin = 0.0;
    bool have_freq = false;

    auto next_line = [&](std::string& dst) {
        if (!std::getline(in, dst)) throw ParseError("unexpected end of listing", line_no);
        ++line_no;
        return true;
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (line.find("File ID") != std::string::npos) {
            out.file_id = digits_only(line);
            if (!expected_file_id.empty())
                out.file_id_match = (out.file_id == digits_only(expected_file_id));
            continue;
        }
        if (auto pos = line.find("FREQUENCY="); pos != std::string::npos) {
            std::string rest = line.substr(pos + 10);
            if (auto m = rest.find("MHZ"); m != std::string::npos) rest.erase(m);
            char* end = nullptr;
            f = std::strtod(rest.c_str(), &end);
            if (end == rest.c_str()) throw ParseError("malformed frequency line", line_no);
            have_freq = true;
            continue;
        }
        if (line.find("INPUT PARAMETERS") != std::string::npos) {
            std::string skip, data;
            next_line(skip);
            next_line(skip);
            next_line(data);
            rin = parse_field(data, 60, 12, line_no);
            xin = parse_field(data, 72, 12, line_no);
            continue;
        }
        if (line.find("EFFICIENCY") != std::string::npos) {
            std::string cleaned;
            for (char c : line) {
                if (std::isalpha(static_cast<unsigned char>(c)) || c == '=' || c == '%' ||
                    c == ' ')
                    continue;
                cleaned += c;
            }
            char* end = nullptr;
            eff = std::strtod(cleaned.c_str(), &end);
            if (end == cleaned.c_str()) throw ParseError("malformed efficiency line", line_no);
            continue;
        }
        if (line.find("E(THETA)") != std::string::npos) {
            if (!have_freq) throw ParseError("pattern block before any frequency", line_no);
            std::string skip, row;
            next_line(skip);
            next_line(skip);
            double gmax = -9999.0, gmin = 9999.0, gfwd = 0.0;
            for (int k = 0; k < n_pattern_angles; ++k) {
                next_line(row);
                const double gain = parse_field(row, 36, 8, line_no);
                if (k == 0) gfwd = gain;
                gmax = std::max(gmax, gain);
                gmin = std::min(gmin, gain);
            }
            FrequencySample s;
            s.f_mhz = f;
            s.eff_pct = eff;
            s.gmax_dbi = gmax;
            s.gmin_dbi = gmin;
            s.gfwd_dbi = gfwd;
            s.rin_ohm = rin;
            s.xin_ohm = xin;
            s.vswr = vswr(z0, rin, xin);
            out.table.rows.push_back(s);
            continue;
        }
    }
    return out;
}

NecRunOutput run_engine(const NecDeck& deck, const std::string& engine_path,
                        const std::string& workdir, double z0, double timeout_s,
                        int n_pattern_angles) {
    if (::access(engine_path.c_str(), X_OK) != 0)
        throw EngineError(EngineError::Kind::SpawnFailure,
                          "engine not executable: " + engine_path);
    ::mkdir(workdir.c_str(), 0755);  // ok if it already exists

    // The engine runs with the workdir as its cwd, so the pointer file names
    // the input/output relative to it.
    const std::string input_name = deck.file_id + ".nec";
    const std::string output_name = deck.file_id + ".out";
    const std::string input_path = workdir + "/" + input_name;
    const std::string output_path = workdir + "/" + output_name;
    {
        std::ofstream f(input_path);
        if (!f) throw EngineError(EngineError::Kind::SpawnFailure,
                                  "cannot write deck: " + input_path);
        f << deck.text();
    }
    {
        std::ofstream f(workdir + "/INFILE");
        if (!f) throw EngineError(EngineError::Kind::SpawnFailure,
                                  "cannot write pointer file in " + workdir);
        f << input_name << '\n' << output_name << '\n';
    }

    const pid_t pid = ::fork();
    if (pid < 0)
        throw EngineError(EngineError::Kind::SpawnFailure, "fork failed");
    if (pid == 0) {
        if (::chdir(workdir.c_str()) != 0) _exit(127);
        ::execl(engine_path.c_str(), engine_path.c_str(), static_cast<char*>(nullptr));
        _exit(127);
    }

    const auto deadline =
        std::chrono::steady_clock::now() + std::chrono::duration<double>(timeout_s);
    int status = 0;
    for (;;) {
        const pid_t r = ::waitpid(pid, &status, WNOHANG);
        if (r == pid) break;
        if (r < 0) throw EngineError(EngineError::Kind::SpawnFailure, "waitpid failed");
        if (std::chrono::steady_clock::now() > deadline) {
            ::kill(pid, SIGKILL);
            ::waitpid(pid, &status, 0);
            throw EngineError(EngineError::Kind::Timeout,
                              "engine timed out after " + std::to_string(timeout_s) + " s");
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(10));
    }
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0)
        throw EngineError(EngineError::Kind::NonzeroExit,
                          "engine exited with status " +
                              std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1));

    std::ifstream f(output_path);
    if (!f)
        throw EngineError(EngineError::Kind::NonzeroExit,
                          "engine produced no output: " + output_path);
    std::ostringstream buf;
    buf << f.rdbuf();

    NecRunOutput out = parse_nec_output(buf.str(), z0, n_pattern_angles, deck.file_id);
    if (!out.file_id_match)
        throw EngineError(EngineError::Kind::StaleFileId,
                          "output file ID '" + out.file_id + "' does not match deck '" +
                              deck.file_id + "'");
    return out;
}

std::vector<bool> agt_validate(const std::vector<double>& avg_power_gain) {
    std::vector<bool> ok;
    ok.reserve(avg_power_gain.size());
    for (double g : avg_power_gain) ok.push_back(g >= 0.8 && g <= 1.2);
    return ok;
}

}  // namespace vz0

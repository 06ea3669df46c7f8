#ifndef VZ0_CFO_HPP
#define VZ0_CFO_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

#include "vz0/errors.hpp"

namespace vz0 {

// Objective to be MAXIMIZED over a box-bounded decision space.
using Objective = std::function<double(const Eigen::VectorXd&)>;

// Per-dimension box bounds. `live_*` shrink during a run; `start_*` are the
// immutable initial bounds the live ones are reset to between runs.
struct DecisionSpace {
    Eigen::VectorXd live_min, live_max;
    Eigen::VectorXd start_min, start_max;

    static DecisionSpace from_bounds(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi);

    int dims() const { return static_cast<int>(live_min.size()); }
    void reset() { live_min = start_min; live_max = start_max; }
    // Diagonal length of the starting bounds box.
    double diag_length() const { return (start_max - start_min).norm(); }
};

struct CfoParams {
    int nt = 250;             // max time steps
    int n_gamma = 11;         // gamma grid size on [0,1]
    int max_np_per_dim = 8;   // max probes per dimension
    double frep_init = 0.5;
    double frep_delta = 0.1;
    double frep_min = 0.05;
    double alpha_exp = 1.0;   // fitness-difference exponent
    double beta_exp = 1.0;    // distance exponent
    double g_const = 2.0;     // gravitational constant
    double dt = 0.5;          // time step
    int shrink_every = 20;    // bounds-shrink interval (steps)
    int sat_window = 25;      // saturation window (steps)
    double sat_tol = 1e-6;    // saturation tolerance

    void validate() const;
};

// Full state of one run: positions r[j] and accelerations a[j] are Np x Nd
// matrices (row p = probe p), fitnesses m is Np x (steps+1).
struct ProbeRun {
    std::vector<Eigen::MatrixXd> r;
    std::vector<Eigen::MatrixXd> a;
    Eigen::MatrixXd m;
    int current_step = 0;

    int np() const { return r.empty() ? 0 : static_cast<int>(r[0].rows()); }
};

struct RunBest {
    double fitness = 0.0;
    int probe = 0;
    int step = 0;
    int np_per_dim = 0;
    double gamma = 0.0;
    int last_step = 0;
    Eigen::VectorXd best_positions;
};

// Per-step series captured for reporting: one entry per executed step 0..last_step.
struct RunHistory {
    std::vector<double> best_fitness;  // running best after each step
    std::vector<double> davg;          // normalized average distance to best probe
    std::vector<int> best_probe;       // probe index of the running best
    int last_step = 0;
};

struct SweepResult {
    RunBest best;
    std::int64_t evaluations = 0;
    RunHistory best_history;  // history of the winning (gamma, np_per_dim) run
};

// Probe-line initial distribution: every coordinate starts at
// min + gamma*(max-min); then for dimension i the np_per_dim probes on line i
// are spread uniformly from min(i) to max(i) in that coordinate.
// Returns an Np x Nd matrix, Np = np_per_dim * dims.
Eigen::MatrixXd init_probe_lines(const DecisionSpace& space, int np_per_dim, double gamma);

// A(p,i) = G * sum_{k != p} U(M_k - M_p) * (M_k - M_p)^alpha * (R(k,i) - R(p,i)) / |R_k - R_p|^beta
// with U the unit step (1 for argument >= 0). Coincident probes contribute zero.
Eigen::MatrixXd compute_accelerations(const Eigen::MatrixXd& positions,
                                      const Eigen::VectorXd& fitnesses,
                                      const CfoParams& params);

// R' = R + (1/2) A dt^2 (no clamping; retrieval handles bounds).
Eigen::MatrixXd step_positions(const Eigen::MatrixXd& positions,
                               const Eigen::MatrixXd& accelerations,
                               const CfoParams& params);

// Pull out-of-bounds coordinates back toward the violated boundary using the
// previous in-bounds position: below-min -> max(min + frep*(prev - min), min),
// above-max -> min(max - frep*(max - prev), max).
void retrieve_errant_simple(Eigen::MatrixXd& positions,
                            const Eigen::MatrixXd& prev_positions,
                            const DecisionSpace& space, double frep);

// Direction-preserving retrieval: a probe is errant when some coordinate is
// out of bounds and its previous acceleration component is nonzero. The probe
// is moved from its previous position along its previous acceleration by
// frep * d_max, where d_max is the distance to the nearest boundary crossing.
// Probes with zero previous acceleration are left untouched.
void retrieve_errant_directional(Eigen::MatrixXd& positions,
                                 const Eigen::MatrixXd& prev_positions,
                                 const Eigen::MatrixXd& prev_accelerations,
                                 const DecisionSpace& space, double frep);

// Halve the live bounds toward the best position:
// min <- min + (best - min)/2, max <- max - (max - best)/2.
void shrink_space(DecisionSpace& space, const Eigen::VectorXd& best_position);

// frep + delta, wrapping to frep_min when the result exceeds 1.
double frep_next(double frep, const CfoParams& params);

// True when the per-step best fitness has been flat (within tol) over the last
// `window` steps. Always false for j < window + 10.
bool fitness_saturated(const Eigen::MatrixXd& m, int j, int window, double tol);

// Average distance from every probe at step j to the globally best (probe,
// step) position over steps 0..j, normalized by diag_length * (Np - 1).
double davg(const ProbeRun& run, int j, const DecisionSpace& space);

// One (gamma, np_per_dim) run. Resets the space's live bounds to the starting
// copies before returning. `history`/`eval_count` are optional out-params.
RunBest run_single(const Objective& objective, DecisionSpace& space,
                   int np_per_dim, double gamma, const CfoParams& params,
                   RunHistory* history = nullptr, std::int64_t* eval_count = nullptr);

// Alias kept for configs that name the Halton-flavored initializer; the
// placement procedure is identical to the probe-line distribution.
inline Eigen::MatrixXd halton_ipd(const DecisionSpace& space, int np_per_dim, double gamma) {
    return init_probe_lines(space, np_per_dim, gamma);
}

// Full sweep: np_per_dim over even values 2..max (3..max when Nd = 1), gamma
// over n_gamma uniform values on [0,1]; ties go to the later run.
SweepResult sweep(const Objective& objective, DecisionSpace& space, const CfoParams& params);

}  // namespace vz0

#endif

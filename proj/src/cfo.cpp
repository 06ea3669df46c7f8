#include "vz0/cfo.hpp"

#include <cmath>
#include <limits>

namespace vz0 {

DecisionSpace DecisionSpace::from_bounds(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi) {
    if (lo.size() == 0 || lo.size() != hi.size())
        throw ValidationError("DecisionSpace: bounds must be non-empty and of equal size");
    if ((lo.array() > hi.array()).any())
        throw ValidationError("DecisionSpace: lower bound exceeds upper bound");
    DecisionSpace s;
    s.live_min = lo;
    s.live_max = hi;
    s.start_min = lo;
    s.start_max = hi;
    return s;
}

void CfoParams::validate() const {
    if (nt < 0) throw ValidationError("CfoParams: nt must be >= 0");
    if (n_gamma < 1) throw ValidationError("CfoParams: n_gamma must be >= 1");
    if (max_np_per_dim < 2) throw ValidationError("CfoParams: max_np_per_dim must be >= 2");
    if (!(frep_min > 0.0 && frep_min <= frep_init && frep_init <= 1.0))
        throw ValidationError("CfoParams: require 0 < frep_min <= frep_init <= 1");
    if (dt <= 0.0) throw ValidationError("CfoParams: dt must be > 0");
    if (shrink_every < 1) throw ValidationError("CfoParams: shrink_every must be >= 1");
    if (sat_window < 1) throw ValidationError("CfoParams: sat_window must be >= 1");
    if (sat_tol < 0.0) throw ValidationError("CfoParams: sat_tol must be >= 0");
}

Eigen::MatrixXd init_probe_lines(const DecisionSpace& space, int np_per_dim, double gamma) {
    const int nd = space.dims();
    if (np_per_dim < 2 || (nd == 1 && np_per_dim < 3))
        throw ValidationError("init_probe_lines: np_per_dim too small");
    if (gamma < 0.0 || gamma > 1.0)
        throw ValidationError("init_probe_lines: gamma must lie in [0,1]");

    const int np = np_per_dim * nd;
    Eigen::MatrixXd r(np, nd);
    for (int i = 0; i < nd; ++i) {
        const double v = space.live_min(i) + gamma * (space.live_max(i) - space.live_min(i));
        r.col(i).setConstant(v);
    }
    for (int i = 0; i < nd; ++i) {
        const double dx = (space.live_max(i) - space.live_min(i)) / (np_per_dim - 1);
        for (int k = 0; k < np_per_dim; ++k) {
            r(i * np_per_dim + k, i) = space.live_min(i) + k * dx;
        }
    }
    return r;
}

Eigen::MatrixXd compute_accelerations(const Eigen::MatrixXd& positions,
                                      const Eigen::VectorXd& fitnesses,
                                      const CfoParams& params) {
    const int np = static_cast<int>(positions.rows());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(np, positions.cols());
    for (int p = 0; p < np; ++p) {
        for (int k = 0; k < np; ++k) {
            if (k == p) continue;
            const double dm = fitnesses(k) - fitnesses(p);
            if (dm < 0.0) continue;  // unit step U(dm) = 0
            const double dist = (positions.row(k) - positions.row(p)).norm();
            if (dist == 0.0 || dm == 0.0) continue;  // coincident or equal-fitness pair
            const double w = params.g_const * std::pow(dm, params.alpha_exp) /
                             std::pow(dist, params.beta_exp);
            a.row(p) += w * (positions.row(k) - positions.row(p));
        }
    }
    return a;
}

Eigen::MatrixXd step_positions(const Eigen::MatrixXd& positions,
                               const Eigen::MatrixXd& accelerations,
                               const CfoParams& params) {
    return positions + 0.5 * params.dt * params.dt * accelerations;
}

void retrieve_errant_simple(Eigen::MatrixXd& positions,
                            const Eigen::MatrixXd& prev_positions,
                            const DecisionSpace& space, double frep) {
    for (int p = 0; p < positions.rows(); ++p) {
        for (int i = 0; i < positions.cols(); ++i) {
            const double lo = space.live_min(i), hi = space.live_max(i);
            const double prev = prev_positions(p, i);
            double& x = positions(p, i);
            if (x < lo) {
                x = std::max(lo + frep * (prev - lo), lo);
            } else if (x > hi) {
                x = std::min(hi - frep * (hi - prev), hi);
            }
        }
    }
}

void retrieve_errant_directional(Eigen::MatrixXd& positions,
                                 const Eigen::MatrixXd& prev_positions,
                                 const Eigen::MatrixXd& prev_accelerations,
                                 const DecisionSpace& space, double frep) {
    const int nd = static_cast<int>(positions.cols());
    for (int p = 0; p < positions.rows(); ++p) {
        bool errant = false;
        for (int i = 0; i < nd; ++i) {
            const bool out = positions(p, i) < space.live_min(i) ||
                             positions(p, i) > space.live_max(i);
            if (out && prev_accelerations(p, i) != 0.0) {
                errant = true;
                break;
            }
        }
        if (!errant) continue;
        const double a_norm = prev_accelerations.row(p).norm();
        if (a_norm == 0.0) continue;  // left to the simple retrieval

        // Distance (in units of the acceleration vector) from the previous
        // position to the nearest boundary crossing along the acceleration.
        double eta_star = std::numeric_limits<double>::infinity();
        for (int i = 0; i < nd; ++i) {
            const double ai = prev_accelerations(p, i);
            if (ai == 0.0) continue;
            for (const double bound : {space.live_min(i), space.live_max(i)}) {
                const double eta = (bound - prev_positions(p, i)) / ai;
                if (eta >= 0.0 && eta <= eta_star) eta_star = eta;
            }
        }
        if (!std::isfinite(eta_star)) continue;
        const double d_max = eta_star * a_norm;
        positions.row(p) = prev_positions.row(p) +
                           (frep * d_max / a_norm) * prev_accelerations.row(p);
    }
}

void shrink_space(DecisionSpace& space, const Eigen::VectorXd& best_position) {
    space.live_min += (best_position - space.live_min) / 2.0;
    space.live_max -= (space.live_max - best_position) / 2.0;
}

double frep_next(double frep, const CfoParams& params) {
    const double next = frep + params.frep_delta;
    return next > 1.0 ? params.frep_min : next;
}

bool fitness_saturated(const Eigen::MatrixXd& m, int j, int window, double tol) {
    if (j < window + 10) return false;
    double mean = 0.0;
    double best_at_j = 0.0;
    for (int s = j - window + 1; s <= j; ++s) {
        double best = m(0, s);
        for (int p = 1; p < m.rows(); ++p) {
            if (m(p, s) >= best) best = m(p, s);
        }
        mean += best;
        if (s == j) best_at_j = best;
    }
    mean /= window;
    return std::abs(mean - best_at_j) <= tol;
}

double davg(const ProbeRun& run, int j, const DecisionSpace& space) {
    const int np = run.np();
    if (np < 2) throw ValidationError("davg: requires at least two probes");
    int best_p = 0, best_s = 0;
    double best = run.m(0, 0);
    for (int s = 0; s <= j; ++s) {
        for (int p = 0; p < np; ++p) {
            if (run.m(p, s) >= best) {
                best = run.m(p, s);
                best_p = p;
                best_s = s;
            }
        }
    }
    const Eigen::RowVectorXd best_pos = run.r[best_s].row(best_p);
    double total = 0.0;
    for (int p = 0; p < np; ++p) {
        total += (best_pos - run.r[j].row(p)).norm();
    }
    return total / (space.diag_length() * (np - 1));
}

namespace {

void evaluate_step(const Objective& objective, ProbeRun& run, int j,
                   std::int64_t* eval_count) {
    for (int p = 0; p < run.np(); ++p) {
        const double v = objective(run.r[j].row(p).transpose());
        if (eval_count) ++*eval_count;
        if (!std::isfinite(v))
            throw EvaluationError("objective returned a non-finite value", p, j);
        run.m(p, j) = v;
    }
}

}  // namespace

RunBest run_single(const Objective& objective, DecisionSpace& space,
                   int np_per_dim, double gamma, const CfoParams& params,
                   RunHistory* history, std::int64_t* eval_count) {
    params.validate();
    space.reset();
    const int nd = space.dims();

    ProbeRun run;
    run.r.reserve(params.nt + 1);
    run.a.reserve(params.nt + 1);
    run.r.push_back(init_probe_lines(space, np_per_dim, gamma));
    const int np = run.np();
    run.a.push_back(Eigen::MatrixXd::Zero(np, nd));
    run.m.resize(np, params.nt + 1);

    evaluate_step(objective, run, 0, eval_count);

    RunBest best;
    best.np_per_dim = np_per_dim;
    best.gamma = gamma;
    best.fitness = run.m(0, 0);
    best.best_positions = run.r[0].row(0).transpose();
    auto track_best = [&](int j) {
        for (int p = 0; p < np; ++p) {
            if (run.m(p, j) >= best.fitness) {
                best.fitness = run.m(p, j);
                best.probe = p;
                best.step = j;
                best.best_positions = run.r[j].row(p).transpose();
            }
        }
    };
    track_best(0);

    auto record = [&](int j) {
        if (!history) return;
        history->best_fitness.push_back(best.fitness);
        history->davg.push_back(np > 1 ? davg(run, j, space) : 0.0);
        history->best_probe.push_back(best.probe);
        history->last_step = j;
    };
    record(0);

    double frep = params.frep_init;
    int last = 0;
    for (int j = 1; j <= params.nt; ++j) {
        run.a[j - 1] = compute_accelerations(run.r[j - 1], run.m.col(j - 1), params);
        Eigen::MatrixXd pos = step_positions(run.r[j - 1], run.a[j - 1], params);
        retrieve_errant_simple(pos, run.r[j - 1], space, frep);
        retrieve_errant_directional(pos, run.r[j - 1], run.a[j - 1], space, frep);
        run.r.push_back(std::move(pos));
        run.a.push_back(Eigen::MatrixXd::Zero(np, nd));
        run.current_step = j;

        evaluate_step(objective, run, j, eval_count);
        track_best(j);
        frep = frep_next(frep, params);

        if (j % params.shrink_every == 0) {
            shrink_space(space, best.best_positions);
            retrieve_errant_simple(run.r[j], run.r[j - 1], space, frep);
            retrieve_errant_directional(run.r[j], run.r[j - 1], run.a[j - 1], space, frep);
        }

        record(j);
        last = j;
        // Terminate only once the best fitness has flatlined AND the probe
        // cloud has collapsed onto the best point; a fitness plateau alone is
        // routine mid-run (the best probe feels no force) and exiting on it
        // strands the run far from the optimum.
        if (fitness_saturated(run.m, j, params.sat_window, params.sat_tol) &&
            davg(run, j, space) <= params.sat_tol) {
            break;
        }
    }

    best.last_step = last;
    space.reset();
    return best;
}

SweepResult sweep(const Objective& objective, DecisionSpace& space, const CfoParams& params) {
    params.validate();
    const int nd = space.dims();

    std::vector<int> npd_schedule;
    if (nd == 1) {
        for (int n = 3; n <= params.max_np_per_dim; ++n) npd_schedule.push_back(n);
    } else {
        for (int n = 2; n <= params.max_np_per_dim; n += 2) npd_schedule.push_back(n);
    }
    if (npd_schedule.empty())
        throw ValidationError("sweep: no admissible np_per_dim values");

    SweepResult result;
    bool have_best = false;
    for (int npd : npd_schedule) {
        for (int k = 0; k < params.n_gamma; ++k) {
            const double gamma =
                params.n_gamma == 1 ? 0.0
                                    : static_cast<double>(k) / (params.n_gamma - 1);
            RunHistory hist;
            RunBest rb = run_single(objective, space, npd, gamma, params, &hist,
                                    &result.evaluations);
            if (!have_best || rb.fitness >= result.best.fitness) {
                result.best = rb;
                result.best_history = std::move(hist);
                have_best = true;
            }
        }
    }
    return result;
}

}  // namespace vz0

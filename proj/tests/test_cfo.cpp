#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "vz0/cfo.hpp"

using namespace vz0;

namespace {

DecisionSpace unit_box(int nd) {
    return DecisionSpace::from_bounds(Eigen::VectorXd::Zero(nd),
                                      Eigen::VectorXd::Ones(nd));
}

Objective neg_sphere() {
    return [](const Eigen::VectorXd& x) { return -x.squaredNorm(); };
}

}  // namespace

TEST_CASE("init_probe_lines 1-D places endpoints and midpoint") {
    auto space = unit_box(1);
    const Eigen::MatrixXd r = init_probe_lines(space, 3, 0.5);
    REQUIRE(r.rows() == 3);
    CHECK(r(0, 0) == 0.0);
    CHECK(r(1, 0) == 0.5);
    CHECK(r(2, 0) == 1.0);
}

TEST_CASE("init_probe_lines 2-D probe lines at gamma 0.5") {
    auto space = unit_box(2);
    const Eigen::MatrixXd r = init_probe_lines(space, 2, 0.5);
    REQUIRE(r.rows() == 4);
    CHECK(r.row(0) == Eigen::RowVector2d(0.0, 0.5));
    CHECK(r.row(1) == Eigen::RowVector2d(1.0, 0.5));
    CHECK(r.row(2) == Eigen::RowVector2d(0.5, 0.0));
    CHECK(r.row(3) == Eigen::RowVector2d(0.5, 1.0));
}

TEST_CASE("init_probe_lines gamma 0 pins off-line coordinates to the minimum") {
    auto space = unit_box(2);
    const Eigen::MatrixXd r = init_probe_lines(space, 2, 0.0);
    CHECK(r.row(0) == Eigen::RowVector2d(0.0, 0.0));
    CHECK(r.row(1) == Eigen::RowVector2d(1.0, 0.0));
    CHECK(r.row(2) == Eigen::RowVector2d(0.0, 0.0));
    CHECK(r.row(3) == Eigen::RowVector2d(0.0, 1.0));
}

TEST_CASE("init_probe_lines gamma 1 pins off-line coordinates to the maximum") {
    auto space = unit_box(2);
    const Eigen::MatrixXd r = init_probe_lines(space, 2, 1.0);
    CHECK(r(0, 1) == 1.0);
    CHECK(r(2, 0) == 1.0);
}

TEST_CASE("halton_ipd is an exact alias of init_probe_lines") {
    auto space = DecisionSpace::from_bounds(Eigen::Vector3d(-5, 0, 2),
                                            Eigen::Vector3d(5, 10, 4));
    CHECK(halton_ipd(space, 4, 0.3) == init_probe_lines(space, 4, 0.3));
    CHECK(halton_ipd(space, 2, 1.0) == init_probe_lines(space, 2, 1.0));
}

TEST_CASE("init_probe_lines rejects bad configuration") {
    auto s1 = unit_box(1);
    CHECK_THROWS_AS(init_probe_lines(s1, 2, 0.5), ValidationError);  // 1-D needs >= 3
    auto s2 = unit_box(2);
    CHECK_THROWS_AS(init_probe_lines(s2, 1, 0.5), ValidationError);
    CHECK_THROWS_AS(init_probe_lines(s2, 2, 1.5), ValidationError);
}

TEST_CASE("compute_accelerations 1-D hand example") {
    Eigen::MatrixXd r(2, 1);
    r << 0.0, 1.0;
    Eigen::VectorXd m(2);
    m << 0.0, 1.0;
    const Eigen::MatrixXd a = compute_accelerations(r, m, CfoParams{});
    CHECK(a(0, 0) == 2.0);
    CHECK(a(1, 0) == 0.0);
}

TEST_CASE("compute_accelerations degenerate cases") {
    CfoParams p;
    Eigen::MatrixXd single(1, 3);
    single << 1.0, 2.0, 3.0;
    Eigen::VectorXd m1(1);
    m1 << 5.0;
    CHECK(compute_accelerations(single, m1, p).isZero(0.0));

    // All equal fitness -> zero acceleration everywhere.
    Eigen::MatrixXd r(3, 2);
    r << 0, 0, 1, 0, 0, 1;
    Eigen::VectorXd m = Eigen::VectorXd::Constant(3, 7.0);
    CHECK(compute_accelerations(r, m, p).isZero(0.0));

    // Coincident probes contribute zero (no NaN).
    Eigen::MatrixXd rc(2, 1);
    rc << 0.5, 0.5;
    Eigen::VectorXd mc(2);
    mc << 0.0, 1.0;
    const Eigen::MatrixXd ac = compute_accelerations(rc, mc, p);
    CHECK(ac.allFinite());
    CHECK(ac.isZero(0.0));
}

TEST_CASE("acceleration permutation symmetry") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> coord(-10.0, 10.0);
    CfoParams p;
    for (int trial = 0; trial < 50; ++trial) {
        const int np = 6, nd = 3;
        Eigen::MatrixXd r(np, nd);
        Eigen::VectorXd m(np);
        for (int i = 0; i < np; ++i) {
            m(i) = coord(rng);
            for (int d = 0; d < nd; ++d) r(i, d) = coord(rng);
        }
        std::vector<int> perm{3, 0, 5, 1, 4, 2};
        Eigen::MatrixXd rp(np, nd);
        Eigen::VectorXd mp(np);
        for (int i = 0; i < np; ++i) {
            rp.row(i) = r.row(perm[i]);
            mp(i) = m(perm[i]);
        }
        const Eigen::MatrixXd a = compute_accelerations(r, m, p);
        const Eigen::MatrixXd ap = compute_accelerations(rp, mp, p);
        // Permuting indices reorders the floating-point sum, so compare to a
        // tight relative tolerance rather than bit-for-bit.
        for (int i = 0; i < np; ++i)
            for (int d = 0; d < nd; ++d)
                CHECK(ap(i, d) == doctest::Approx(a(perm[i], d)).epsilon(1e-12));
    }
}

TEST_CASE("step_positions hand examples") {
    CfoParams p;  // dt = 0.5
    Eigen::MatrixXd r(3, 1), a(3, 1);
    r << 0.0, 5.0, 1.0;
    a << 2.0, 0.0, -8.0;
    const Eigen::MatrixXd next = step_positions(r, a, p);
    CHECK(next(0, 0) == 0.25);
    CHECK(next(1, 0) == 5.0);
    CHECK(next(2, 0) == 0.0);
}

TEST_CASE("retrieve_errant_simple hand examples") {
    auto space = DecisionSpace::from_bounds(Eigen::VectorXd::Zero(1),
                                            Eigen::VectorXd::Constant(1, 10.0));
    Eigen::MatrixXd pos(3, 1), prev(3, 1);
    pos << -0.1, 5.0, 12.0;
    prev << 0.4, 5.0, 9.0;
    retrieve_errant_simple(pos, prev, space, 0.5);
    CHECK(pos(0, 0) == doctest::Approx(0.2));
    CHECK(pos(1, 0) == 5.0);  // inside -> untouched
    CHECK(pos(2, 0) == doctest::Approx(9.5));
}

TEST_CASE("retrieve_errant_directional hand examples") {
    CfoParams p;
    SUBCASE("1-D overshoot") {
        auto space = DecisionSpace::from_bounds(Eigen::VectorXd::Zero(1),
                                                Eigen::VectorXd::Constant(1, 10.0));
        Eigen::MatrixXd pos(1, 1), prev(1, 1), acc(1, 1);
        pos << 12.0;
        prev << 8.0;
        acc << 4.0;
        retrieve_errant_directional(pos, prev, acc, space, 0.5);
        CHECK(pos(0, 0) == doctest::Approx(9.0));
    }
    SUBCASE("probe inside bounds is untouched") {
        auto space = unit_box(2);
        Eigen::MatrixXd pos(1, 2), prev(1, 2), acc(1, 2);
        pos << 0.5, 0.5;
        prev << 0.4, 0.4;
        acc << 1.0, 1.0;
        retrieve_errant_directional(pos, prev, acc, space, 0.5);
        CHECK(pos(0, 0) == 0.5);
        CHECK(pos(0, 1) == 0.5);
    }
    SUBCASE("2-D overshoot with a zero acceleration component") {
        auto space = DecisionSpace::from_bounds(Eigen::Vector2d(0, 0),
                                                Eigen::Vector2d(10, 10));
        Eigen::MatrixXd pos(1, 2), prev(1, 2), acc(1, 2);
        pos << 11.0, 5.0;
        prev << 9.0, 5.0;
        acc << 2.0, 0.0;
        retrieve_errant_directional(pos, prev, acc, space, 1.0);
        CHECK(pos(0, 0) == doctest::Approx(10.0));
        CHECK(pos(0, 1) == doctest::Approx(5.0));
    }
    SUBCASE("zero prior acceleration leaves the probe for the simple pass") {
        auto space = unit_box(1);
        Eigen::MatrixXd pos(1, 1), prev(1, 1), acc(1, 1);
        pos << 2.0;
        prev << 0.5;
        acc << 0.0;
        retrieve_errant_directional(pos, prev, acc, space, 0.5);
        CHECK(pos(0, 0) == 2.0);
    }
}

TEST_CASE("containment after both retrieval passes on random states") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-3.0, 4.0);
    CfoParams params;
    for (int trial = 0; trial < 10000; ++trial) {
        const int nd = 1 + static_cast<int>(rng() % 4);
        const int np = 2 + static_cast<int>(rng() % 6);
        auto space = unit_box(nd);
        Eigen::MatrixXd prev(np, nd), acc(np, nd), pos(np, nd);
        for (int p = 0; p < np; ++p)
            for (int d = 0; d < nd; ++d) {
                prev(p, d) = std::clamp(u(rng), 0.0, 1.0);  // prev inside bounds
                acc(p, d) = u(rng);
            }
        pos = step_positions(prev, acc, params);
        const double frep = 0.05 + 0.95 * std::uniform_real_distribution<double>(0, 1)(rng);
        retrieve_errant_simple(pos, prev, space, frep);
        retrieve_errant_directional(pos, prev, acc, space, frep);
        for (int p = 0; p < np; ++p)
            for (int d = 0; d < nd; ++d) {
                CHECK(pos(p, d) >= 0.0);
                CHECK(pos(p, d) <= 1.0);
            }
    }
}

TEST_CASE("shrink_space hand examples and nesting") {
    auto space = DecisionSpace::from_bounds(Eigen::VectorXd::Zero(1),
                                            Eigen::VectorXd::Constant(1, 10.0));
    shrink_space(space, Eigen::VectorXd::Constant(1, 4.0));
    CHECK(space.live_min(0) == 2.0);
    CHECK(space.live_max(0) == 7.0);

    auto sym = DecisionSpace::from_bounds(Eigen::VectorXd::Constant(1, -1.0),
                                          Eigen::VectorXd::Ones(1));
    shrink_space(sym, Eigen::VectorXd::Zero(1));
    CHECK(sym.live_min(0) == -0.5);
    CHECK(sym.live_max(0) == 0.5);

    // Repeated shrinks about a fixed point converge to it; bounds stay nested
    // and widths halve each time.
    auto s = DecisionSpace::from_bounds(Eigen::Vector2d(-8, 0), Eigen::Vector2d(8, 16));
    const Eigen::Vector2d best(1.0, 3.0);
    Eigen::Vector2d prev_min = s.live_min, prev_max = s.live_max;
    for (int i = 0; i < 50; ++i) {
        const Eigen::Vector2d width = s.live_max - s.live_min;
        shrink_space(s, best);
        CHECK((s.live_min.array() >= prev_min.array()).all());
        CHECK((s.live_max.array() <= prev_max.array()).all());
        CHECK((s.live_min.array() >= s.start_min.array()).all());
        CHECK((s.live_max.array() <= s.start_max.array()).all());
        const Eigen::Vector2d new_width = s.live_max - s.live_min;
        CHECK(new_width(0) == doctest::Approx(width(0) / 2.0));
        CHECK(new_width(1) == doctest::Approx(width(1) / 2.0));
        prev_min = s.live_min;
        prev_max = s.live_max;
    }
    CHECK(s.live_min(0) == doctest::Approx(1.0));
    CHECK(s.live_max(1) == doctest::Approx(3.0));
}

TEST_CASE("frep_next hand examples and orbit") {
    CfoParams p;
    CHECK(frep_next(0.5, p) == doctest::Approx(0.6));
    CHECK(frep_next(1.0, p) == 0.05);
    CHECK(frep_next(0.05, p) == doctest::Approx(0.15));

    double f = p.frep_init;
    for (int i = 0; i < 1000; ++i) {
        f = frep_next(f, p);
        CHECK(f >= 0.05);
        CHECK(f <= 1.0);
    }
    // First few orbit members from 0.5.
    double g = 0.5;
    const double expected[] = {0.6, 0.7, 0.8, 0.9, 1.0, 0.05, 0.15};
    for (double e : expected) {
        g = frep_next(g, p);
        CHECK(g == doctest::Approx(e));
    }
}

TEST_CASE("fitness_saturated guard and plateau detection") {
    const int np = 3, nt = 60;
    Eigen::MatrixXd m = Eigen::MatrixXd::Constant(np, nt + 1, -5.0);
    CHECK(fitness_saturated(m, 20, 25, 1e-6) == false);  // j < window + 10
    CHECK(fitness_saturated(m, 34, 25, 1e-6) == false);
    CHECK(fitness_saturated(m, 35, 25, 1e-6) == true);   // constant plateau

    // Strictly increasing per-step best -> mean lags the last value.
    Eigen::MatrixXd inc(np, nt + 1);
    for (int j = 0; j <= nt; ++j) inc.col(j).setConstant(static_cast<double>(j));
    CHECK(fitness_saturated(inc, 50, 25, 1e-6) == false);
}

TEST_CASE("davg hand examples") {
    auto space1 = unit_box(1);
    ProbeRun run;
    run.r.push_back((Eigen::MatrixXd(2, 1) << 0.0, 1.0).finished());
    run.m.resize(2, 1);
    run.m << 1.0, 0.0;
    CHECK(davg(run, 0, space1) == doctest::Approx(1.0));

    auto space2 = unit_box(2);
    ProbeRun run2;
    run2.r.push_back((Eigen::MatrixXd(3, 2) << 0, 0, 1, 1, 0, 0).finished());
    run2.m.resize(3, 1);
    run2.m << 1.0, 0.0, 0.5;
    CHECK(davg(run2, 0, space2) == doctest::Approx(0.5));

    // All probes coincident with the best -> 0.
    ProbeRun runc;
    runc.r.push_back(Eigen::MatrixXd::Constant(3, 2, 0.25));
    runc.m.resize(3, 1);
    runc.m << 1.0, 1.0, 1.0;
    CHECK(davg(runc, 0, space2) == 0.0);

    ProbeRun single;
    single.r.push_back(Eigen::MatrixXd::Zero(1, 1));
    single.m.resize(1, 1);
    single.m << 0.0;
    CHECK_THROWS_AS(davg(single, 0, space1), ValidationError);
}

TEST_CASE("run_single converges on the 2-D sphere") {
    auto space = DecisionSpace::from_bounds(Eigen::Vector2d(-100, -100),
                                            Eigen::Vector2d(100, 100));
    CfoParams p;
    RunBest best = run_single(neg_sphere(), space, 4, 0.5, p);
    CHECK(best.fitness >= -1e-3);
    // Live bounds restored on exit.
    CHECK(space.live_min == space.start_min);
    CHECK(space.live_max == space.start_max);
}

TEST_CASE("run_single with nt=0 returns the best initial probe") {
    auto space = DecisionSpace::from_bounds(Eigen::Vector2d(-100, -100),
                                            Eigen::Vector2d(100, 100));
    CfoParams p;
    p.nt = 0;
    RunBest best = run_single(neg_sphere(), space, 4, 0.5, p);
    const Eigen::MatrixXd init = init_probe_lines(space, 4, 0.5);
    double expect = -1e300;
    for (int i = 0; i < init.rows(); ++i)
        expect = std::max(expect, -init.row(i).squaredNorm());
    CHECK(best.fitness == expect);
    CHECK(best.step == 0);
}

TEST_CASE("run_single rejects non-finite objectives with probe and step") {
    auto space = unit_box(2);
    CfoParams p;
    Objective bad = [](const Eigen::VectorXd& x) {
        return x(0) > 0.9 ? std::numeric_limits<double>::quiet_NaN() : -x.squaredNorm();
    };
    CHECK_THROWS_AS(run_single(bad, space, 2, 0.5, p), EvaluationError);
}

TEST_CASE("run_single is bitwise deterministic") {
    auto space = DecisionSpace::from_bounds(Eigen::Vector2d(-6, -6), Eigen::Vector2d(6, 6));
    CfoParams p;
    Objective himmelblau = [](const Eigen::VectorXd& x) {
        const double a = x(0) * x(0) + x(1) - 11.0;
        const double b = x(0) + x(1) * x(1) - 7.0;
        return 200.0 - (a * a + b * b);
    };
    RunHistory h1, h2;
    std::int64_t e1 = 0, e2 = 0;
    RunBest r1 = run_single(himmelblau, space, 4, 0.3, p, &h1, &e1);
    RunBest r2 = run_single(himmelblau, space, 4, 0.3, p, &h2, &e2);
    CHECK(r1.fitness == r2.fitness);
    CHECK(r1.probe == r2.probe);
    CHECK(r1.step == r2.step);
    CHECK(r1.last_step == r2.last_step);
    CHECK(r1.best_positions == r2.best_positions);
    CHECK(e1 == e2);
    CHECK(h1.best_fitness == h2.best_fitness);
    CHECK(h1.davg == h2.davg);
    CHECK(h1.best_probe == h2.best_probe);
}

TEST_CASE("run history is step-complete and best fitness is non-decreasing") {
    auto space = DecisionSpace::from_bounds(Eigen::Vector2d(-100, -100),
                                            Eigen::Vector2d(100, 100));
    CfoParams p;
    RunHistory h;
    RunBest best = run_single(neg_sphere(), space, 4, 0.7, p, &h);
    CHECK(static_cast<int>(h.best_fitness.size()) == h.last_step + 1);
    CHECK(h.best_fitness.size() == h.davg.size());
    CHECK(h.best_fitness.size() == h.best_probe.size());
    CHECK(best.last_step == h.last_step);
    for (std::size_t j = 1; j < h.best_fitness.size(); ++j)
        CHECK(h.best_fitness[j] >= h.best_fitness[j - 1]);
    CHECK(h.best_fitness.back() == best.fitness);
}

TEST_CASE("gamma grid with n_gamma=11 is exactly the 0.1 grid") {
    CfoParams p;
    for (int k = 0; k <= 10; ++k) {
        const double gamma = static_cast<double>(k) / (p.n_gamma - 1);
        CHECK(gamma == doctest::Approx(k * 0.1).epsilon(1e-15));
    }
}

TEST_CASE("degenerate sweep equals its single run") {
    auto space = DecisionSpace::from_bounds(Eigen::Vector2d(-10, -10),
                                            Eigen::Vector2d(10, 10));
    CfoParams p;
    p.n_gamma = 1;
    p.max_np_per_dim = 2;
    SweepResult sr = sweep(neg_sphere(), space, p);
    std::int64_t evals = 0;
    RunBest rb = run_single(neg_sphere(), space, 2, 0.0, p, nullptr, &evals);
    CHECK(sr.best.fitness == rb.fitness);
    CHECK(sr.best.probe == rb.probe);
    CHECK(sr.best.step == rb.step);
    CHECK(sr.best.np_per_dim == 2);
    CHECK(sr.evaluations == evals);
}

TEST_CASE("sweep is bitwise deterministic") {
    auto space = DecisionSpace::from_bounds(Eigen::Vector2d(-6, -6), Eigen::Vector2d(6, 6));
    CfoParams p;
    p.nt = 60;  // keep the double sweep quick
    SweepResult a = sweep(neg_sphere(), space, p);
    SweepResult b = sweep(neg_sphere(), space, p);
    CHECK(a.best.fitness == b.best.fitness);
    CHECK(a.best.np_per_dim == b.best.np_per_dim);
    CHECK(a.best.gamma == b.best.gamma);
    CHECK(a.best.best_positions == b.best.best_positions);
    CHECK(a.evaluations == b.evaluations);
    CHECK(a.best_history.best_fitness == b.best_history.best_fitness);
}

TEST_CASE("CfoParams validation") {
    CfoParams p;
    CHECK_NOTHROW(p.validate());
    CfoParams bad = p;
    bad.nt = -1;
    CHECK_THROWS_AS(bad.validate(), ValidationError);
    bad = p;
    bad.frep_min = 0.0;
    CHECK_THROWS_AS(bad.validate(), ValidationError);
    bad = p;
    bad.dt = 0.0;
    CHECK_THROWS_AS(bad.validate(), ValidationError);
}

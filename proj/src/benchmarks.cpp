#include "vz0/benchmarks.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "vz0/errors.hpp"

namespace vz0 {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kE = 2.71828182845904523536;

double round_to(double x, int places) {
    const double scale = std::pow(10.0, places);
    return std::round(x * scale) / scale;
}

double sign_of(double x) { return x <= 0.0 ? -1.0 : 1.0; }

double penalty_u(double x, double a, double k, double m) {
    if (x > a) return k * std::pow(x - a, m);
    if (x < -a) return k * std::pow(-x - a, m);
    return 0.0;
}

using V = Eigen::VectorXd;

double parrott_f4(const V& x) {
    const double t = x(0);
    return std::exp(-2.0 * std::log(2.0) * std::pow((t - 0.08) / 0.854, 2)) *
           std::pow(std::sin(5.0 * kPi * (std::pow(t, 0.75) - 0.05)), 6);
}

double sgo(const V& x) {
    auto term = [](double t) { return std::pow(t, 4) - 16.0 * t * t + 0.5 * t; };
    return -(term(x(0)) + term(x(1)));
}

double goldstein_price(const V& x) {
    const double x1 = x(0), x2 = x(1);
    const double t1 = 1.0 + std::pow(x1 + x2 + 1.0, 2) *
                                (19.0 - 14.0 * x1 + 3.0 * x1 * x1 - 14.0 * x2 +
                                 6.0 * x1 * x2 + 3.0 * x2 * x2);
    const double t2 = 30.0 + std::pow(2.0 * x1 - 3.0 * x2, 2) *
                                 (18.0 - 32.0 * x1 + 12.0 * x1 * x1 + 48.0 * x2 -
                                  36.0 * x1 * x2 + 27.0 * x2 * x2);
    return -t1 * t2;
}

double step_function(const V& x) {
    double z = 0.0;
    for (int i = 0; i < x.size(); ++i) {
        double offset = 0.0;
        if (x.size() == 2) offset = (i == 0) ? 75.0 : 35.0;
        z += std::pow(std::floor(x(i) - offset + 0.5), 2);
    }
    return -z;
}

double schwefel_226(const V& x) {
    double z = 0.0;
    for (int i = 0; i < x.size(); ++i) z += x(i) * std::sin(std::sqrt(std::abs(x(i))));
    return z;
}

double colville(const V& x) {
    const double x1 = x(0), x2 = x(1), x3 = x(2), x4 = x(3);
    return -(100.0 * std::pow(x2 - x1 * x1, 2) + std::pow(1.0 - x1, 2) +
             90.0 * std::pow(x4 - x3 * x3, 2) + std::pow(1.0 - x3, 2) +
             10.1 * (std::pow(x2 - 1.0, 2) + std::pow(x4 - 1.0, 2)) +
             19.8 * (x2 - 1.0) * (x4 - 1.0));
}

double griewank(const V& x) {
    double sum = 0.0, prod = 1.0;
    for (int i = 0; i < x.size(); ++i) {
        const double xi = x(i) - 75.123;
        sum += xi * xi;
        prod *= std::cos(xi / std::sqrt(i + 1.0));
    }
    return -(sum / 4000.0 - prod + 1.0);
}

double himmelblau(const V& x) {
    const double x1 = x(0), x2 = x(1);
    return 200.0 - std::pow(x1 * x1 + x2 - 11.0, 2) - std::pow(x1 + x2 * x2 - 7.0, 2);
}

double rosenbrock(const V& x) {
    double z = 0.0;
    for (int i = 0; i + 1 < x.size(); ++i) {
        z += 100.0 * std::pow(x(i + 1) - x(i) * x(i), 2) + std::pow(1.0 - x(i), 2);
    }
    return -z;
}

double sphere(const V& x) { return -x.squaredNorm(); }

double himmelblau_nlo(const V& x) {
    const double x1 = x(0), x2 = x(1), x3 = x(2), x4 = x(3), x5 = x(4);
    const double g1 = 85.334407 + 0.0056858 * x2 * x5 + 0.00026 * x1 * x4 - 0.0022053 * x3 * x5;
    const double g2 = 80.51249 + 0.0071317 * x2 * x5 + 0.0029955 * x1 * x2 + 0.0021813 * x3 * x3;
    const double g3 = 9.300961 + 0.0047026 * x3 * x5 + 0.0012547 * x1 * x3 + 0.0019085 * x3 * x4;
    if (g1 < 0.0 || g1 > 92.0 || g2 < 90.0 || g2 > 110.0 || g3 < 20.0 || g3 > 25.0)
        return kInfeasibleFitness;
    return -(5.3578547 * x3 * x3 + 0.8356891 * x1 * x5 + 37.29329 * x1 - 40792.141);
}

double tripod(const V& x) {
    const double x1 = x(0), x2 = x(1);
    const double s1 = sign_of(x1), s2 = sign_of(x2);
    const double t1 = (1.0 - s2) * (std::abs(x1) + std::abs(x2 + 50.0));
    const double t2 = 0.5 * (1.0 + s2) * (1.0 - s1) *
                      (1.0 + std::abs(x1 + 50.0) + std::abs(x2 - 50.0));
    const double t3 = (1.0 + s1) * (2.0 + std::abs(x1 - 50.0) + std::abs(x2 - 50.0));
    return -0.5 * (t1 + t2 + t3);
}

double rosenbrock_f6(const V& x) {
    double sum = 0.0;
    for (int i = 1; i < x.size(); ++i) {
        const double zi = x(i) + 1.0;
        const double zi1 = x(i - 1) + 1.0;
        sum += 100.0 * std::pow(zi1 * zi1 - zi, 2) + std::pow(zi1 - 1.0, 2);
    }
    return -(390.0 + sum);
}

double compression_spring(const V& x) {
    const double x1 = round_to(x(0), 0);
    const double x2 = x(1);
    const double x3 = round_to(x(2), 3);
    const double f_max = 1000.0, s_lim = 189000.0, l_max = 14.0;
    const double sig_pm = 6.0, f_p = 300.0, sig_w = 1.25;
    const double cf = 1.0 + 0.75 * x3 / (x2 - x3) + 0.615 * x3 / x2;
    const double k = 11.5e6 * std::pow(x3, 4) / (8.0 * x1 * std::pow(x2, 3));
    const double lf = f_max / k + 1.05 * (x1 + 2.0) * x3;
    const double sig_p = f_p / k;
    const double g1 = 8.0 * cf * f_max * x2 / (kPi * std::pow(x3, 3)) - s_lim;
    const double g2 = lf - l_max;
    const double g3 = sig_p - sig_pm;
    const double g4 = sig_p - f_p / k;
    const double g5 = sig_w - (f_max - f_p) / k;
    if (g1 > 0.0 || g2 > 0.0 || g3 > 0.0 || g4 > 0.0 || g5 > 0.0)
        return kInfeasibleFitness;
    return -(kPi * kPi * x2 * x3 * x3 * (x1 + 1.0) / 4.0);
}

double gear_train(const V& x) {
    const double x1 = round_to(x(0), 0), x2 = round_to(x(1), 0);
    const double x3 = round_to(x(2), 0), x4 = round_to(x(3), 0);
    return -std::pow(1.0 / 6.931 - x1 * x2 / (x3 * x4), 2);
}

double f2_abs(const V& x) {
    double sum = 0.0, prod = 1.0;
    for (int i = 0; i < x.size(); ++i) {
        sum += std::abs(x(i));
        prod *= std::abs(x(i));
    }
    return -(sum + prod);
}

double f3_cumsum(const V& x) {
    double z = 0.0, run = 0.0;
    for (int i = 0; i < x.size(); ++i) {
        run += x(i);
        z += run * run;
    }
    return -z;
}

double f4_maxabs(const V& x) { return -x.cwiseAbs().maxCoeff(); }

double f5_defective(const V& x) {
    // Reference form kept verbatim, including its misplaced parenthesis; the
    // classical chained-quadratic appears separately as ROSENBROCK.
    double z = 0.0;
    for (int i = 0; i + 1 < x.size(); ++i) {
        const double term = 100.0 * std::pow(x(i + 1) - x(i) * x(i), 2) + (x(i) - 1.0);
        z += term * term;
    }
    return -z;
}

double f6_step(const V& x) {
    double z = 0.0;
    for (int i = 0; i < x.size(); ++i) z += std::pow(std::floor(x(i) + 0.5), 2);
    return -z;
}

double f7_quartic(const V& x) {
    // The stochastic additive term is replaced by its mean 0.5 to keep the
    // evaluation deterministic.
    double z = 0.0;
    for (int i = 0; i < x.size(); ++i) z += (i + 1.0) * std::pow(x(i), 4);
    return -z - 0.5;
}

double f9_rastrigin_sq(const V& x) {
    double z = 0.0;
    for (int i = 0; i < x.size(); ++i) {
        const double t = x(i) * x(i) - 10.0 * std::cos(2.0 * kPi * x(i)) + 10.0;
        z += t * t;  // reference form squares each Rastrigin term
    }
    return -z;
}

double f10_ackley(const V& x) {
    const double n = static_cast<double>(x.size());
    double sum1 = 0.0, sum2 = 0.0;
    for (int i = 0; i < x.size(); ++i) {
        sum1 += x(i) * x(i);
        sum2 += std::cos(2.0 * kPi * x(i));
    }
    return -(-20.0 * std::exp(-0.2 * std::sqrt(sum1 / n)) - std::exp(sum2 / n) + 20.0 + kE);
}

double f11_griewank100(const V& x) {
    double sum = 0.0, prod = 1.0;
    for (int i = 0; i < x.size(); ++i) {
        const double xi = x(i) - 100.0;
        sum += xi * xi;
        prod *= std::cos(xi / std::sqrt(i + 1.0));
    }
    return -(sum / 4000.0 - prod + 1.0);
}

double f12_penalized1(const V& x) {
    const int n = static_cast<int>(x.size());
    auto y = [&](int i) { return 1.0 + (x(i) + 1.0) / 4.0; };
    double sum1 = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
        sum1 += std::pow(y(i) - 1.0, 2) *
                (1.0 + 10.0 * std::pow(std::sin(kPi * y(i + 1)), 2));
    }
    sum1 += 10.0 * std::pow(std::sin(kPi * y(0)), 2) + std::pow(y(n - 1) - 1.0, 2);
    sum1 = kPi * sum1 / n;
    double sum2 = 0.0;
    for (int i = 0; i < n; ++i) sum2 += penalty_u(x(i), 10.0, 100.0, 4.0);
    return -(sum1 + sum2);
}

double f13_penalized2(const V& x) {
    const int n = static_cast<int>(x.size());
    double sum1 = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
        sum1 += std::pow(x(i) - 1.0, 2) *
                (1.0 + std::pow(std::sin(3.0 * kPi * x(i + 1)), 2));
    }
    sum1 += std::pow(std::sin(3.0 * kPi * x(0)), 2) +
            std::pow(x(n - 1) - 1.0, 2) *
                (1.0 + std::pow(std::sin(2.0 * kPi * x(n - 1)), 2));
    double sum2 = 0.0;
    for (int i = 0; i < n; ++i) sum2 += penalty_u(x(i), 5.0, 100.0, 4.0);
    return -(sum1 / 10.0 + sum2);
}

double f14_foxholes(const V& x) {
    static const double a1[5] = {-32.0, -16.0, 0.0, 16.0, 32.0};
    double sum1 = 0.0;
    for (int jj = 0; jj < 25; ++jj) {
        const double ax = a1[jj % 5];
        const double ay = a1[jj / 5];
        const double sum2 = std::pow(x(0) - ax, 6) + std::pow(x(1) - ay, 6);
        sum1 += 1.0 / (jj + 1.0 + sum2);
    }
    return -1.0 / (0.002 + sum1);
}

double f15_kowalik(const V& x) {
    static const double a[11] = {0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627,
                                 0.0456, 0.0342, 0.0323, 0.0235, 0.0246};
    static const double binv[11] = {0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0};
    double z = 0.0;
    for (int j = 0; j < 11; ++j) {
        const double b = 1.0 / binv[j];
        const double num = x(0) * (b * b + b * x(1));
        const double den = b * b + b * x(2) + x(3);
        z += std::pow(a[j] - num / den, 2);
    }
    return -z;
}

double f16_camel_back(const V& x) {
    const double x1 = x(0), x2 = x(1);
    return -(4.0 * x1 * x1 - 2.1 * std::pow(x1, 4) + std::pow(x1, 6) / 3.0 + x1 * x2 -
             4.0 * x2 * x2 + 4.0 * std::pow(x2, 4));
}

double f17_branin(const V& x) {
    const double x1 = x(0), x2 = x(1);
    const double t = x2 - 5.1 * x1 * x1 / (4.0 * kPi * kPi) + 5.0 * x1 / kPi - 6.0;
    return -(t * t + 10.0 * (1.0 - 1.0 / (8.0 * kPi)) * std::cos(x1) + 10.0);
}

double hartman(const V& x, int m_dims, const double* a, const double* c, const double* p) {
    double z = 0.0;
    for (int j = 0; j < 4; ++j) {
        double sum = 0.0;
        for (int i = 0; i < m_dims; ++i) {
            sum += a[j * m_dims + i] * std::pow(x(i) - p[j * m_dims + i], 2);
        }
        z += c[j] * std::exp(-sum);
    }
    return z;
}

double f19_hartman3(const V& x) {
    static const double a[12] = {3.0, 10.0, 30.0, 0.1, 10.0, 35.0,
                                 3.0, 10.0, 30.0, 0.1, 10.0, 35.0};
    static const double c[4] = {1.0, 1.2, 3.0, 3.2};
    static const double p[12] = {0.3689, 0.1170, 0.2673, 0.4699, 0.4387, 0.7470,
                                 0.1091, 0.8732, 0.5547, 0.03815, 0.5743, 0.8828};
    return hartman(x, 3, a, c, p);
}

double f20_hartman6(const V& x) {
    static const double a[24] = {10.0, 3.0,  17.0, 3.5,  1.7,  8.0,
                                 0.05, 10.0, 17.0, 0.1,  8.0,  14.0,
                                 3.0,  3.5,  1.7,  10.0, 17.0, 8.0,
                                 17.0, 8.0,  0.05, 10.0, 0.1,  14.0};
    static const double c[4] = {1.0, 1.2, 3.0, 3.2};
    static const double p[24] = {0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886,
                                 0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991,
                                 0.2348, 0.1415, 0.3522, 0.2883, 0.3047, 0.6650,
                                 0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381};
    return hartman(x, 6, a, c, p);
}

double shekel(const V& x, int m) {
    static const double a[10][4] = {{4, 4, 4, 4}, {1, 1, 1, 1}, {8, 8, 8, 8},
                                    {6, 6, 6, 6}, {3, 7, 3, 7}, {2, 9, 2, 9},
                                    {5, 5, 3, 3}, {8, 1, 8, 1}, {6, 2, 6, 2},
                                    {7, 3.6, 7, 3.6}};
    static const double c[10] = {0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5};
    double z = 0.0;
    for (int j = 0; j < m; ++j) {
        double sum = 0.0;
        for (int i = 0; i < 4; ++i) sum += std::pow(x(i) - a[j][i], 2);
        z += 1.0 / (sum + c[j]);
    }
    return z;
}

V constant_vec(int n, double v) { return V::Constant(n, v); }

BenchmarkSpec make(const std::string& name, int nd, const V& lo, const V& hi,
                   std::function<double(const V&)> fn, std::string note = "") {
    BenchmarkSpec s;
    s.name = name;
    s.dims = nd;
    s.lower = lo;
    s.upper = hi;
    s.evaluator = std::move(fn);
    s.note = std::move(note);
    return s;
}

BenchmarkSpec make_sym(const std::string& name, int nd, double half_width,
                       std::function<double(const V&)> fn, std::string note = "") {
    return make(name, nd, constant_vec(nd, -half_width), constant_vec(nd, half_width),
                std::move(fn), std::move(note));
}

void set_best(BenchmarkSpec& s, double value, const V& where, double tol = 1e-6) {
    s.best_value = value;
    s.best_location = where;
    s.best_tol = tol;
}

std::vector<BenchmarkSpec> build_catalog() {
    std::vector<BenchmarkSpec> cat;

    cat.push_back(make("PARROTTF4", 1, constant_vec(1, 0.0), constant_vec(1, 1.0), parrott_f4));

    {
        auto s = make_sym("SGO", 2, 50.0, sgo);
        set_best(s, 130.8323226, constant_vec(2, -2.8362075), 1e-3);
        cat.push_back(s);
    }
    {
        auto s = make_sym("GP", 2, 100.0, goldstein_price);
        set_best(s, -3.0, (V(2) << 0.0, -1.0).finished());
        cat.push_back(s);
    }
    cat.push_back(make("STEP", 2, (V(2) << 72.0, 27.0).finished(),
                       (V(2) << 78.0, 33.0).finished(), step_function));
    {
        auto s = make_sym("SCHWEFEL_226", 30, 500.0, schwefel_226);
        set_best(s, 12569.5, constant_vec(30, 420.8687), 0.5);
        cat.push_back(s);
    }
    {
        auto s = make_sym("COLVILLE", 4, 10.0, colville);
        set_best(s, 0.0, constant_vec(4, 1.0));
        cat.push_back(s);
    }
    {
        auto s = make_sym("GRIEWANK", 2, 600.0, griewank);
        set_best(s, 0.0, constant_vec(2, 75.123));
        cat.push_back(s);
    }
    {
        auto s = make_sym("HIMMELBLAU", 2, 6.0, himmelblau);
        set_best(s, 200.0, (V(2) << 3.0, 2.0).finished());
        cat.push_back(s);
    }
    {
        auto s = make_sym("ROSENBROCK", 2, 2.0, rosenbrock);
        set_best(s, 0.0, constant_vec(2, 1.0));
        cat.push_back(s);
    }
    {
        auto s = make_sym("SPHERE", 2, 100.0, sphere);
        set_best(s, 0.0, constant_vec(2, 0.0));
        cat.push_back(s);
    }
    {
        V lo(5), hi(5);
        lo << 78, 33, 27, 27, 27;
        hi << 102, 45, 45, 45, 45;
        cat.push_back(make("HIMMELBLAUNLO", 5, lo, hi, himmelblau_nlo,
                           "constrained; infeasible points get the sentinel fitness"));
    }
    {
        auto s = make_sym("TRIPOD", 2, 100.0, tripod);
        set_best(s, 0.0, (V(2) << 0.0, -50.0).finished());
        cat.push_back(s);
    }
    {
        auto s = make_sym("ROSENBROCKF6", 10, 100.0, rosenbrock_f6,
                          "reference listing flags this form as erroneous; kept verbatim");
        set_best(s, -390.0, constant_vec(10, 0.0));
        cat.push_back(s);
    }
    {
        V lo(3), hi(3);
        lo << 1.0, 0.6, 0.207;
        hi << 70.0, 3.0, 0.5;
        cat.push_back(make("COMPRESSIONSPRING", 3, lo, hi, compression_spring,
                           "constrained; x1 rounded to integer, x3 to 3 decimals"));
    }
    cat.push_back(make("GEARTRAIN", 4, constant_vec(4, 12.0), constant_vec(4, 60.0),
                       gear_train, "all variables rounded to integers"));

    {
        auto s = make_sym("F1", 30, 100.0, sphere);
        set_best(s, 0.0, constant_vec(30, 0.0));
        cat.push_back(s);
    }
    {
        auto s = make_sym("F2", 30, 10.0, f2_abs);
        set_best(s, 0.0, constant_vec(30, 0.0));
        cat.push_back(s);
    }
    {
        auto s = make_sym("F3", 30, 100.0, f3_cumsum);
        set_best(s, 0.0, constant_vec(30, 0.0));
        cat.push_back(s);
    }
    {
        auto s = make_sym("F4", 30, 100.0, f4_maxabs);
        set_best(s, 0.0, constant_vec(30, 0.0));
        cat.push_back(s);
    }
    {
        auto s = make_sym("F5", 30, 30.0, f5_defective,
                          "verbatim reference form (misplaced parenthesis); see ROSENBROCK");
        set_best(s, 0.0, constant_vec(30, 1.0));
        cat.push_back(s);
    }
    {
        auto s = make_sym("F6", 30, 100.0, f6_step);
        set_best(s, 0.0, constant_vec(30, 0.0));
        cat.push_back(s);
    }
    {
        auto s = make_sym("F8", 30, 500.0, schwefel_226);
        set_best(s, 12569.5, constant_vec(30, 420.8687), 0.5);
        cat.push_back(s);
    }
    {
        auto s = make_sym("F9", 30, 5.12, f9_rastrigin_sq);
        set_best(s, 0.0, constant_vec(30, 0.0));
        cat.push_back(s);
    }
    {
        auto s = make_sym("F10", 30, 32.0, f10_ackley);
        set_best(s, 0.0, constant_vec(30, 0.0), 1e-9);
        cat.push_back(s);
    }
    {
        auto s = make_sym("F11", 30, 600.0, f11_griewank100);
        set_best(s, 0.0, constant_vec(30, 100.0));
        cat.push_back(s);
    }
    {
        auto s = make_sym("F12", 30, 50.0, f12_penalized1);
        set_best(s, 0.0, constant_vec(30, -1.0));
        cat.push_back(s);
    }
    {
        auto s = make_sym("F13", 30, 50.0, f13_penalized2);
        set_best(s, 0.0, constant_vec(30, 1.0));
        cat.push_back(s);
    }
    {
        auto s = make_sym("F14", 2, 65.536, f14_foxholes);
        set_best(s, -0.998004, constant_vec(2, -32.0), 1e-4);
        cat.push_back(s);
    }
    {
        auto s = make_sym("F15", 4, 5.0, f15_kowalik);
        set_best(s, -3.075e-4, (V(4) << 0.1928, 0.1908, 0.1231, 0.1358).finished(), 1e-5);
        cat.push_back(s);
    }
    {
        auto s = make_sym("F16", 2, 5.0, f16_camel_back);
        set_best(s, 1.0316285, (V(2) << 0.08983, -0.7126).finished(), 1e-4);
        cat.push_back(s);
    }
    {
        auto s = make("F17", 2, (V(2) << -5.0, 0.0).finished(),
                      (V(2) << 10.0, 15.0).finished(), f17_branin);
        set_best(s, -0.397887, (V(2) << kPi, 2.275).finished(), 1e-4);
        cat.push_back(s);
    }
    {
        auto s = make_sym("F18", 2, 2.0, goldstein_price);
        set_best(s, -3.0, (V(2) << 0.0, -1.0).finished());
        cat.push_back(s);
    }
    {
        auto s = make("F19", 3, constant_vec(3, 0.0), constant_vec(3, 1.0), f19_hartman3);
        set_best(s, 3.86278, (V(3) << 0.114614, 0.555649, 0.852547).finished(), 1e-4);
        cat.push_back(s);
    }
    {
        auto s = make("F20", 6, constant_vec(6, 0.0), constant_vec(6, 1.0), f20_hartman6);
        set_best(s, 3.3218771,
                 (V(6) << 0.20169, 0.150011, 0.476874, 0.275332, 0.311652, 0.6573).finished(),
                 1e-4);
        cat.push_back(s);
    }
    {
        auto s = make("F21", 4, constant_vec(4, 0.0), constant_vec(4, 10.0),
                      [](const V& x) { return shekel(x, 5); });
        set_best(s, 10.1532, (V(4) << 4.00004, 4.00013, 4.00004, 4.00013).finished(), 1e-3);
        cat.push_back(s);
    }
    {
        auto s = make("F22", 4, constant_vec(4, 0.0), constant_vec(4, 10.0),
                      [](const V& x) { return shekel(x, 7); });
        set_best(s, 10.4029, (V(4) << 4.00057, 4.00069, 3.99949, 3.99961).finished(), 1e-3);
        cat.push_back(s);
    }
    {
        auto s = make("F23", 4, constant_vec(4, 0.0), constant_vec(4, 10.0),
                      [](const V& x) { return shekel(x, 10); });
        set_best(s, 10.5364, (V(4) << 4.00075, 4.00059, 3.99966, 3.99951).finished(), 1e-3);
        cat.push_back(s);
    }
    return cat;
}

const BenchmarkSpec& f7_spec() {
    static const BenchmarkSpec s = [] {
        auto e = make_sym("F7", 30, 1.28, f7_quartic,
                          "noisy quartic; noise term fixed at its mean 0.5, so not in the "
                          "default catalog");
        return e;
    }();
    return s;
}

std::string canonical_name(const std::string& name) {
    std::string u;
    for (char c : name) u += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (u == "GOLDSTEIN-PRICE" || u == "GOLDSTEINPRICE") return "GP";
    if (u == "STEPFUNCTION") return "STEP";
    if (u == "SCHWEFEL226") return "SCHWEFEL_226";
    return u;
}

}  // namespace

const std::vector<BenchmarkSpec>& benchmark_catalog() {
    static const std::vector<BenchmarkSpec> cat = build_catalog();
    return cat;
}

const BenchmarkSpec* find_benchmark(const std::string& name) {
    const std::string key = canonical_name(name);
    if (key == "F7") return &f7_spec();
    for (const auto& s : benchmark_catalog()) {
        if (s.name == key) return &s;
    }
    return nullptr;
}

double evaluate_benchmark(const std::string& name, const Eigen::VectorXd& x) {
    const BenchmarkSpec* s = find_benchmark(name);
    if (!s) throw ValidationError("unknown benchmark: " + name);
    if (x.size() != s->dims)
        throw ValidationError("benchmark " + s->name + " expects " +
                              std::to_string(s->dims) + " dimensions");
    return s->evaluator(x);
}

}  // namespace vz0

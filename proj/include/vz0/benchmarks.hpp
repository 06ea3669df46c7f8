#ifndef VZ0_BENCHMARKS_HPP
#define VZ0_BENCHMARKS_HPP

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace vz0 {

// One catalog entry. All objectives are to be MAXIMIZED; classical
// minimization problems are stored negated.
struct BenchmarkSpec {
    std::string name;  // canonical upper-case identifier
    int dims = 0;
    Eigen::VectorXd lower, upper;
    std::function<double(const Eigen::VectorXd&)> evaluator;
    // Known optimum (maximum) where a closed-form/reference value exists.
    std::optional<double> best_value;
    std::optional<Eigen::VectorXd> best_location;
    double best_tol = 1e-6;  // tolerance for reproducing best_value at best_location
    std::string note;  // caveats (e.g. known-defective reference forms)
};

// Fitness assigned to infeasible points of the constrained problems.
inline constexpr double kInfeasibleFitness = -1e100;

// The full catalog (F7 excluded by default; see find()).
const std::vector<BenchmarkSpec>& benchmark_catalog();

// Case-insensitive lookup, including names outside the default catalog (F7).
// Returns nullptr when unknown.
const BenchmarkSpec* find_benchmark(const std::string& name);

// Evaluate by name; throws ValidationError for unknown names or wrong
// dimensionality.
double evaluate_benchmark(const std::string& name, const Eigen::VectorXd& x);

}  // namespace vz0

#endif

#ifndef VZ0_ERRORS_HPP
#define VZ0_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vz0 {

// Exit-code taxonomy used by the CLI: 0 success, 2 validation, 3 engine,
// 4 parse, 5 internal.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct EvaluationError : std::runtime_error {
    int probe;
    int step;
    EvaluationError(const std::string& msg, int probe_, int step_)
        : std::runtime_error(msg), probe(probe_), step(step_) {}
};

struct EngineError : std::runtime_error {
    enum class Kind { SpawnFailure, NonzeroExit, Timeout, StaleFileId };
    Kind kind;
    EngineError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

struct ParseError : std::runtime_error {
    long line;  // 1-based line number, 0 if unknown
    ParseError(const std::string& msg, long line_ = 0)
        : std::runtime_error(msg), line(line_) {}
};

}  // namespace vz0

#endif

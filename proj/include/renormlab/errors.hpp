#pragma once

#include <stdexcept>
#include <string>

namespace renormlab {

// Exit-code classes used by the CLI: 0 success, 2 config, 3 combinatorics,
// 4 convergence, 5 precision.
class Error : public std::runtime_error {
public:
    Error(const std::string& msg, int code) : std::runtime_error(msg), exit_code(code) {}
    int exit_code;
};

// Bad arguments, bad configuration files, invalid parameter ranges.
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg, 2) {}
};

// Height ties, infinite heights where finite ones are required, combinatorial
// drift during an iteration, structural violations (|rescale| >= 1).
struct CombinatoricsError : Error {
    explicit CombinatoricsError(const std::string& msg) : Error(msg, 3) {}
};

// Newton or limit iterations that fail to reach tolerance.
struct ConvergenceError : Error {
    explicit ConvergenceError(const std::string& msg) : Error(msg, 4) {}
};

// Resolution loss: domain escapes beyond the extrapolation margin, inversion
// residuals, truncation errors past the usable floor.
struct PrecisionError : Error {
    explicit PrecisionError(const std::string& msg) : Error(msg, 5) {}
};

} // namespace renormlab

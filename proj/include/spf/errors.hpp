#pragma once

#include <stdexcept>
#include <string>

namespace spf {

/// Thrown when an input exceeds a documented scan budget (subset scans,
/// edge-subset searches, small-matrix sizes). The message names the budget.
class size_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph text (edge-list or graph6). Carries the 1-based line and
/// 0-based byte offset within that line.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, int line, int byte)
        : std::runtime_error("parse error at line " + std::to_string(line) +
                             ", byte " + std::to_string(byte) + ": " + msg),
          line_(line),
          byte_(byte) {}

    int line() const { return line_; }
    int byte() const { return byte_; }

private:
    int line_;
    int byte_;
};

/// Eigensolver hit its iteration cap before reaching the requested residual.
/// Carries the best iterate so callers can diagnose pathological tolerances.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& msg, double best_value, double residual,
                      long iterations)
        : std::runtime_error(msg),
          best_value_(best_value),
          residual_(residual),
          iterations_(iterations) {}

    double best_value() const { return best_value_; }
    double residual() const { return residual_; }
    long iterations() const { return iterations_; }

private:
    double best_value_;
    double residual_;
    long iterations_;
};

}  // namespace spf

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace centrality {

// Malformed or out-of-range input data. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg, std::uint64_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    std::uint64_t line() const { return line_; }

private:
    std::uint64_t line_;
};

// A parameter value outside its admissible range (bad alpha, beta too close
// to 1/lambda, negative preference weight, ...).
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An iterative solver exhausted its iteration budget before the relative
// l-infinity change dropped below tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, std::uint64_t iterations, double last_change)
        : std::runtime_error(what + " (iterations=" + std::to_string(iterations) +
                             ", last_change=" + std::to_string(last_change) + ")"),
          iterations_(iterations),
          last_change_(last_change) {}
    std::uint64_t iterations() const { return iterations_; }
    double last_change() const { return last_change_; }

private:
    std::uint64_t iterations_;
    double last_change_;
};

// Power iteration collapsed to the zero vector, e.g. a nilpotent adjacency
// matrix has no dominant eigenvector to report.
class DegenerateSpectrumError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace centrality

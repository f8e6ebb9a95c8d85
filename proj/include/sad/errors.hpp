#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sad {

// Out-of-domain argument to a math operation; carries the operation name.
class DomainError : public std::domain_error {
public:
    DomainError(std::string operation, const std::string& message)
        : std::domain_error(operation + ": " + message), operation_(std::move(operation)) {}

    const std::string& operation() const { return operation_; }

private:
    std::string operation_;
};

// Dependency key outside the declared column range; carries row and key.
class IndexError : public std::out_of_range {
public:
    IndexError(int row, int key, int n_cols)
        : std::out_of_range("row " + std::to_string(row) + " has dependency key " +
                            std::to_string(key) + " outside [0, " + std::to_string(n_cols) + ")"),
          row_(row),
          key_(key) {}

    int row() const { return row_; }
    int key() const { return key_; }

private:
    int row_;
    int key_;
};

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Factorization found no usable pivot; carries the elimination step.
class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError(int step, const std::string& message)
        : std::runtime_error(message + " (pivot step " + std::to_string(step) + ")"), step_(step) {}

    int step() const { return step_; }

private:
    int step_;
};

// Newton ran out of iterations; carries the last iterate and residual norm.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(std::vector<double> last_x, double last_norm, int iterations,
                     const std::string& message)
        : std::runtime_error(message + " after " + std::to_string(iterations) +
                             " iterations, residual inf-norm " + std::to_string(last_norm)),
          last_x_(std::move(last_x)),
          last_norm_(last_norm),
          iterations_(iterations) {}

    const std::vector<double>& last_x() const { return last_x_; }
    double last_norm() const { return last_norm_; }
    int iterations() const { return iterations_; }

private:
    std::vector<double> last_x_;
    double last_norm_;
    int iterations_;
};

class InitializationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Integrator step failed; carries simulation time and step index.
class IntegrationError : public std::runtime_error {
public:
    IntegrationError(double t, int step, const std::string& message)
        : std::runtime_error(message + " at t = " + std::to_string(t) + " (step " +
                             std::to_string(step) + ")"),
          t_(t),
          step_(step) {}

    double t() const { return t_; }
    int step() const { return step_; }

private:
    double t_;
    int step_;
};

// Bad command-line or configuration input.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sad

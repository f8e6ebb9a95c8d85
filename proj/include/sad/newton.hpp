#pragma once

#include <span>
#include <vector>

#include "sad/model.hpp"
#include "sad/sparsity.hpp"

namespace sad {

struct NewtonConfig {
    double abs_tol = 1e-10;
    int max_iter = 50;
    double damping = 1.0;
};

struct NewtonStats {
    int iterations = 0;
    double residual_norm = 0.0;
};

// Damped Newton iteration on f(x) = 0. Each iteration performs a single
// derivative-carrying residual evaluation, assembles the sparse Jacobian and
// solves J dx = -f. Updates are scaled by config.damping and clamped
// per component to model.step_limit(i). Throws ConvergenceError when the
// iteration budget is exhausted or the residual stops being finite.
std::vector<double> newton_solve(const ResidualModel& model, std::span<const double> x0,
                                 const NewtonConfig& config, NewtonStats* stats = nullptr);

// Finite-difference Jacobian of the residual, used to cross-check the
// propagated derivatives. Forward differences by default; central when
// requested. Returns a dense row-major matrix.
std::vector<std::vector<double>> fd_jacobian(const ResidualModel& model, std::span<const double> x,
                                             double eps_scale, bool central = false);

double inf_norm(std::span<const double> v);

}  // namespace sad

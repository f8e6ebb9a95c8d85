#pragma once

#include <functional>
#include <span>
#include <vector>

#include "sad/model.hpp"
#include "sad/newton.hpp"
#include "sad/sparsity.hpp"

namespace sad {

struct DaeConfig {
    double h = 1e-3;
    double t_end = 1.0;
    double alpha = 1e3;  // 1/h, weight of the derivative part in the step Jacobian
    NewtonConfig newton{1e-8, 50, 1.0};

    DaeConfig() = default;
    DaeConfig(double h_, double t_end_, NewtonConfig newton_ = NewtonConfig{1e-8, 50, 1.0})
        : h(h_), t_end(t_end_), alpha(1.0 / h_), newton(newton_) {}
};

struct Trajectory {
    std::vector<double> times;
    std::vector<std::vector<double>> states;
};

// Algebraic system for one implicit Euler step: the state is the unknown and
// the derivative is recovered as (v - v_prev) * alpha inside the residual, so
// a single propagated evaluation carries both Jacobian contributions.
class Bdf1StepModel final : public ResidualModel {
public:
    Bdf1StepModel(const DaeModel& dae, double alpha)
        : dae_(dae), alpha_(alpha), vprev_(dae.dimension(), 0.0), t_(0.0) {}

    void set_step(std::span<const double> vprev, double t_next) {
        vprev_.assign(vprev.begin(), vprev.end());
        t_ = t_next;
    }

    int dimension() const override { return dae_.dimension(); }
    double step_limit(int index) const override { return dae_.step_limit(index); }

    void residual(std::span<const double> v, std::span<double> f) const override;
    void residual(std::span<const ADScalar> v, std::span<ADScalar> f) const override;

private:
    const DaeModel& dae_;
    double alpha_;
    std::vector<double> vprev_;
    double t_;
};

// Stationary view F(0, v, t0) = 0 of a differential-algebraic model.
class AlgebraicView final : public ResidualModel {
public:
    explicit AlgebraicView(const DaeModel& dae, double t = 0.0) : dae_(dae), t_(t) {}

    int dimension() const override { return dae_.dimension(); }
    double step_limit(int index) const override { return dae_.step_limit(index); }
    std::vector<double> initial_state() const override { return dae_.initial_state(); }

    void residual(std::span<const double> v, std::span<double> f) const override;
    void residual(std::span<const ADScalar> v, std::span<ADScalar> f) const override;

private:
    const DaeModel& dae_;
    double t_;
};

// Solves F(0, v, 0) = 0 for a consistent starting state by damped Newton
// from the given guess (or the model's initial state). Throws
// InitializationError when the iteration fails.
std::vector<double> consistent_init(const DaeModel& dae, std::span<const double> guess,
                                    const NewtonConfig& config = NewtonConfig{1e-8, 200, 0.5});
std::vector<double> consistent_init(const DaeModel& dae,
                                    const NewtonConfig& config = NewtonConfig{1e-8, 200, 0.5});

using StepObserver = std::function<void(int step, double t, const std::vector<double>& v,
                                        int newton_iterations, double residual_norm)>;

// Fixed-step implicit Euler integration from the given consistent state.
// The trajectory includes the initial row. Throws IntegrationError when a
// step's Newton solve fails.
Trajectory dae_integrate(const DaeModel& dae, std::span<const double> v0, const DaeConfig& config,
                         const StepObserver& observer = {});

// Jacobian of the BDF1 step system at a given linearization point,
// alpha * dF/dv' + dF/dv, assembled from one propagated evaluation.
CsrMatrix assemble_dae_csr(const DaeModel& dae, std::span<const double> v,
                           std::span<const double> vprev, double t, double alpha);

void write_trajectory_csv(std::ostream& out, const DaeModel& dae, const Trajectory& trajectory);

}  // namespace sad

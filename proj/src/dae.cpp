#include "sad/dae.hpp"

#include <cmath>
#include <ostream>

#include "sad/errors.hpp"
#include "sad/log.hpp"
#include "sad/num_format.hpp"

namespace sad {

void Bdf1StepModel::residual(std::span<const double> v, std::span<double> f) const {
    const int n = dimension();
    std::vector<double> vdot(n);
    for (int i = 0; i < n; ++i) vdot[i] = (v[i] - vprev_[i]) * alpha_;
    dae_.residual(std::span<const double>(vdot), v, t_, f);
}

void Bdf1StepModel::residual(std::span<const ADScalar> v, std::span<ADScalar> f) const {
    const int n = dimension();
    std::vector<ADScalar> vdot(n, ADScalar(0.0));
    for (int i = 0; i < n; ++i) {
        vdot[i] = v[i];
        vdot[i] -= vprev_[i];
        vdot[i] *= alpha_;
    }
    dae_.residual(std::span<const ADScalar>(vdot), v, t_, f);
}

void AlgebraicView::residual(std::span<const double> v, std::span<double> f) const {
    std::vector<double> vdot(dimension(), 0.0);
    dae_.residual(std::span<const double>(vdot), v, t_, f);
}

void AlgebraicView::residual(std::span<const ADScalar> v, std::span<ADScalar> f) const {
    std::vector<ADScalar> vdot(dimension(), ADScalar(0.0));
    dae_.residual(std::span<const ADScalar>(vdot), v, t_, f);
}

std::vector<double> consistent_init(const DaeModel& dae, std::span<const double> guess,
                                    const NewtonConfig& config) {
    AlgebraicView stationary(dae);
    try {
        NewtonStats stats;
        std::vector<double> v0 = newton_solve(stationary, guess, config, &stats);
        log_info("consistent_init converged in " + std::to_string(stats.iterations) +
                 " iterations, |f|_inf = " + format_double(stats.residual_norm));
        return v0;
    } catch (const ConvergenceError& err) {
        throw InitializationError(std::string("consistent_init: ") + err.what() +
                                  "; try a different initial guess");
    }
}

std::vector<double> consistent_init(const DaeModel& dae, const NewtonConfig& config) {
    const std::vector<double> guess = dae.initial_state();
    return consistent_init(dae, guess, config);
}

Trajectory dae_integrate(const DaeModel& dae, std::span<const double> v0, const DaeConfig& config,
                         const StepObserver& observer) {
    const int n = dae.dimension();
    if (static_cast<int>(v0.size()) != n)
        throw DimensionError("dae_integrate: state has size " + std::to_string(v0.size()) +
                             ", expected " + std::to_string(n));
    if (!(config.h > 0.0)) throw UsageError("dae_integrate: step size must be positive");
    if (config.t_end < 0.0) throw UsageError("dae_integrate: end time must be non-negative");
    if (std::abs(config.alpha * config.h - 1.0) > 1e-12)
        throw UsageError("dae_integrate: alpha must equal 1/h");

    const long long steps = std::llround(config.t_end / config.h);

    Trajectory trajectory;
    trajectory.times.reserve(static_cast<std::size_t>(steps) + 1);
    trajectory.states.reserve(static_cast<std::size_t>(steps) + 1);

    std::vector<double> v(v0.begin(), v0.end());
    trajectory.times.push_back(0.0);
    trajectory.states.push_back(v);

    Bdf1StepModel step_model(dae, config.alpha);
    for (long long k = 1; k <= steps; ++k) {
        const double t_next = static_cast<double>(k) * config.h;
        step_model.set_step(v, t_next);
        try {
            NewtonStats stats;
            v = newton_solve(step_model, v, config.newton, &stats);
            if (observer)
                observer(static_cast<int>(k), t_next, v, stats.iterations, stats.residual_norm);
        } catch (const ConvergenceError& err) {
            throw IntegrationError(t_next, static_cast<int>(k),
                                   std::string("dae_integrate: ") + err.what());
        }
        trajectory.times.push_back(t_next);
        trajectory.states.push_back(v);
    }
    return trajectory;
}

CsrMatrix assemble_dae_csr(const DaeModel& dae, std::span<const double> v,
                           std::span<const double> vprev, double t, double alpha) {
    const int n = dae.dimension();
    if (static_cast<int>(v.size()) != n || static_cast<int>(vprev.size()) != n)
        throw DimensionError("assemble_dae_csr: state size mismatch");

    std::vector<ADScalar> vars = make_variables(v);
    std::vector<ADScalar> vdot(n, ADScalar(0.0));
    for (int i = 0; i < n; ++i) {
        vdot[i] = vars[i];
        vdot[i] -= vprev[i];
        vdot[i] *= alpha;
    }
    std::vector<ADScalar> res(n, ADScalar(0.0));
    dae.residual(std::span<const ADScalar>(vdot), std::span<const ADScalar>(vars), t,
                 std::span<ADScalar>(res));
    return assemble_csr(std::span<const ADScalar>(res), n);
}

void write_trajectory_csv(std::ostream& out, const DaeModel& dae, const Trajectory& trajectory) {
    const std::vector<std::string> names = dae.output_names();
    out << "t";
    for (const std::string& name : names) out << "," << name;
    out << "\n";
    for (std::size_t k = 0; k < trajectory.times.size(); ++k) {
        out << format_double(trajectory.times[k]);
        const std::vector<double> values = dae.outputs(trajectory.states[k], trajectory.times[k]);
        for (double value : values) out << "," << format_double(value);
        out << "\n";
    }
}

}  // namespace sad

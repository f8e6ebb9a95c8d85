#include "sad/newton.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "sad/errors.hpp"
#include "sad/log.hpp"
#include "sad/lu.hpp"

namespace sad {

double inf_norm(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

std::vector<double> newton_solve(const ResidualModel& model, std::span<const double> x0,
                                 const NewtonConfig& config, NewtonStats* stats) {
    const int n = model.dimension();
    if (static_cast<int>(x0.size()) != n)
        throw DimensionError("newton_solve: initial guess has size " + std::to_string(x0.size()) +
                             ", expected " + std::to_string(n));
    if (!(config.abs_tol > 0.0)) throw UsageError("newton_solve: abs_tol must be positive");
    if (config.max_iter < 1) throw UsageError("newton_solve: max_iter must be at least 1");
    if (!(config.damping > 0.0) || config.damping > 1.0)
        throw UsageError("newton_solve: damping must be in (0, 1]");

    std::vector<double> x(x0.begin(), x0.end());
    std::vector<ADScalar> vars(n, ADScalar(0.0));
    std::vector<ADScalar> res(n, ADScalar(0.0));

    double norm = 0.0;
    for (int iter = 0; iter <= config.max_iter; ++iter) {
        for (int i = 0; i < n; ++i) vars[i] = make_variable(x[i], i);
        model.residual(std::span<const ADScalar>(vars), std::span<ADScalar>(res));

        norm = 0.0;
        for (const ADScalar& r : res) norm = std::max(norm, std::abs(r.value()));
        log_debug("newton iter " + std::to_string(iter) + " |f|_inf = " + std::to_string(norm));

        if (!std::isfinite(norm))
            throw ConvergenceError(x, norm, iter, "newton_solve: residual is not finite");
        if (norm <= config.abs_tol) {
            if (stats) {
                stats->iterations = iter;
                stats->residual_norm = norm;
            }
            return x;
        }
        if (iter == config.max_iter) break;

        CsrMatrix jac = assemble_csr(std::span<const ADScalar>(res), n);
        LuFactors lu = lu_factor(jac);
        std::vector<double> rhs(n);
        for (int i = 0; i < n; ++i) rhs[i] = -res[i].value();
        std::vector<double> dx = lu_solve(lu, rhs);

        for (int i = 0; i < n; ++i) {
            double step = config.damping * dx[i];
            const double cap = model.step_limit(i);
            if (std::abs(step) > cap) step = std::copysign(cap, step);
            x[i] += step;
        }
    }

    if (stats) {
        stats->iterations = config.max_iter;
        stats->residual_norm = norm;
    }
    throw ConvergenceError(x, norm, config.max_iter,
                           "newton_solve: no convergence within " +
                               std::to_string(config.max_iter) + " iterations");
}

std::vector<std::vector<double>> fd_jacobian(const ResidualModel& model, std::span<const double> x,
                                             double eps_scale, bool central) {
    const int n = model.dimension();
    if (static_cast<int>(x.size()) != n)
        throw DimensionError("fd_jacobian: state has size " + std::to_string(x.size()) +
                             ", expected " + std::to_string(n));
    if (!(eps_scale > 0.0)) throw UsageError("fd_jacobian: eps_scale must be positive");

    std::vector<double> base(x.begin(), x.end());
    std::vector<double> f0(n), fp(n), fm(n);
    model.residual(std::span<const double>(base), std::span<double>(f0));

    std::vector<std::vector<double>> jac(n, std::vector<double>(n, 0.0));
    for (int j = 0; j < n; ++j) {
        const double eps = eps_scale * std::max(1.0, std::abs(base[j]));
        const double saved = base[j];
        base[j] = saved + eps;
        model.residual(std::span<const double>(base), std::span<double>(fp));
        if (central) {
            base[j] = saved - eps;
            model.residual(std::span<const double>(base), std::span<double>(fm));
            for (int i = 0; i < n; ++i) jac[i][j] = (fp[i] - fm[i]) / (2.0 * eps);
        } else {
            for (int i = 0; i < n; ++i) jac[i][j] = (fp[i] - f0[i]) / eps;
        }
        base[j] = saved;
    }
    return jac;
}

}  // namespace sad

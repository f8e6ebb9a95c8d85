#pragma once

#include <array>
#include <span>
#include <vector>

#include "sad/errors.hpp"
#include "sad/model.hpp"

namespace sad {

struct LorenzParams {
    double sigma = 10.0;
    double rho = 8.0 / 3.0;
    double beta = 28.0;
};

// Steady-state residual of the Lorenz system,
//   f0 = sigma*(y - x), f1 = x*(rho - z) - y, f2 = x*y - beta*z.
// Generic over both scalar types so that either the state x = (x, y, z) or
// the parameters p = (sigma, rho, beta) can carry derivatives.
template <typename Out, typename SX, typename SP>
void lorenz_residual(std::span<Out> f, std::span<const SX> x, std::span<const SP> p) {
    if (f.size() != 3 || x.size() != 3 || p.size() != 3)
        throw DimensionError("lorenz_residual: expected length-3 spans");
    f[0] = p[0] * (x[1] - x[0]);
    f[1] = x[0] * (p[1] - x[2]) - x[1];
    f[2] = x[0] * x[1] - p[2] * x[2];
}

// Three-dimensional algebraic model. By default the state is the unknown and
// the parameters are fixed; with swapped roles the state is held at the given
// point and (sigma, rho, beta) become the unknowns. Both roles run the same
// residual template, no recompilation involved.
class LorenzModel final : public ResidualModel {
public:
    LorenzModel(const LorenzParams& params, const std::array<double, 3>& state,
                bool parameters_are_unknowns = false)
        : params_{params.sigma, params.rho, params.beta},
          state_(state),
          swap_roles_(parameters_are_unknowns) {}

    int dimension() const override { return 3; }

    std::vector<double> initial_state() const override {
        if (swap_roles_) return {params_[0], params_[1], params_[2]};
        return {state_[0], state_[1], state_[2]};
    }

    std::vector<std::string> unknown_names() const override {
        if (swap_roles_) return {"sigma", "rho", "beta"};
        return {"x", "y", "z"};
    }

    void residual(std::span<const double> u, std::span<double> f) const override { eval(u, f); }
    void residual(std::span<const ADScalar> u, std::span<ADScalar> f) const override {
        eval(u, f);
    }

private:
    template <typename Scalar>
    void eval(std::span<const Scalar> u, std::span<Scalar> f) const {
        if (u.size() != 3 || f.size() != 3) throw DimensionError("LorenzModel: expected 3 unknowns");
        if (swap_roles_) {
            lorenz_residual(f, std::span<const double>(state_), u);
        } else {
            lorenz_residual(f, u, std::span<const double>(params_));
        }
    }

    std::array<double, 3> params_;
    std::array<double, 3> state_;
    bool swap_roles_;
};

}  // namespace sad

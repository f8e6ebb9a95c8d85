#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "sad/ad_scalar.hpp"

namespace sad {

// Algebraic system f(x) = 0. The two residual overloads must compute the
// same function; the derivative-carrying one yields value, sparsity pattern
// and Jacobian in a single evaluation.
class ResidualModel {
public:
    virtual ~ResidualModel() = default;

    virtual int dimension() const = 0;
    virtual void residual(std::span<const double> x, std::span<double> f) const = 0;
    virtual void residual(std::span<const ADScalar> x, std::span<ADScalar> f) const = 0;

    // Per-component cap on the Newton update magnitude; models with stiff
    // exponentials limit their node voltages here.
    virtual double step_limit(int /*index*/) const {
        return std::numeric_limits<double>::infinity();
    }

    virtual std::vector<double> initial_state() const {
        return std::vector<double>(dimension(), 0.0);
    }

    virtual std::vector<std::string> unknown_names() const {
        std::vector<std::string> names;
        names.reserve(dimension());
        for (int i = 0; i < dimension(); ++i) names.push_back("x" + std::to_string(i));
        return names;
    }
};

// Differential-algebraic system F(v', v, t) = 0.
class DaeModel {
public:
    virtual ~DaeModel() = default;

    virtual int dimension() const = 0;
    virtual void residual(std::span<const double> vdot, std::span<const double> v, double t,
                          std::span<double> f) const = 0;
    virtual void residual(std::span<const ADScalar> vdot, std::span<const ADScalar> v, double t,
                          std::span<ADScalar> f) const = 0;

    virtual double step_limit(int /*index*/) const {
        return std::numeric_limits<double>::infinity();
    }

    virtual std::vector<double> initial_state() const {
        return std::vector<double>(dimension(), 0.0);
    }

    // Whether initial_state is only a guess that must be refined by a
    // stationary solve before integrating.
    virtual bool requires_consistent_init() const { return true; }

    virtual std::vector<std::string> state_names() const {
        std::vector<std::string> names;
        names.reserve(dimension());
        for (int i = 0; i < dimension(); ++i) names.push_back("v" + std::to_string(i));
        return names;
    }

    // Signals exported by the simulation trajectory; defaults to the state.
    virtual std::vector<std::string> output_names() const { return state_names(); }
    virtual std::vector<double> outputs(const std::vector<double>& v, double /*t*/) const {
        return v;
    }
};

inline std::vector<ADScalar> make_variables(std::span<const double> values) {
    std::vector<ADScalar> vars;
    vars.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        vars.push_back(make_variable(values[i], static_cast<int>(i)));
    return vars;
}

}  // namespace sad

#pragma once

#include <span>
#include <string>
#include <vector>

#include "sad/model.hpp"

namespace sad {

// Scalar test problem v' + v = 0, v(0) = 1, exact solution exp(-t).
class DecayModel final : public DaeModel {
public:
    int dimension() const override { return 1; }

    std::vector<double> initial_state() const override { return {1.0}; }

    bool requires_consistent_init() const override { return false; }

    std::vector<std::string> state_names() const override { return {"v"}; }

    void residual(std::span<const double> vdot, std::span<const double> v, double,
                  std::span<double> f) const override {
        f[0] = vdot[0] + v[0];
    }
    void residual(std::span<const ADScalar> vdot, std::span<const ADScalar> v, double,
                  std::span<ADScalar> f) const override {
        f[0] = vdot[0] + v[0];
    }
};

}  // namespace sad

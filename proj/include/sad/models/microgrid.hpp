#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sad/errors.hpp"
#include "sad/model.hpp"

namespace sad {

struct MicrogridParams {
    double V0 = 100.0;
    double omega = 2.0 * std::numbers::pi * 60.0;
    double G = 0.01;
    double C = 1e-4;
    double L = 0.02;
    double Is = 18.8e-9;
    double n_ideality = 2.0;
    double T = 300.0;
    double k_B = 1.380649e-23;
    double q_e = 1.602176634e-19;
    double m = 2.0 * std::numbers::pi / (3.0 * std::numbers::sqrt3);

    double thermal_voltage() const { return k_B * T / q_e; }
    double diode_scale() const { return n_ideality * thermal_voltage(); }

    void validate() const {
        const double fields[] = {V0, omega, G, C, L, Is, n_ideality, T, k_B, q_e, m};
        for (double f : fields)
            if (!(f > 0.0)) throw UsageError("microgrid parameters must all be positive");
    }
};

// Index map for the 12 + 7N unknowns: per-load blocks of 7 first
// (i_va, i_vb, i_vc, v_la, v_lb, v_lc, v_l0), the 12 global unknowns last
// (v_ga, v_gb, v_gc, i_ga, i_gb, i_gc, v_f, v_p, v_n, i_L, phi_L, q_C).
struct MicrogridLayout {
    int N = 1;

    explicit MicrogridLayout(int loads) : N(loads) {
        if (loads < 1) throw UsageError("microgrid load count must be at least 1");
    }

    int dimension() const { return 12 + 7 * N; }
    int load_base(int k) const { return 7 * k; }
    int i_v(int k, int phase) const { return 7 * k + phase; }
    int v_l(int k, int phase) const { return 7 * k + 3 + phase; }
    int v_l0(int k) const { return 7 * k + 6; }
    int global_base() const { return 7 * N; }
    int v_g(int phase) const { return global_base() + phase; }
    int i_g(int phase) const { return global_base() + 3 + phase; }
    int v_f() const { return global_base() + 6; }
    int v_p() const { return global_base() + 7; }
    int v_n() const { return global_base() + 8; }
    int i_l() const { return global_base() + 9; }
    int phi_l() const { return global_base() + 10; }
    int q_c() const { return global_base() + 11; }
};

// Inverter duty cycle of the given phase (0 = a, 1 = b, 2 = c),
// d = m sin(omega t + phase 2pi/3).
inline double modulation(double t, int phase, const MicrogridParams& params) {
    return params.m * std::sin(params.omega * t + phase * 2.0 * std::numbers::pi / 3.0);
}

// Shockley diode current I_s (exp(v / (n V_T)) - 1).
template <typename Scalar>
Scalar diode_current(const Scalar& v, const MicrogridParams& params) {
    using std::exp;
    return params.Is * (exp(v / params.diode_scale()) - 1.0);
}

// Full residual of the rectifier microgrid: a 3-phase generator feeding a
// 6-diode bridge, an LC filter onto the DC bus and N averaged inverters with
// resistive loads. Time derivatives enter only the flux and charge rows.
// Row placement: per load k the rows 7k..7k+6 hold the three terminal KCL
// equations, the three averaged-inverter KVL equations and the neutral KCL;
// each global equation sits at the index of its primary unknown.
template <typename Scalar>
void microgrid_residual(std::span<Scalar> F, std::span<const Scalar> vdot,
                        std::span<const Scalar> v, double t, const MicrogridParams& params,
                        const MicrogridLayout& layout) {
    const int dim = layout.dimension();
    if (static_cast<int>(F.size()) != dim || static_cast<int>(vdot.size()) != dim ||
        static_cast<int>(v.size()) != dim)
        throw DimensionError("microgrid_residual: spans must have length " + std::to_string(dim));

    const double d[3] = {modulation(t, 0, params), modulation(t, 1, params),
                         modulation(t, 2, params)};
    const double two_thirds_pi = 2.0 * std::numbers::pi / 3.0;

    const Scalar& v_f = v[layout.v_f()];
    const Scalar& v_p = v[layout.v_p()];
    const Scalar& v_n = v[layout.v_n()];

    // Load-side currents drawn from the DC rails by the averaged inverters.
    Scalar rail_p(0.0);
    Scalar rail_n(0.0);

    for (int k = 0; k < layout.N; ++k) {
        const Scalar& v_l0 = v[layout.v_l0(k)];
        Scalar neutral(0.0);
        for (int a = 0; a < 3; ++a) {
            const Scalar& v_la = v[layout.v_l(k, a)];
            // Terminal KCL: the source-chain current balances the load
            // current not supplied by the rail-side source.
            F[layout.i_v(k, a)] = v[layout.i_v(k, a)] - (1.0 - d[a]) * (params.G * (v_la - v_l0));
            // Averaged inverter KVL against the DC rails.
            F[layout.v_l(k, a)] = v_la - v_n - 0.5 * (1.0 + d[a]) * (v_p - v_n);
            neutral += params.G * (v_la - v_l0);
            rail_p += d[a] * (params.G * v_la);
            rail_n += d[a] * (params.G * (v_la - v_l0));
        }
        F[layout.v_l0(k)] = std::move(neutral);
    }

    for (int a = 0; a < 3; ++a) {
        const Scalar& v_ga = v[layout.v_g(a)];
        F[layout.v_g(a)] = v_ga - params.V0 * std::sin(params.omega * t + a * two_thirds_pi);
        F[layout.i_g(a)] =
            v[layout.i_g(a)] - diode_current(v_ga - v_f, params) + diode_current(v_n - v_ga, params);
    }

    F[layout.v_f()] = diode_current(v[layout.v_g(0)] - v_f, params) +
                      diode_current(v[layout.v_g(1)] - v_f, params) +
                      diode_current(v[layout.v_g(2)] - v_f, params) - v[layout.i_l()];
    F[layout.i_l()] = v[layout.phi_l()] - params.L * v[layout.i_l()];
    F[layout.phi_l()] = vdot[layout.phi_l()] - (v_f - v_p);
    F[layout.v_p()] = v[layout.q_c()] - params.C * (v_p - v_n);
    F[layout.q_c()] = v[layout.i_l()] - vdot[layout.q_c()] - rail_p;
    F[layout.v_n()] = diode_current(v_n - v[layout.v_g(0)], params) +
                      diode_current(v_n - v[layout.v_g(1)], params) +
                      diode_current(v_n - v[layout.v_g(2)], params) -
                      vdot[layout.q_c()] - rail_n;
}

class MicrogridModel final : public DaeModel {
public:
    MicrogridModel(const MicrogridParams& params, int loads)
        : params_(params), layout_(loads), is_voltage_(layout_.dimension(), false) {
        params_.validate();
        for (int k = 0; k < layout_.N; ++k) {
            for (int a = 0; a < 3; ++a) is_voltage_[layout_.v_l(k, a)] = true;
            is_voltage_[layout_.v_l0(k)] = true;
        }
        for (int a = 0; a < 3; ++a) is_voltage_[layout_.v_g(a)] = true;
        is_voltage_[layout_.v_f()] = true;
        is_voltage_[layout_.v_p()] = true;
        is_voltage_[layout_.v_n()] = true;
    }

    const MicrogridParams& params() const { return params_; }
    const MicrogridLayout& layout() const { return layout_; }

    int dimension() const override { return layout_.dimension(); }

    // Junction voltages move at most 1 V per Newton update, which keeps the
    // diode exponentials in range on the way to the solution.
    double step_limit(int index) const override {
        return is_voltage_[index] ? 1.0 : std::numeric_limits<double>::infinity();
    }

    void residual(std::span<const double> vdot, std::span<const double> v, double t,
                  std::span<double> f) const override {
        microgrid_residual(f, vdot, v, t, params_, layout_);
    }
    void residual(std::span<const ADScalar> vdot, std::span<const ADScalar> v, double t,
                  std::span<ADScalar> f) const override {
        microgrid_residual(f, vdot, v, t, params_, layout_);
    }

    std::vector<std::string> state_names() const override {
        std::vector<std::string> names(dimension());
        static const char* load_slots[7] = {"i_va", "i_vb", "i_vc", "v_la", "v_lb", "v_lc", "v_l0"};
        for (int k = 0; k < layout_.N; ++k)
            for (int s = 0; s < 7; ++s)
                names[layout_.load_base(k) + s] = std::string(load_slots[s]) + std::to_string(k);
        static const char* globals[12] = {"v_ga", "v_gb", "v_gc", "i_ga",  "i_gb",  "i_gc",
                                          "v_f",  "v_p",  "v_n",  "i_L", "phi_L", "q_C"};
        for (int s = 0; s < 12; ++s) names[layout_.global_base() + s] = globals[s];
        return names;
    }

    std::vector<std::string> output_names() const override {
        return {"va0", "vb0", "vc0", "v_dc", "i_L"};
    }

    std::vector<double> outputs(const std::vector<double>& v, double /*t*/) const override {
        const double w0 = v[layout_.v_l0(0)];
        return {v[layout_.v_l(0, 0)] - w0, v[layout_.v_l(0, 1)] - w0, v[layout_.v_l(0, 2)] - w0,
                v[layout_.v_p()] - v[layout_.v_n()], v[layout_.i_l()]};
    }

private:
    MicrogridParams params_;
    MicrogridLayout layout_;
    std::vector<bool> is_voltage_;
};

}  // namespace sad

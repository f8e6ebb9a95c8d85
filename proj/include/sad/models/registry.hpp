#pragma once

#include <istream>
#include <map>
#include <memory>
#include <string>

#include "sad/model.hpp"
#include "sad/models/microgrid.hpp"

namespace sad {

struct ModelOptions {
    int N = 1;
    bool swap_roles = false;
    std::map<std::string, double> overrides;
};

// A named model instance; exactly one of the two pointers is set depending
// on whether the model is algebraic or differential-algebraic.
struct ModelHandle {
    std::string name;
    std::unique_ptr<ResidualModel> algebraic;
    std::unique_ptr<DaeModel> dae;

    bool is_dae() const { return dae != nullptr; }
};

// Builds "lorenz", "microgrid" or "decay"; unknown names and inapplicable
// options are usage errors.
ModelHandle make_model(const std::string& name, const ModelOptions& options);

// key=value lines, '#' comments and blank lines allowed.
std::map<std::string, double> parse_config_file(std::istream& in);
std::map<std::string, double> parse_config_file(const std::string& path);

// Applies overrides by field name (V0, omega, G, C, L, Is, n_ideality, T,
// k_B, q_e, m); unknown keys are usage errors.
void apply_overrides(MicrogridParams& params, const std::map<std::string, double>& overrides);

}  // namespace sad

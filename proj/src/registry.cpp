#include "sad/models/registry.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "sad/errors.hpp"
#include "sad/models/decay.hpp"
#include "sad/models/lorenz.hpp"

namespace sad {

ModelHandle make_model(const std::string& name, const ModelOptions& options) {
    ModelHandle handle;
    handle.name = name;
    if (name == "lorenz") {
        if (!options.overrides.empty())
            throw UsageError("config overrides apply to the microgrid model only");
        handle.algebraic = std::make_unique<LorenzModel>(
            LorenzParams{10.0, 8.0 / 3.0, 28.0}, std::array<double, 3>{8.0, 20.0, 2.0 / 3.0},
            options.swap_roles);
        return handle;
    }
    if (options.swap_roles)
        throw UsageError("--swap-roles is only available for the lorenz model");
    if (name == "microgrid") {
        MicrogridParams params;
        apply_overrides(params, options.overrides);
        handle.dae = std::make_unique<MicrogridModel>(params, options.N);
        return handle;
    }
    if (name == "decay") {
        if (!options.overrides.empty())
            throw UsageError("config overrides apply to the microgrid model only");
        handle.dae = std::make_unique<DecayModel>();
        return handle;
    }
    throw UsageError("unknown model: " + name);
}

static std::string trim(const std::string& s) {
    const std::string ws = " \t\r\n";
    const std::size_t begin = s.find_first_not_of(ws);
    if (begin == std::string::npos) return "";
    const std::size_t end = s.find_last_not_of(ws);
    return s.substr(begin, end - begin + 1);
}

std::map<std::string, double> parse_config_file(std::istream& in) {
    std::map<std::string, double> overrides;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw UsageError("config line " + std::to_string(line_no) + ": expected key=value");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value_text = trim(stripped.substr(eq + 1));
        if (key.empty() || value_text.empty())
            throw UsageError("config line " + std::to_string(line_no) + ": expected key=value");
        std::size_t consumed = 0;
        double value = 0.0;
        try {
            value = std::stod(value_text, &consumed);
        } catch (const std::exception&) {
            throw UsageError("config line " + std::to_string(line_no) + ": bad number '" +
                             value_text + "'");
        }
        if (consumed != value_text.size())
            throw UsageError("config line " + std::to_string(line_no) + ": bad number '" +
                             value_text + "'");
        overrides[key] = value;
    }
    return overrides;
}

std::map<std::string, double> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file: " + path);
    return parse_config_file(in);
}

void apply_overrides(MicrogridParams& params, const std::map<std::string, double>& overrides) {
    const std::map<std::string, double*> fields = {
        {"V0", &params.V0},   {"omega", &params.omega},
        {"G", &params.G},     {"C", &params.C},
        {"L", &params.L},     {"Is", &params.Is},
        {"n_ideality", &params.n_ideality}, {"T", &params.T},
        {"k_B", &params.k_B}, {"q_e", &params.q_e},
        {"m", &params.m}};
    for (const auto& [key, value] : overrides) {
        auto it = fields.find(key);
        if (it == fields.end()) throw UsageError("unknown microgrid parameter: " + key);
        *it->second = value;
    }
    params.validate();
}

}  // namespace sad

#include "pdx/model_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace pdx {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& message) {
    throw Error(ErrorCode::Parse, "model schema: " + message);
}

std::vector<std::string> parse_states(const ordered_json& j) {
    if (!j.contains("states") || !j["states"].is_array() || j["states"].empty()) {
        schema_error("\"states\" must be a nonempty array of state names");
    }
    std::vector<std::string> states;
    for (const auto& s : j["states"]) {
        if (!s.is_string()) schema_error("state names must be strings");
        states.push_back(s.get<std::string>());
    }
    return states;
}

StateSet parse_state_set(const ordered_json& j, const BDModel& skeleton, const char* where) {
    if (!j.is_array()) schema_error(std::string(where) + ": sets are arrays of state names");
    StateSet mask = 0;
    for (const auto& s : j) {
        if (!s.is_string()) schema_error(std::string(where) + ": state names must be strings");
        mask |= StateSet{1} << skeleton.state_index(s.get<std::string>());
    }
    return mask;
}

std::map<std::string, StateSet> parse_valuation(const ordered_json& j,
                                                const BDModel& skeleton,
                                                const char* where) {
    std::map<std::string, StateSet> out;
    if (!j.is_object()) schema_error(std::string(where) + " must be an object keyed by atom");
    for (const auto& [atom, value] : j.items()) {
        out[atom] = parse_state_set(value, skeleton, where);
    }
    return out;
}

MassFunction parse_mass(const ordered_json& j, const BDModel& skeleton, const char* where) {
    if (!j.is_array()) schema_error(std::string(where) + " must be an array of {set, w} entries");
    std::map<StateSet, double> weights;
    for (const auto& entry : j) {
        if (!entry.is_object() || !entry.contains("set") || !entry.contains("w")) {
            schema_error(std::string(where) + " entries need \"set\" and \"w\"");
        }
        if (!entry["w"].is_number()) schema_error(std::string(where) + ": \"w\" must be a number");
        const StateSet mask = parse_state_set(entry["set"], skeleton, where);
        weights[mask] += entry["w"].get<double>();
    }
    return MassFunction(skeleton.states(), std::move(weights));
}

PlausibilityFunction parse_pl_table(const ordered_json& j, const BDModel& skeleton) {
    if (!j.is_array()) schema_error("\"pl_table\" must be an array of 2^n numbers");
    std::vector<double> table;
    for (const auto& v : j) {
        if (!v.is_number()) schema_error("\"pl_table\" entries must be numbers");
        table.push_back(v.get<double>());
    }
    return PlausibilityFunction(skeleton.states(), std::move(table));
}

ProbabilityMeasure parse_mu(const ordered_json& j, const BDModel& skeleton) {
    if (!j.is_object()) schema_error("\"mu\" must be an object keyed by state");
    std::vector<double> point(skeleton.size(), 0.0);
    for (const auto& [state, value] : j.items()) {
        if (!value.is_number()) schema_error("\"mu\" values must be numbers");
        point[skeleton.state_index(state)] = value.get<double>();
    }
    return ProbabilityMeasure(skeleton.states(), std::move(point));
}

ordered_json set_to_json(StateSet x, const std::vector<std::string>& universe) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < universe.size(); ++i) {
        if (x & (StateSet{1} << i)) arr.push_back(universe[i]);
    }
    return arr;
}

ordered_json mass_to_json(const MassFunction& m) {
    ordered_json arr = ordered_json::array();
    for (const auto& [x, w] : m.focal()) {
        arr.push_back({{"set", set_to_json(x, m.universe())}, {"w", w}});
    }
    return arr;
}

} // namespace

BeliefFunction ModelBundle::belief() const {
    if (!mass) throw Error(ErrorCode::Domain, "model has no mass/belief component");
    return belief_from_mass(*mass);
}

DSModel ModelBundle::ds_model() const {
    return DSModel(bd, belief());
}

DSplModel ModelBundle::ds_pl_model() const {
    if (!pl) throw Error(ErrorCode::Domain, "model has no independent plausibility component");
    return DSplModel(ds_model(), *pl);
}

ProbabilisticBDModel ModelBundle::probabilistic() const {
    if (!mu) throw Error(ErrorCode::Domain, "model has no probability measure component");
    return ProbabilisticBDModel(bd, *mu);
}

ModelBundle load_model_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) schema_error("top level must be an object");
    if (j.contains("format") &&
        (!j["format"].is_number_integer() || j["format"].get<int>() != 1)) {
        schema_error("unsupported format version");
    }

    const std::vector<std::string> states = parse_states(j);
    // Skeleton without atoms, for name -> index resolution.
    BDModel skeleton(states, {}, {});

    std::map<std::string, StateSet> vplus, vminus;
    if (j.contains("vplus")) vplus = parse_valuation(j["vplus"], skeleton, "vplus");
    if (j.contains("vminus")) vminus = parse_valuation(j["vminus"], skeleton, "vminus");
    // Both valuations cover the union vocabulary; absent entries are empty.
    for (const auto& [atom, mask] : vplus) vminus.try_emplace(atom, 0);
    for (const auto& [atom, mask] : vminus) vplus.try_emplace(atom, 0);

    if (j.contains("pl_mass") && j.contains("pl_table")) {
        schema_error("give the independent plausibility as \"pl_mass\" or \"pl_table\", not both");
    }

    ModelBundle bundle{BDModel(states, std::move(vplus), std::move(vminus)),
                       std::nullopt, std::nullopt, std::nullopt, std::nullopt};
    if (j.contains("mass")) {
        bundle.mass = parse_mass(j["mass"], skeleton, "mass");
    }
    if (j.contains("pl_mass")) {
        bundle.pl_mass = parse_mass(j["pl_mass"], skeleton, "pl_mass");
        bundle.pl = plausibility_from_mass(*bundle.pl_mass);
    } else if (j.contains("pl_table")) {
        bundle.pl = parse_pl_table(j["pl_table"], skeleton);
    }
    if (j.contains("mu")) {
        bundle.mu = parse_mu(j["mu"], skeleton);
    }
    return bundle;
}

ModelBundle load_model_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::Parse, "cannot read model file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_model_json(buffer.str());
}

nlohmann::ordered_json model_to_json(const ModelBundle& bundle) {
    ordered_json j;
    j["format"] = 1;
    j["states"] = bundle.bd.states();
    if (!bundle.bd.vplus().empty()) {
        ordered_json vplus, vminus;
        for (const auto& [atom, mask] : bundle.bd.vplus()) {
            vplus[atom] = set_to_json(mask, bundle.bd.states());
        }
        for (const auto& [atom, mask] : bundle.bd.vminus()) {
            vminus[atom] = set_to_json(mask, bundle.bd.states());
        }
        j["vplus"] = std::move(vplus);
        j["vminus"] = std::move(vminus);
    }
    if (bundle.mass) j["mass"] = mass_to_json(*bundle.mass);
    if (bundle.pl_mass) {
        j["pl_mass"] = mass_to_json(*bundle.pl_mass);
    } else if (bundle.pl) {
        j["pl_table"] = bundle.pl->table();
    }
    if (bundle.mu) {
        ordered_json mu;
        for (std::size_t i = 0; i < bundle.bd.size(); ++i) {
            mu[bundle.bd.states()[i]] = bundle.mu->point(i);
        }
        j["mu"] = std::move(mu);
    }
    return j;
}

} // namespace pdx

#include "pdx/bd_model.hpp"

#include <algorithm>

namespace pdx {

BDModel::BDModel(std::vector<std::string> states,
                 std::map<std::string, StateSet> vplus,
                 std::map<std::string, StateSet> vminus)
    : states_(std::move(states)), vplus_(std::move(vplus)), vminus_(std::move(vminus)) {
    if (states_.empty()) {
        throw Error(ErrorCode::Domain, "a model needs at least one state");
    }
    if (states_.size() > kMaxDenseStates) {
        throw Error(ErrorCode::Domain,
                    "models support at most " + std::to_string(kMaxDenseStates) + " states (got " +
                        std::to_string(states_.size()) + ")");
    }
    std::vector<std::string> sorted = states_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorCode::Domain, "duplicate state name");
    }
    auto p = vplus_.begin();
    auto m = vminus_.begin();
    for (; p != vplus_.end() && m != vminus_.end(); ++p, ++m) {
        if (p->first != m->first) break;
    }
    if (p != vplus_.end() || m != vminus_.end()) {
        throw Error(ErrorCode::Domain, "positive and negative valuations must cover the same atoms");
    }
    const StateSet all = full();
    for (const auto& [atom, mask] : vplus_) {
        if ((mask & ~all) || (vminus_.at(atom) & ~all)) {
            throw Error(ErrorCode::Domain, "valuation of '" + atom + "' is not a subset of the states");
        }
    }
}

std::size_t BDModel::state_index(std::string_view name) const {
    for (std::size_t i = 0; i < states_.size(); ++i) {
        if (states_[i] == name) return i;
    }
    throw Error(ErrorCode::Domain, "unknown state: " + std::string(name));
}

bool BDModel::has_atom(const std::string& name) const {
    return vplus_.count(name) != 0;
}

StateSet BDModel::positive_valuation(const std::string& atom) const {
    const auto it = vplus_.find(atom);
    if (it == vplus_.end()) throw Error(ErrorCode::Domain, "unknown atom: " + atom);
    return it->second;
}

StateSet BDModel::negative_valuation(const std::string& atom) const {
    const auto it = vminus_.find(atom);
    if (it == vminus_.end()) throw Error(ErrorCode::Domain, "unknown atom: " + atom);
    return it->second;
}

// The eight support clauses. Negation swaps the extension pair, conjunction
// intersects positive and unions negative support, disjunction dually.
// top is supported everywhere and contradicted nowhere, bot the opposite.
Extensions extensions(const BDModel& model, const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Atom:
            return {model.positive_valuation(f.atom_name()), model.negative_valuation(f.atom_name())};
        case Formula::Kind::Bottom: return {StateSet{0}, model.full()};
        case Formula::Kind::Top: return {model.full(), StateSet{0}};
        case Formula::Kind::Not: {
            const Extensions e = extensions(model, f.child());
            return {e.negative, e.positive};
        }
        case Formula::Kind::And: {
            const Extensions l = extensions(model, f.left());
            const Extensions r = extensions(model, f.right());
            return {static_cast<StateSet>(l.positive & r.positive),
                    static_cast<StateSet>(l.negative | r.negative)};
        }
        case Formula::Kind::Or: {
            const Extensions l = extensions(model, f.left());
            const Extensions r = extensions(model, f.right());
            return {static_cast<StateSet>(l.positive | r.positive),
                    static_cast<StateSet>(l.negative & r.negative)};
        }
    }
    throw Error(ErrorCode::Domain, "corrupt formula node");
}

StateSet positive_extension(const BDModel& model, const Formula& f) {
    return extensions(model, f).positive;
}

StateSet negative_extension(const BDModel& model, const Formula& f) {
    return extensions(model, f).negative;
}

FourValue eval4(const BDModel& model, std::size_t state_index, const Formula& f) {
    if (state_index >= model.size()) {
        throw Error(ErrorCode::Domain, "state index out of range");
    }
    const Extensions e = extensions(model, f);
    const StateSet bit = StateSet{1} << state_index;
    return make_four_value((e.positive & bit) != 0, (e.negative & bit) != 0);
}

FourValue eval4(const BDModel& model, std::string_view state, const Formula& f) {
    return eval4(model, model.state_index(state), f);
}

} // namespace pdx

#ifndef PDX_BD_MODEL_HPP
#define PDX_BD_MODEL_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pdx/common.hpp"
#include "pdx/formula.hpp"

namespace pdx {

// A finite model with independent positive and negative valuations per atom.
// States are an ordered sequence; valuations are subset masks over it.
class BDModel {
public:
    // `vplus` and `vminus` must be keyed by the same atom set (the model's
    // vocabulary) and every mask must fit the state sequence.
    BDModel(std::vector<std::string> states,
            std::map<std::string, StateSet> vplus,
            std::map<std::string, StateSet> vminus);

    const std::vector<std::string>& states() const noexcept { return states_; }
    std::size_t size() const noexcept { return states_.size(); }
    StateSet full() const noexcept { return full_set(states_.size()); }

    // Index of a state name; throws a Domain error for unknown states.
    std::size_t state_index(std::string_view name) const;

    bool has_atom(const std::string& name) const;
    StateSet positive_valuation(const std::string& atom) const; // throws on unknown atom
    StateSet negative_valuation(const std::string& atom) const;
    const std::map<std::string, StateSet>& vplus() const noexcept { return vplus_; }
    const std::map<std::string, StateSet>& vminus() const noexcept { return vminus_; }

private:
    std::vector<std::string> states_;
    std::map<std::string, StateSet> vplus_;
    std::map<std::string, StateSet> vminus_;
};

struct Extensions {
    StateSet positive;
    StateSet negative;
};

// Both extensions in one pass over the formula.
Extensions extensions(const BDModel& model, const Formula& f);

StateSet positive_extension(const BDModel& model, const Formula& f);
StateSet negative_extension(const BDModel& model, const Formula& f);

FourValue eval4(const BDModel& model, std::size_t state_index, const Formula& f);
FourValue eval4(const BDModel& model, std::string_view state, const Formula& f);

} // namespace pdx

#endif // PDX_BD_MODEL_HPP

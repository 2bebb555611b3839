#ifndef PDX_MODEL_IO_HPP
#define PDX_MODEL_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "pdx/bd_model.hpp"
#include "pdx/measures.hpp"
#include "pdx/models.hpp"

namespace pdx {

// Everything a model file may carry. The states and valuations are always
// present (valuations may cover no atoms); the measures are optional and
// independent of each other:
//   mass    -> a belief function (DS model)
//   pl      -> an independent plausibility (DS_pl model), given either as
//              the mass of its associated belief ("pl_mass") or as a dense
//              table indexed by subset bitmask ("pl_table")
//   mu      -> a probability measure (probabilistic model)
struct ModelBundle {
    BDModel bd;
    std::optional<MassFunction> mass;
    std::optional<PlausibilityFunction> pl;
    std::optional<MassFunction> pl_mass; // the as-supplied form, kept for round-trips
    std::optional<ProbabilityMeasure> mu;

    bool has_bel() const { return mass.has_value(); }
    BeliefFunction belief() const; // requires mass

    DSModel ds_model() const;                    // requires mass
    DSplModel ds_pl_model() const;               // requires mass and pl
    ProbabilisticBDModel probabilistic() const;  // requires mu
};

// File schema, format 1:
// {
//   "format": 1,
//   "states": ["s1", ...],
//   "vplus":  {"p": ["s1","s2"], ...},      optional
//   "vminus": {"p": ["s2","s3"], ...},      optional
//   "mass":   [{"set": ["s1"], "w": 0.2}, ...],   optional
//   "pl_mass": [...same shape as mass...],  optional \ at most
//   "pl_table": [v0, v1, ..., v_{2^n-1}],   optional / one of these
//   "mu": {"s1": 0.25, ...}                 optional
// }
// Atoms missing from one valuation map default to the empty set in the
// other, so both cover the same vocabulary.
ModelBundle load_model_json(const std::string& text);
ModelBundle load_model_file(const std::string& path);

nlohmann::ordered_json model_to_json(const ModelBundle& bundle);

} // namespace pdx

#endif // PDX_MODEL_IO_HPP

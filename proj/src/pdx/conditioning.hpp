#ifndef PDX_CONDITIONING_HPP
#define PDX_CONDITIONING_HPP

#include "pdx/common.hpp"
#include "pdx/measures.hpp"

namespace pdx {

// The two update styles: conditioning the measure as a lower/upper envelope
// of compatible probabilities, or combining with a categorical piece of
// evidence by the Dempster-Shafer rule.
enum class ConditioningMethod { LowerUpper, DS };

// Dempster-Shafer combination: product masses on intersections, conflict
// (empty intersections) discarded and the rest renormalized. Raises a
// TotalConflict error when the normalizer is <= eps.
MassFunction ds_combine(const MassFunction& m1, const MassFunction& m2);

// Categorical evidence: all mass on one nonempty set.
MassFunction point_mass(const std::vector<std::string>& universe, StateSet b);

// Lower conditioning (envelope route):
//   result(X) = 1                          if pl(comp(X) & B) <= eps
//             = bel(X & B) / (bel(X & B) + pl(comp(X) & B))   otherwise
// with pl the plausibility associated to bel. Defined when pl(B) > eps.
BeliefFunction condition_bel_lower(const BeliefFunction& bel, StateSet b);

// Upper conditioning of a plausibility (envelope route). Takes pl directly
// so independently supplied plausibilities condition without reference to
// any belief function:
//   result(X) = 0                          if pl(X & B) <= eps
//             = pl(X & B) / (pl(X & B) + bel_pl(comp(X) & B))  otherwise
// where bel_pl(Y) = 1 - pl(comp(Y)) is the belief associated to pl.
// Defined when pl(B) > eps.
PlausibilityFunction condition_pl_lower(const PlausibilityFunction& pl, StateSet b);

// DS-conditioning, the closed form of combining with point_mass(B):
//   result(X) = (bel(X | comp(B)) - bel(comp(B))) / (1 - bel(comp(B)))
// Defined when 1 - bel(comp(B)) > eps.
BeliefFunction ds_condition_bel(const BeliefFunction& bel, StateSet b);

// DS-conditioning of a plausibility: result(X) = pl(X & B) / pl(B).
// Defined when pl(B) > eps.
PlausibilityFunction ds_condition_pl(const PlausibilityFunction& pl, StateSet b);

} // namespace pdx

#endif // PDX_CONDITIONING_HPP

#ifndef PDX_CREDAL_HPP
#define PDX_CREDAL_HPP

#include <cstdint>
#include <vector>

#include "pdx/common.hpp"
#include "pdx/measures.hpp"

namespace pdx {

// A finite set of probability measures, read as the generators of their
// convex hull. Used as the brute-force ground truth for the closed-form
// conditioning rules.
class CredalSet {
public:
    explicit CredalSet(std::vector<ProbabilityMeasure> generators);

    const std::vector<ProbabilityMeasure>& generators() const noexcept { return generators_; }
    const std::vector<std::string>& universe() const noexcept {
        return generators_.front().universe();
    }
    std::size_t size() const noexcept { return generators_.size(); }

private:
    std::vector<ProbabilityMeasure> generators_;
};

// min / max of mu(X) over the generators. X -> mu(X) is linear in mu, so
// this is the envelope of the whole hull.
double lower_envelope(const CredalSet& set, StateSet x);
double upper_envelope(const CredalSet& set, StateSet x);

// One measure per permutation of the states: every focal element's mass goes
// to its first member in permutation order. The emitted measures dominate
// bel pointwise and their envelopes attain bel and its dual plausibility.
// Refuses universes larger than kMaxOracleStates.
CredalSet extreme_points(const BeliefFunction& bel);

// n convex combinations of the extreme points with symmetric-Dirichlet
// weights. Deterministic for a fixed (seed, n): sample i uses a seed derived
// from (seed, i) only.
CredalSet sample_credal(const BeliefFunction& bel, int n, std::uint64_t seed);

// Bayes rule: result(C) = mu(B and C) / mu(B). Undefined when mu(B) <= eps.
ProbabilityMeasure bayes_update_measure(const ProbabilityMeasure& mu, StateSet b);

// Member-wise Bayes update; generators with mu(B) <= eps are dropped.
// Undefined when no generator gives B positive probability.
CredalSet update_credal(const CredalSet& set, StateSet b);

} // namespace pdx

#endif // PDX_CREDAL_HPP

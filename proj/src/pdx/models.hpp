#ifndef PDX_MODELS_HPP
#define PDX_MODELS_HPP

#include "pdx/bd_model.hpp"
#include "pdx/conditioning.hpp"
#include "pdx/measures.hpp"

namespace pdx {

// A Belnap-Dunn model carrying a belief function on the powerset of its
// states. Formula-level measures go through the positive extension.
class DSModel {
public:
    DSModel(BDModel bd, BeliefFunction bel);
    DSModel(BDModel bd, const MassFunction& mass);

    const BDModel& bd() const noexcept { return bd_; }
    const BeliefFunction& bel() const noexcept { return bel_; }

private:
    BDModel bd_;
    BeliefFunction bel_;
};

// A DS model with an additional, independently given plausibility function.
// pl is deliberately not required to be the plausibility associated to bel.
class DSplModel {
public:
    DSplModel(DSModel ds, PlausibilityFunction pl);

    const DSModel& ds() const noexcept { return ds_; }
    const BDModel& bd() const noexcept { return ds_.bd(); }
    const BeliefFunction& bel() const noexcept { return ds_.bel(); }
    const PlausibilityFunction& pl() const noexcept { return pl_; }

private:
    DSModel ds_;
    PlausibilityFunction pl_;
};

// A Belnap-Dunn model with a probability measure over its states.
class ProbabilisticBDModel {
public:
    ProbabilisticBDModel(BDModel bd, ProbabilityMeasure mu);

    const BDModel& bd() const noexcept { return bd_; }
    const ProbabilityMeasure& mu() const noexcept { return mu_; }

private:
    BDModel bd_;
    ProbabilityMeasure mu_;
};

// bel_pos(f) = Bel(|f|+), bel_neg(f) = Bel(|f|-) = bel_pos(~f).
double bel_pos(const DSModel& m, const Formula& f);
double bel_neg(const DSModel& m, const Formula& f);

// pl_pos(f) = Pl(|f|+) with the model's independent plausibility.
double pl_pos(const DSplModel& m, const Formula& f);
double pl_neg(const DSplModel& m, const Formula& f);

// prob(f) = mu(|f|+). Additivity holds only through inclusion/exclusion on
// the extension algebra; prob(f) + prob(~f) need not be 1.
double prob(const ProbabilisticBDModel& m, const Formula& f);

// Conditioning on the positive extension of f. The states and valuations
// are untouched; only the measures move. Negative information conditions
// through ~f, since |f|- = |~f|+.
DSModel update(const DSModel& m, const Formula& f, ConditioningMethod method);

// Bel and the independent Pl update separately: Bel is gated by its own
// associated plausibility, Pl by pl(|f|+).
DSplModel update(const DSplModel& m, const Formula& f, ConditioningMethod method);

} // namespace pdx

#endif // PDX_MODELS_HPP

#include "pdx/models.hpp"

namespace pdx {

namespace {

// Family checks are exponential in the table size; run them where they are
// affordable (the basics are always enforced by the table constructors).
constexpr std::size_t kDeepCheckStates = 8;

void require_belief(const BeliefFunction& bel) {
    if (bel.size() <= kDeepCheckStates) {
        const AxiomReport report = check_belief_axioms(bel, 3);
        if (!report.pass) {
            throw Error(ErrorCode::Domain, "invalid belief function: " + report.violation);
        }
    }
}

void require_plausibility(const PlausibilityFunction& pl) {
    if (pl.size() <= kDeepCheckStates) {
        const AxiomReport report = check_plausibility_axioms(pl, 3);
        if (!report.pass) {
            throw Error(ErrorCode::Domain, "invalid plausibility function: " + report.violation);
        }
    }
}

} // namespace

DSModel::DSModel(BDModel bd, BeliefFunction bel) : bd_(std::move(bd)), bel_(std::move(bel)) {
    require_same_universe(bd_.states(), bel_.universe());
    require_belief(bel_);
}

DSModel::DSModel(BDModel bd, const MassFunction& mass)
    : DSModel(std::move(bd), belief_from_mass(mass)) {}

DSplModel::DSplModel(DSModel ds, PlausibilityFunction pl)
    : ds_(std::move(ds)), pl_(std::move(pl)) {
    require_same_universe(ds_.bd().states(), pl_.universe());
    require_plausibility(pl_);
}

ProbabilisticBDModel::ProbabilisticBDModel(BDModel bd, ProbabilityMeasure mu)
    : bd_(std::move(bd)), mu_(std::move(mu)) {
    require_same_universe(bd_.states(), mu_.universe());
}

double bel_pos(const DSModel& m, const Formula& f) {
    return m.bel()(positive_extension(m.bd(), f));
}

double bel_neg(const DSModel& m, const Formula& f) {
    return m.bel()(negative_extension(m.bd(), f));
}

double pl_pos(const DSplModel& m, const Formula& f) {
    return m.pl()(positive_extension(m.bd(), f));
}

double pl_neg(const DSplModel& m, const Formula& f) {
    return m.pl()(negative_extension(m.bd(), f));
}

double prob(const ProbabilisticBDModel& m, const Formula& f) {
    return m.mu()(positive_extension(m.bd(), f));
}

DSModel update(const DSModel& m, const Formula& f, ConditioningMethod method) {
    const StateSet b = positive_extension(m.bd(), f);
    switch (method) {
        case ConditioningMethod::LowerUpper: return DSModel(m.bd(), condition_bel_lower(m.bel(), b));
        case ConditioningMethod::DS: return DSModel(m.bd(), ds_condition_bel(m.bel(), b));
    }
    throw Error(ErrorCode::Domain, "unknown conditioning method");
}

DSplModel update(const DSplModel& m, const Formula& f, ConditioningMethod method) {
    const StateSet b = positive_extension(m.bd(), f);
    switch (method) {
        case ConditioningMethod::LowerUpper:
            return DSplModel(DSModel(m.bd(), condition_bel_lower(m.bel(), b)),
                             condition_pl_lower(m.pl(), b));
        case ConditioningMethod::DS:
            return DSplModel(DSModel(m.bd(), ds_condition_bel(m.bel(), b)),
                             ds_condition_pl(m.pl(), b));
    }
    throw Error(ErrorCode::Domain, "unknown conditioning method");
}

} // namespace pdx

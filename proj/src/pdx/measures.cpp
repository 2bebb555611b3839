#include "pdx/measures.hpp"

#include <bit>
#include <cmath>
#include <cstddef>

namespace pdx {

namespace {

void check_universe(const std::vector<std::string>& universe) {
    if (universe.empty()) {
        throw Error(ErrorCode::Domain, "empty universe");
    }
    if (universe.size() > kMaxDenseStates) {
        throw Error(ErrorCode::Domain,
                    "dense set functions support at most " + std::to_string(kMaxDenseStates) +
                        " states (got " + std::to_string(universe.size()) + ")");
    }
}

// Shared validation for dense belief/plausibility tables.
void check_dense_table(const std::vector<std::string>& universe,
                       const std::vector<double>& table,
                       const char* what) {
    const double eps = epsilon();
    const std::size_t n = universe.size();
    if (table.size() != (std::size_t{1} << n)) {
        throw Error(ErrorCode::Domain,
                    std::string(what) + " table must have 2^" + std::to_string(n) + " entries");
    }
    if (std::abs(table[0]) > eps) {
        throw Error(ErrorCode::Domain, std::string(what) + " must map the empty set to 0");
    }
    if (std::abs(table[table.size() - 1] - 1.0) > eps) {
        throw Error(ErrorCode::Domain, std::string(what) + " must map the full set to 1");
    }
    const StateSet full = full_set(n);
    for (StateSet x = 0; x <= full; ++x) {
        if (table[x] < -eps || table[x] > 1.0 + eps) {
            throw Error(ErrorCode::Domain, std::string(what) + " value out of [0,1] at " +
                                               set_to_string(x, universe));
        }
        for (std::size_t i = 0; i < n; ++i) {
            const StateSet bit = StateSet{1} << i;
            if (!(x & bit) && table[x] > table[x | bit] + eps) {
                throw Error(ErrorCode::Domain, std::string(what) + " is not monotone between " +
                                                   set_to_string(x, universe) + " and " +
                                                   set_to_string(x | bit, universe));
            }
        }
        if (x == full) break;
    }
}

} // namespace

void require_same_universe(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a != b) {
        throw Error(ErrorCode::Domain, "universe mismatch");
    }
}

MassFunction::MassFunction(std::vector<std::string> universe, std::map<StateSet, double> weights)
    : universe_(std::move(universe)), weights_(std::move(weights)) {
    check_universe(universe_);
    const double eps = epsilon();
    const StateSet full = full_set(universe_.size());
    double total = 0.0;
    for (auto it = weights_.begin(); it != weights_.end();) {
        if (it->first & ~full) {
            throw Error(ErrorCode::Domain,
                        "focal element outside the universe (mask " + std::to_string(it->first) + ")");
        }
        if (it->second < -eps) {
            throw Error(ErrorCode::Domain,
                        "negative mass for " + set_to_string(it->first, universe_));
        }
        if (it->second <= 0.0) {
            it = weights_.erase(it); // drop empty support, clamp (-eps, 0]
            continue;
        }
        total += it->second;
        ++it;
    }
    if (std::abs(total - 1.0) > eps) {
        throw Error(ErrorCode::Domain,
                    "mass weights must sum to 1 (got " + std::to_string(total) + ")");
    }
}

double MassFunction::weight(StateSet x) const {
    const auto it = weights_.find(x);
    return it == weights_.end() ? 0.0 : it->second;
}

BeliefFunction::BeliefFunction(std::vector<std::string> universe, std::vector<double> table)
    : universe_(std::move(universe)), table_(std::move(table)) {
    check_universe(universe_);
    check_dense_table(universe_, table_, "belief");
}

PlausibilityFunction::PlausibilityFunction(std::vector<std::string> universe,
                                           std::vector<double> table)
    : universe_(std::move(universe)), table_(std::move(table)) {
    check_universe(universe_);
    check_dense_table(universe_, table_, "plausibility");
}

ProbabilityMeasure::ProbabilityMeasure(std::vector<std::string> universe, std::vector<double> point)
    : universe_(std::move(universe)), point_(std::move(point)) {
    check_universe(universe_);
    if (point_.size() != universe_.size()) {
        throw Error(ErrorCode::Domain, "point masses must match the number of states");
    }
    const double eps = epsilon();
    double total = 0.0;
    for (std::size_t i = 0; i < point_.size(); ++i) {
        if (point_[i] < -eps) {
            throw Error(ErrorCode::Domain, "negative point mass at " + universe_[i]);
        }
        if (point_[i] < 0.0) point_[i] = 0.0;
        total += point_[i];
    }
    if (std::abs(total - 1.0) > eps) {
        throw Error(ErrorCode::Domain,
                    "point masses must sum to 1 (got " + std::to_string(total) + ")");
    }
}

double ProbabilityMeasure::operator()(StateSet x) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < point_.size(); ++i) {
        if (x & (StateSet{1} << i)) sum += point_[i];
    }
    return sum;
}

BeliefFunction belief_from_mass(const MassFunction& m) {
    const double eps = epsilon();
    if (m.weight(0) > eps) {
        throw Error(ErrorCode::Domain,
                    "belief_from_mass requires zero mass on the empty set (got " +
                        std::to_string(m.weight(0)) + ")");
    }
    const std::size_t n = m.size();
    std::vector<double> table(std::size_t{1} << n, 0.0);
    for (const auto& [x, w] : m.focal()) {
        if (x != 0) table[x] = w;
    }
    // Subset-sum (zeta) transform, O(2^n * n).
    for (std::size_t i = 0; i < n; ++i) {
        const StateSet bit = StateSet{1} << i;
        for (StateSet x = 0; x < table.size(); ++x) {
            if (x & bit) table[x] += table[x ^ bit];
        }
    }
    return BeliefFunction(m.universe(), std::move(table));
}

MassFunction mass_from_belief(const BeliefFunction& bel) {
    const double eps = epsilon();
    const std::size_t n = bel.size();
    std::vector<double> coeff = bel.table();
    // Moebius inversion, the inverse of the subset-sum transform.
    for (std::size_t i = 0; i < n; ++i) {
        const StateSet bit = StateSet{1} << i;
        for (StateSet x = 0; x < coeff.size(); ++x) {
            if (x & bit) coeff[x] -= coeff[x ^ bit];
        }
    }
    std::map<StateSet, double> weights;
    bool clamped = false;
    for (StateSet x = 0; x < coeff.size(); ++x) {
        if (coeff[x] < -eps) {
            throw Error(ErrorCode::Domain,
                        "not a belief function: Moebius mass of " +
                            set_to_string(x, bel.universe()) + " is " + std::to_string(coeff[x]));
        }
        if (coeff[x] <= 0.0) {
            clamped |= coeff[x] < 0.0;
            continue;
        }
        weights[x] = coeff[x];
    }
    if (clamped) {
        double total = 0.0;
        for (const auto& [x, w] : weights) total += w;
        if (total > 0.0) {
            for (auto& [x, w] : weights) w /= total;
        }
    }
    return MassFunction(bel.universe(), std::move(weights));
}

PlausibilityFunction plausibility_from_belief(const BeliefFunction& bel) {
    const std::size_t n = bel.size();
    const StateSet full = full_set(n);
    std::vector<double> table(std::size_t{1} << n);
    for (StateSet x = 0; x <= full; ++x) {
        table[x] = 1.0 - bel(complement(x, n));
        if (x == full) break;
    }
    table[0] = 0.0; // exact, regardless of rounding in bel(full)
    return PlausibilityFunction(bel.universe(), std::move(table));
}

PlausibilityFunction plausibility_from_mass(const MassFunction& m) {
    return plausibility_from_belief(belief_from_mass(m));
}

BeliefFunction belief_from_plausibility(const PlausibilityFunction& pl) {
    const std::size_t n = pl.size();
    const StateSet full = full_set(n);
    std::vector<double> table(std::size_t{1} << n);
    for (StateSet x = 0; x <= full; ++x) {
        table[x] = 1.0 - pl(complement(x, n));
        if (x == full) break;
    }
    table[0] = 0.0;
    return BeliefFunction(pl.universe(), std::move(table));
}

MassFunction mass_from_plausibility(const PlausibilityFunction& pl) {
    return mass_from_belief(belief_from_plausibility(pl));
}

BeliefFunction belief_from_measure(const ProbabilityMeasure& mu) {
    const StateSet full = full_set(mu.size());
    std::vector<double> table(std::size_t{1} << mu.size());
    for (StateSet x = 0; x <= full; ++x) {
        table[x] = mu(x);
        if (x == full) break;
    }
    table[full] = 1.0;
    return BeliefFunction(mu.universe(), std::move(table));
}

namespace {

// Boundary, range and monotonicity checks shared by both axiom checkers.
// Monotonicity runs over every subset pair (3^n of them), not only covers.
bool check_basics(const std::vector<double>& table,
                  const std::vector<std::string>& universe,
                  AxiomReport& report) {
    const double eps = epsilon();
    const std::size_t n = universe.size();
    if (std::abs(table[0]) > eps) {
        report = {false, "f(empty) != 0", {0}, table[0], 0.0};
        return false;
    }
    const StateSet full = full_set(n);
    if (std::abs(table[full] - 1.0) > eps) {
        report = {false, "f(full) != 1", {full}, table[full], 1.0};
        return false;
    }
    for (StateSet y = 0; y <= full; ++y) {
        if (table[y] < -eps || table[y] > 1.0 + eps) {
            report = {false, "value outside [0,1] at " + set_to_string(y, universe), {y}, table[y], 0.0};
            return false;
        }
        for (StateSet x = y;; x = (x - 1) & y) {
            if (x != y && table[x] > table[y] + eps) {
                report = {false,
                          "not monotone: f(" + set_to_string(x, universe) + ") > f(" +
                              set_to_string(y, universe) + ")",
                          {x, y},
                          table[x],
                          table[y]};
                return false;
            }
            if (x == 0) break;
        }
        if (y == full) break;
    }
    return true;
}

// Enumerates families {a_1 < ... < a_k} of distinct subsets by increasing
// size k = 1..kmax and evaluates the inclusion-exclusion inequality on each,
// so the reported witness is a smallest violating family. `dual` selects the
// plausibility direction.
bool check_k_families(const std::vector<double>& table,
                      const std::vector<std::string>& universe,
                      int kmax,
                      bool dual,
                      AxiomReport& report) {
    const double eps = epsilon();
    const std::size_t count = table.size();
    std::vector<StateSet> family;

    const auto evaluate_family = [&](const std::vector<StateSet>& sets) {
        const std::size_t k = sets.size();
        double rhs = 0.0;
        for (std::uint32_t j = 1; j < (std::uint32_t{1} << k); ++j) {
            StateSet meet = full_set(universe.size());
            StateSet join = 0;
            for (std::size_t i = 0; i < k; ++i) {
                if (j & (std::uint32_t{1} << i)) {
                    meet &= sets[i];
                    join |= sets[i];
                }
            }
            const double sign = (std::popcount(j) % 2 == 1) ? 1.0 : -1.0;
            rhs += sign * table[dual ? join : meet];
        }
        StateSet all_join = 0;
        StateSet all_meet = full_set(universe.size());
        for (const StateSet s : sets) {
            all_join |= s;
            all_meet &= s;
        }
        const double lhs = table[dual ? all_meet : all_join];
        const bool violated = dual ? (lhs > rhs + eps) : (lhs < rhs - eps);
        if (violated) {
            std::string names;
            for (const StateSet s : sets) {
                if (!names.empty()) names += ",";
                names += set_to_string(s, universe);
            }
            report = {false,
                      std::string(dual ? "plausibility" : "belief") +
                          " k-family inequality violated for family [" + names + "]",
                      sets,
                      lhs,
                      rhs};
            return false;
        }
        return true;
    };

    const auto recurse = [&](auto&& self, StateSet next, std::size_t want) -> bool {
        if (family.size() == want) return evaluate_family(family);
        for (StateSet x = next; x < count; ++x) {
            family.push_back(x);
            const bool ok = self(self, x + 1, want);
            family.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    for (int k = 1; k <= kmax; ++k) {
        if (!recurse(recurse, 0, static_cast<std::size_t>(k))) return false;
    }
    return true;
}

AxiomReport run_checks(const std::vector<double>& table,
                       const std::vector<std::string>& universe,
                       int kmax,
                       bool dual) {
    if (kmax < 1) {
        throw Error(ErrorCode::Domain, "kmax must be at least 1");
    }
    if (table.size() != (std::size_t{1} << universe.size())) {
        throw Error(ErrorCode::Domain, "set-function table size does not match the universe");
    }
    AxiomReport report = AxiomReport::ok();
    if (!check_basics(table, universe, report)) return report;
    check_k_families(table, universe, kmax, dual, report);
    return report;
}

} // namespace

AxiomReport check_belief_axioms(const std::vector<double>& table,
                                const std::vector<std::string>& universe,
                                int kmax) {
    return run_checks(table, universe, kmax, /*dual=*/false);
}

AxiomReport check_belief_axioms(const BeliefFunction& bel, int kmax) {
    return check_belief_axioms(bel.table(), bel.universe(), kmax);
}

AxiomReport check_plausibility_axioms(const std::vector<double>& table,
                                      const std::vector<std::string>& universe,
                                      int kmax) {
    return run_checks(table, universe, kmax, /*dual=*/true);
}

AxiomReport check_plausibility_axioms(const PlausibilityFunction& pl, int kmax) {
    return check_plausibility_axioms(pl.table(), pl.universe(), kmax);
}

} // namespace pdx

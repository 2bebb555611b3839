#ifndef PDX_MEASURES_HPP
#define PDX_MEASURES_HPP

#include <map>
#include <string>
#include <vector>

#include "pdx/common.hpp"

namespace pdx {

// Nonnegative weights on subsets of the universe summing to 1. Only the
// support (focal elements) is stored; absent sets carry weight 0.
class MassFunction {
public:
    MassFunction(std::vector<std::string> universe, std::map<StateSet, double> weights);

    const std::vector<std::string>& universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return universe_.size(); }
    StateSet full() const noexcept { return full_set(universe_.size()); }

    double weight(StateSet x) const;
    const std::map<StateSet, double>& focal() const noexcept { return weights_; }

private:
    std::vector<std::string> universe_;
    std::map<StateSet, double> weights_; // focal elements only, weights > 0
};

// Total set function stored as a dense table indexed by subset mask.
// Construction checks the boundary conditions, the [0,1] range and
// monotonicity; the k-family inequalities are checked separately
// (check_belief_axioms / check_plausibility_axioms).
class BeliefFunction {
public:
    BeliefFunction(std::vector<std::string> universe, std::vector<double> table);

    const std::vector<std::string>& universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return universe_.size(); }
    StateSet full() const noexcept { return full_set(universe_.size()); }

    double operator()(StateSet x) const { return table_[x]; }
    const std::vector<double>& table() const noexcept { return table_; }

private:
    std::vector<std::string> universe_;
    std::vector<double> table_;
};

class PlausibilityFunction {
public:
    PlausibilityFunction(std::vector<std::string> universe, std::vector<double> table);

    const std::vector<std::string>& universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return universe_.size(); }
    StateSet full() const noexcept { return full_set(universe_.size()); }

    double operator()(StateSet x) const { return table_[x]; }
    const std::vector<double>& table() const noexcept { return table_; }

private:
    std::vector<std::string> universe_;
    std::vector<double> table_;
};

// Finitely additive probability: point masses over the states.
class ProbabilityMeasure {
public:
    ProbabilityMeasure(std::vector<std::string> universe, std::vector<double> point);

    const std::vector<std::string>& universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return universe_.size(); }
    StateSet full() const noexcept { return full_set(universe_.size()); }

    double point(std::size_t i) const { return point_[i]; }
    const std::vector<double>& points() const noexcept { return point_; }

    // mu(X) = sum of the point masses in X.
    double operator()(StateSet x) const;

private:
    std::vector<std::string> universe_;
    std::vector<double> point_;
};

// bel(X) = sum of m(Y) over Y subset of X (zeta transform over the subset
// lattice). Requires m(empty) = 0.
BeliefFunction belief_from_mass(const MassFunction& m);

// Moebius inversion of the subset-sum; weights in (-eps, 0) are clamped to
// zero and the result renormalized. A coefficient below -eps means the input
// was not a belief function and raises a Domain error naming the set.
MassFunction mass_from_belief(const BeliefFunction& bel);

// pl(X) = 1 - bel(complement of X); equivalently the total mass of the sets
// meeting X.
PlausibilityFunction plausibility_from_belief(const BeliefFunction& bel);
PlausibilityFunction plausibility_from_mass(const MassFunction& m);

// bel(X) = 1 - pl(complement of X); double application is the identity.
BeliefFunction belief_from_plausibility(const PlausibilityFunction& pl);
MassFunction mass_from_plausibility(const PlausibilityFunction& pl);

// The additive set function of a probability measure, as a belief table
// (probabilities are simultaneously belief and plausibility functions).
BeliefFunction belief_from_measure(const ProbabilityMeasure& mu);

// Outcome of an axiom check. Violations are content, not errors.
struct AxiomReport {
    bool pass = true;
    std::string violation;         // empty when pass
    std::vector<StateSet> witness; // violating family (or pair, or single set)
    double lhs = 0.0;
    double rhs = 0.0;

    static AxiomReport ok() { return {}; }
};

// Verifies f(empty)=0, f(full)=1, the [0,1] range, monotonicity under
// inclusion, and the inclusion-exclusion inequality for every family of
// distinct subsets of size <= kmax. Exhaustive: cost grows as C(2^n, kmax).
AxiomReport check_belief_axioms(const std::vector<double>& table,
                                const std::vector<std::string>& universe,
                                int kmax);
AxiomReport check_belief_axioms(const BeliefFunction& bel, int kmax);

// Dual check with the k-family inequality reversed (meet on the left,
// joins on the right).
AxiomReport check_plausibility_axioms(const std::vector<double>& table,
                                      const std::vector<std::string>& universe,
                                      int kmax);
AxiomReport check_plausibility_axioms(const PlausibilityFunction& pl, int kmax);

// Universe equality (same names, same order); mismatches are Domain errors.
void require_same_universe(const std::vector<std::string>& a, const std::vector<std::string>& b);

} // namespace pdx

#endif // PDX_MEASURES_HPP

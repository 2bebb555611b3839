#include "pdx/conditioning.hpp"

#include <string>

namespace pdx {

MassFunction ds_combine(const MassFunction& m1, const MassFunction& m2) {
    require_same_universe(m1.universe(), m2.universe());
    std::map<StateSet, double> products;
    double normalizer = 0.0;
    for (const auto& [x1, w1] : m1.focal()) {
        for (const auto& [x2, w2] : m2.focal()) {
            const StateSet meet = x1 & x2;
            if (meet == 0) continue;
            products[meet] += w1 * w2;
            normalizer += w1 * w2;
        }
    }
    if (!(normalizer > epsilon())) {
        throw Error(ErrorCode::TotalConflict,
                    "total conflict: the combined masses share no compatible focal elements");
    }
    for (auto& [x, w] : products) w /= normalizer;
    return MassFunction(m1.universe(), std::move(products));
}

MassFunction point_mass(const std::vector<std::string>& universe, StateSet b) {
    if (b == 0) {
        throw Error(ErrorCode::Domain, "point mass on the empty set is not a piece of evidence");
    }
    return MassFunction(universe, {{b, 1.0}});
}

BeliefFunction condition_bel_lower(const BeliefFunction& bel, StateSet b) {
    const double eps = epsilon();
    const std::size_t n = bel.size();
    const PlausibilityFunction pl = plausibility_from_belief(bel);
    if (!(pl(b) > eps)) {
        throw Error(ErrorCode::UndefinedUpdate,
                    "conditioning undefined: associated plausibility of B is " +
                        std::to_string(pl(b)));
    }
    const StateSet full = full_set(n);
    std::vector<double> table(std::size_t{1} << n);
    for (StateSet x = 0; x <= full; ++x) {
        const double blocking = pl(complement(x, n) & b);
        if (blocking <= eps) {
            table[x] = 1.0;
        } else {
            const double inside = bel(x & b);
            table[x] = inside / (inside + blocking);
        }
        if (x == full) break;
    }
    return BeliefFunction(bel.universe(), std::move(table));
}

PlausibilityFunction condition_pl_lower(const PlausibilityFunction& pl, StateSet b) {
    const double eps = epsilon();
    const std::size_t n = pl.size();
    if (!(pl(b) > eps)) {
        throw Error(ErrorCode::UndefinedUpdate,
                    "conditioning undefined: pl(B) = " + std::to_string(pl(b)));
    }
    const StateSet full = full_set(n);
    std::vector<double> table(std::size_t{1} << n);
    for (StateSet x = 0; x <= full; ++x) {
        const double inside = pl(x & b);
        if (inside <= eps) {
            table[x] = 0.0;
        } else {
            // Belief associated to pl at comp(X) & B.
            const double blocking = 1.0 - pl(complement(complement(x, n) & b, n));
            const double denom = inside + blocking;
            if (!(denom > eps)) {
                throw Error(ErrorCode::Domain,
                            "invalid plausibility input: degenerate denominator at " +
                                set_to_string(x, pl.universe()));
            }
            table[x] = inside / denom;
        }
        if (x == full) break;
    }
    return PlausibilityFunction(pl.universe(), std::move(table));
}

BeliefFunction ds_condition_bel(const BeliefFunction& bel, StateSet b) {
    const double eps = epsilon();
    const std::size_t n = bel.size();
    const StateSet outside = complement(b, n);
    const double scale = 1.0 - bel(outside);
    if (!(scale > eps)) {
        throw Error(ErrorCode::UndefinedUpdate,
                    "conditioning undefined: 1 - bel(comp(B)) = " + std::to_string(scale));
    }
    const StateSet full = full_set(n);
    std::vector<double> table(std::size_t{1} << n);
    for (StateSet x = 0; x <= full; ++x) {
        table[x] = (bel(x | outside) - bel(outside)) / scale;
        if (x == full) break;
    }
    return BeliefFunction(bel.universe(), std::move(table));
}

PlausibilityFunction ds_condition_pl(const PlausibilityFunction& pl, StateSet b) {
    const double eps = epsilon();
    const std::size_t n = pl.size();
    const double plb = pl(b);
    if (!(plb > eps)) {
        throw Error(ErrorCode::UndefinedUpdate,
                    "conditioning undefined: pl(B) = " + std::to_string(plb));
    }
    const StateSet full = full_set(n);
    std::vector<double> table(std::size_t{1} << n);
    for (StateSet x = 0; x <= full; ++x) {
        table[x] = pl(x & b) / plb;
        if (x == full) break;
    }
    return PlausibilityFunction(pl.universe(), std::move(table));
}

} // namespace pdx

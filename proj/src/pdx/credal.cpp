#include "pdx/credal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pdx {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Uniform in [0, 1) from the top 53 bits.
double unit_double(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

} // namespace

CredalSet::CredalSet(std::vector<ProbabilityMeasure> generators)
    : generators_(std::move(generators)) {
    if (generators_.empty()) {
        throw Error(ErrorCode::Domain, "a credal set needs at least one generator");
    }
    for (const auto& mu : generators_) {
        require_same_universe(mu.universe(), generators_.front().universe());
    }
}

double lower_envelope(const CredalSet& set, StateSet x) {
    double best = set.generators().front()(x);
    for (const auto& mu : set.generators()) best = std::min(best, mu(x));
    return best;
}

double upper_envelope(const CredalSet& set, StateSet x) {
    double best = set.generators().front()(x);
    for (const auto& mu : set.generators()) best = std::max(best, mu(x));
    return best;
}

CredalSet extreme_points(const BeliefFunction& bel) {
    const std::size_t n = bel.size();
    if (n > kMaxOracleStates) {
        throw Error(ErrorCode::Domain,
                    "extreme point enumeration supports at most " +
                        std::to_string(kMaxOracleStates) + " states (got " + std::to_string(n) + ")");
    }
    const MassFunction mass = mass_from_belief(bel);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);

    std::vector<ProbabilityMeasure> generators;
    do {
        std::vector<double> point(n, 0.0);
        for (const auto& [x, w] : mass.focal()) {
            for (const std::size_t i : order) {
                if (x & (StateSet{1} << i)) {
                    point[i] += w;
                    break;
                }
            }
        }
        generators.emplace_back(bel.universe(), std::move(point));
    } while (std::next_permutation(order.begin(), order.end()));
    return CredalSet(std::move(generators));
}

CredalSet sample_credal(const BeliefFunction& bel, int n, std::uint64_t seed) {
    if (n < 1) {
        throw Error(ErrorCode::Domain, "sample count must be at least 1");
    }
    const CredalSet extremes = extreme_points(bel);
    const std::size_t g = extremes.size();
    const std::size_t states = bel.size();

    std::vector<ProbabilityMeasure> samples;
    samples.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Per-sample derived seed keeps results schedule-independent.
        std::uint64_t state = seed ^ (0xD1B54A32D192ED03ull * (static_cast<std::uint64_t>(i) + 1));
        std::vector<double> weights(g);
        double total = 0.0;
        for (std::size_t j = 0; j < g; ++j) {
            // -log(1-u) is Exp(1); normalized exponentials are Dirichlet(1,...,1).
            weights[j] = -std::log1p(-unit_double(splitmix64(state)));
            total += weights[j];
        }
        std::vector<double> point(states, 0.0);
        if (total <= 0.0) {
            point = extremes.generators().front().points();
        } else {
            for (std::size_t j = 0; j < g; ++j) {
                const double w = weights[j] / total;
                const auto& p = extremes.generators()[j].points();
                for (std::size_t s = 0; s < states; ++s) point[s] += w * p[s];
            }
        }
        samples.emplace_back(bel.universe(), std::move(point));
    }
    return CredalSet(std::move(samples));
}

ProbabilityMeasure bayes_update_measure(const ProbabilityMeasure& mu, StateSet b) {
    const double mb = mu(b);
    if (!(mb > epsilon())) {
        throw Error(ErrorCode::UndefinedUpdate,
                    "conditioning on a null event: mu(B) = " + std::to_string(mb));
    }
    std::vector<double> point(mu.size(), 0.0);
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (b & (StateSet{1} << i)) point[i] = mu.point(i) / mb;
    }
    return ProbabilityMeasure(mu.universe(), std::move(point));
}

CredalSet update_credal(const CredalSet& set, StateSet b) {
    const double eps = epsilon();
    std::vector<ProbabilityMeasure> updated;
    for (const auto& mu : set.generators()) {
        if (mu(b) > eps) updated.push_back(bayes_update_measure(mu, b));
    }
    if (updated.empty()) {
        throw Error(ErrorCode::UndefinedUpdate,
                    "update undefined: no measure gives B positive probability");
    }
    return CredalSet(std::move(updated));
}

} // namespace pdx

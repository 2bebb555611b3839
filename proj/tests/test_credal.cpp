#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "generators.hpp"
#include "pdx/credal.hpp"

using pdx::BeliefFunction;
using pdx::CredalSet;
using pdx::MassFunction;
using pdx::ProbabilityMeasure;
using pdx::StateSet;

namespace {

const double kTight = 1e-9;

BeliefFunction example_bel() { return pdx::belief_from_mass(pdxtest::example_mass()); }

} // namespace

TEST_CASE("extreme points of the example mass") {
    const CredalSet extremes = pdx::extreme_points(example_bel());
    CHECK(extremes.size() == 6); // one per permutation, duplicates kept

    std::vector<std::vector<double>> points;
    for (const auto& mu : extremes.generators()) points.push_back(mu.points());
    std::sort(points.begin(), points.end());
    const std::vector<std::vector<double>> expected = {
        {0.2, 0.0, 0.8}, {0.2, 0.0, 0.8}, {0.2, 0.8, 0.0},
        {0.2, 0.8, 0.0}, {0.5, 0.0, 0.5}, {0.5, 0.5, 0.0},
    };
    REQUIRE(points.size() == expected.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t s = 0; s < 3; ++s) {
            CHECK(points[i][s] == doctest::Approx(expected[i][s]).epsilon(kTight));
        }
    }
}

TEST_CASE("envelopes attain belief and plausibility") {
    const BeliefFunction bel = example_bel();
    const auto pl = pdx::plausibility_from_belief(bel);
    const CredalSet extremes = pdx::extreme_points(bel);
    for (StateSet x = 0; x <= 7; ++x) {
        CHECK(pdx::lower_envelope(extremes, x) == doctest::Approx(bel(x)).epsilon(kTight));
        CHECK(pdx::upper_envelope(extremes, x) == doctest::Approx(pl(x)).epsilon(kTight));
    }
    CHECK(pdx::lower_envelope(extremes, 0b001) == doctest::Approx(0.2).epsilon(kTight));

    pdxtest::Rng rng(404);
    for (int round = 0; round < 40; ++round) {
        const MassFunction m = pdxtest::random_mass(rng, rng.range(1, 6), 8);
        const BeliefFunction b = pdx::belief_from_mass(m);
        const auto p = pdx::plausibility_from_belief(b);
        const CredalSet ex = pdx::extreme_points(b);
        for (StateSet x = 0; x <= m.full(); ++x) {
            CHECK(pdx::lower_envelope(ex, x) == doctest::Approx(b(x)).epsilon(kTight));
            CHECK(pdx::upper_envelope(ex, x) == doctest::Approx(p(x)).epsilon(kTight));
            if (x == m.full()) break;
        }
    }
}

TEST_CASE("unanimity beliefs force their extreme points") {
    // Single-state universe: the only measure is the point mass.
    const MassFunction tiny(pdxtest::make_states(1), {{1, 1.0}});
    const CredalSet single = pdx::extreme_points(pdx::belief_from_mass(tiny));
    CHECK(single.size() == 1);
    CHECK(single.generators()[0].point(0) == 1.0);

    // Unanimity on {s1,s2} inside three states: only point masses on s1/s2.
    const MassFunction pair(pdxtest::make_states(3), {{0b011, 1.0}});
    const CredalSet ex = pdx::extreme_points(pdx::belief_from_mass(pair));
    for (const auto& mu : ex.generators()) {
        CHECK(mu.point(2) == 0.0);
        CHECK(mu(0b011) == doctest::Approx(1.0).epsilon(kTight));
        CHECK((mu.point(0) == doctest::Approx(1.0) || mu.point(1) == doctest::Approx(1.0)));
    }
}

TEST_CASE("extreme point enumeration refuses large universes") {
    std::map<StateSet, double> weights{{pdx::full_set(9), 1.0}};
    const MassFunction big(pdxtest::make_states(9), std::move(weights));
    CHECK_THROWS_AS(pdx::extreme_points(pdx::belief_from_mass(big)), pdx::Error);
}

TEST_CASE("sampling is deterministic, dominated, and validated") {
    const BeliefFunction bel = example_bel();
    const auto pl = pdx::plausibility_from_belief(bel);

    const CredalSet a = pdx::sample_credal(bel, 25, 99);
    const CredalSet b = pdx::sample_credal(bel, 25, 99);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.generators()[i].points() == b.generators()[i].points()); // bit-identical
    }
    const CredalSet c = pdx::sample_credal(bel, 25, 100);
    CHECK(a.generators()[0].points() != c.generators()[0].points());

    for (const auto& mu : a.generators()) {
        for (StateSet x = 0; x <= 7; ++x) {
            CHECK(mu(x) >= bel(x) - kTight);
            CHECK(mu(x) <= pl(x) + kTight);
        }
    }
    CHECK_THROWS_AS(pdx::sample_credal(bel, 0, 1), pdx::Error);

    // A single extreme point leaves nothing to mix.
    const MassFunction tiny(pdxtest::make_states(1), {{1, 1.0}});
    const CredalSet fixed = pdx::sample_credal(pdx::belief_from_mass(tiny), 3, 5);
    for (const auto& mu : fixed.generators()) CHECK(mu.point(0) == doctest::Approx(1.0));
}

TEST_CASE("Bayes update of a single measure") {
    const ProbabilityMeasure uniform(pdxtest::make_states(3), {1.0 / 3, 1.0 / 3, 1.0 / 3});
    const ProbabilityMeasure updated = pdx::bayes_update_measure(uniform, 0b011);
    CHECK(updated.point(0) == doctest::Approx(0.5).epsilon(kTight));
    CHECK(updated.point(1) == doctest::Approx(0.5).epsilon(kTight));
    CHECK(updated.point(2) == 0.0);
    CHECK(updated(0b011) == doctest::Approx(1.0).epsilon(kTight));

    // Conditioning on the whole space changes nothing.
    const ProbabilityMeasure same = pdx::bayes_update_measure(uniform, 0b111);
    for (int i = 0; i < 3; ++i) {
        CHECK(same.point(i) == doctest::Approx(uniform.point(i)).epsilon(kTight));
    }

    const ProbabilityMeasure corner(pdxtest::make_states(2), {1.0, 0.0});
    CHECK_THROWS_AS(pdx::bayes_update_measure(corner, 0b10), pdx::Error);
}

TEST_CASE("a singleton credal set has collapsed envelopes and a one-point update") {
    const ProbabilityMeasure mu(pdxtest::make_states(2), {0.25, 0.75});
    const CredalSet set({mu});
    for (StateSet x = 0; x <= 3; ++x) {
        CHECK(pdx::lower_envelope(set, x) == mu(x));
        CHECK(pdx::upper_envelope(set, x) == mu(x));
    }
    CHECK(pdx::lower_envelope(set, 0) == 0.0);
    CHECK(pdx::upper_envelope(set, 3) == doctest::Approx(1.0));
    const CredalSet updated = pdx::update_credal(set, 0b10);
    CHECK(updated.size() == 1);
    CHECK(updated.generators()[0].point(1) == doctest::Approx(1.0));
}

TEST_CASE("credal update drops null generators and may fail entirely") {
    const ProbabilityMeasure only_s1(pdxtest::make_states(2), {1.0, 0.0});
    const ProbabilityMeasure only_s2(pdxtest::make_states(2), {0.0, 1.0});
    const CredalSet set({only_s1, only_s2});

    const CredalSet updated = pdx::update_credal(set, 0b01);
    CHECK(updated.size() == 1);
    CHECK(updated.generators()[0].point(0) == doctest::Approx(1.0));

    const CredalSet singleton({only_s1});
    CHECK_THROWS_WITH_AS(pdx::update_credal(singleton, 0b10),
                         "update undefined: no measure gives B positive probability", pdx::Error);

    // The example: conditioning on {s1,s2} keeps all six generators.
    const CredalSet ex = pdx::update_credal(pdx::extreme_points(example_bel()), 0b011);
    CHECK(ex.size() == 6);
}

TEST_CASE("dominating a belief is the same as being dominated by its dual") {
    pdxtest::Rng rng(512);
    for (int round = 0; round < 60; ++round) {
        const int n = rng.range(1, 5);
        const MassFunction m = pdxtest::random_mass(rng, n, 6);
        const BeliefFunction bel = pdx::belief_from_mass(m);
        const auto pl = pdx::plausibility_from_belief(bel);
        const ProbabilityMeasure mu = pdxtest::random_measure(rng, n);

        bool dominates = true, dominated = true;
        for (StateSet x = 0; x <= m.full(); ++x) {
            if (mu(x) < bel(x) - 1e-12) dominates = false;
            if (mu(x) > pl(x) + 1e-12) dominated = false;
            if (x == m.full()) break;
        }
        CHECK(dominates == dominated);
    }
}

TEST_CASE("credal sets validate their generators") {
    CHECK_THROWS_AS(CredalSet({}), pdx::Error);
    const ProbabilityMeasure a(pdxtest::make_states(2), {0.5, 0.5});
    const ProbabilityMeasure b(pdxtest::make_states(3), {0.5, 0.5, 0.0});
    CHECK_THROWS_AS(CredalSet({a, b}), pdx::Error);
}

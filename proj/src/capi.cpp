#include "pdx/pdx.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "pdx/common.hpp"
#include "pdx/conditioning.hpp"
#include "pdx/credal.hpp"
#include "pdx/formula.hpp"
#include "pdx/model_io.hpp"
#include "pdx/models.hpp"

using nlohmann::ordered_json;

struct pdx_model {
    pdx::ModelBundle bundle;
};

namespace {

constexpr const char* kVersion = "1.0.0";

// Certification tolerance of the oracle report (independent of the
// comparison epsilon, which gates definedness).
constexpr double kOracleTolerance = 1e-9;

thread_local std::string t_last_error = "no error";

void set_last_error(const std::string& message) {
    t_last_error = message;
}

pdx_status status_of(pdx::ErrorCode code) {
    switch (code) {
        case pdx::ErrorCode::Parse: return PDX_ERR_PARSE;
        case pdx::ErrorCode::UndefinedUpdate: return PDX_ERR_UNDEFINED;
        case pdx::ErrorCode::TotalConflict: return PDX_ERR_CONFLICT;
        case pdx::ErrorCode::Domain: return PDX_ERR_DOMAIN;
    }
    return PDX_ERR_DOMAIN;
}

template <typename Fn>
pdx_status guarded(Fn&& fn) noexcept {
    try {
        fn();
        return PDX_OK;
    } catch (const pdx::Error& e) {
        set_last_error(e.what());
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        set_last_error("out of memory");
        return PDX_ERR_NOMEM;
    } catch (const std::exception& e) {
        set_last_error(e.what());
        return PDX_ERR_DOMAIN;
    } catch (...) {
        set_last_error("unknown error");
        return PDX_ERR_DOMAIN;
    }
}

char* copy_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

void require(bool condition, const char* message) {
    if (!condition) throw pdx::Error(pdx::ErrorCode::Domain, message);
}

ordered_json set_names(pdx::StateSet x, const std::vector<std::string>& universe) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < universe.size(); ++i) {
        if (x & (pdx::StateSet{1} << i)) arr.push_back(universe[i]);
    }
    return arr;
}

ordered_json axiom_report_json(const char* target, const pdx::AxiomReport& report,
                               const std::vector<std::string>& universe, int kmax) {
    ordered_json j;
    j["target"] = target;
    j["kmax"] = kmax;
    j["pass"] = report.pass;
    if (!report.pass) {
        j["violation"] = report.violation;
        ordered_json witness = ordered_json::array();
        for (const pdx::StateSet x : report.witness) witness.push_back(set_names(x, universe));
        j["witness"] = std::move(witness);
        j["lhs"] = report.lhs;
        j["rhs"] = report.rhs;
    }
    return j;
}

// Conditioning certification against the permutation-measure oracle: the
// closed forms must coincide with the envelopes of the Bayes-updated
// extreme points, and sampled interior measures must stay inside the
// [Bel_B, Pl_B] band after updating.
ordered_json certify_pair(const pdx::BeliefFunction& bel, pdx::StateSet b, int samples,
                          uint64_t seed) {
    const std::size_t n = bel.size();
    const pdx::StateSet full = pdx::full_set(n);
    const pdx::PlausibilityFunction pl = pdx::plausibility_from_belief(bel);
    const pdx::CredalSet extremes = pdx::extreme_points(bel);

    double env_bel_dev = 0.0, env_pl_dev = 0.0;
    for (pdx::StateSet x = 0; x <= full; ++x) {
        env_bel_dev = std::max(env_bel_dev, std::abs(pdx::lower_envelope(extremes, x) - bel(x)));
        env_pl_dev = std::max(env_pl_dev, std::abs(pdx::upper_envelope(extremes, x) - pl(x)));
        if (x == full) break;
    }

    const pdx::BeliefFunction bel_b = pdx::condition_bel_lower(bel, b);
    const pdx::PlausibilityFunction pl_b = pdx::condition_pl_lower(pl, b);
    const pdx::CredalSet conditioned = pdx::update_credal(extremes, b);

    double cond_bel_dev = 0.0, cond_pl_dev = 0.0;
    for (pdx::StateSet x = 0; x <= full; ++x) {
        cond_bel_dev =
            std::max(cond_bel_dev, std::abs(pdx::lower_envelope(conditioned, x) - bel_b(x)));
        cond_pl_dev =
            std::max(cond_pl_dev, std::abs(pdx::upper_envelope(conditioned, x) - pl_b(x)));
        if (x == full) break;
    }

    double undercut = 0.0, overshoot = 0.0;
    int used = 0;
    if (samples > 0) {
        const pdx::CredalSet sampled = pdx::sample_credal(bel, samples, seed);
        for (const auto& mu : sampled.generators()) {
            if (!(mu(b) > pdx::epsilon())) continue;
            const pdx::ProbabilityMeasure mu_b = pdx::bayes_update_measure(mu, b);
            ++used;
            for (pdx::StateSet x = 0; x <= full; ++x) {
                undercut = std::max(undercut, bel_b(x) - mu_b(x));
                overshoot = std::max(overshoot, mu_b(x) - pl_b(x));
                if (x == full) break;
            }
        }
    }

    const double worst = std::max({env_bel_dev, env_pl_dev, cond_bel_dev, cond_pl_dev, undercut,
                                   overshoot});
    ordered_json j;
    j["generators"] = extremes.size();
    j["conditioned_generators"] = conditioned.size();
    j["envelope"] = {{"bel_max_dev", env_bel_dev}, {"pl_max_dev", env_pl_dev}};
    j["conditioned"] = {{"bel_max_dev", cond_bel_dev}, {"pl_max_dev", cond_pl_dev}};
    j["samples"] = {{"requested", samples},
                    {"used", used},
                    {"max_undercut", undercut},
                    {"max_overshoot", overshoot}};
    j["max_abs_deviation"] = worst;
    j["pass"] = worst <= kOracleTolerance;
    return j;
}

} // namespace

extern "C" {

const char* pdx_version(void) {
    return kVersion;
}

const char* pdx_last_error(void) {
    return t_last_error.c_str();
}

double pdx_epsilon(void) {
    return pdx::epsilon();
}

pdx_status pdx_set_epsilon(double eps) {
    return guarded([&] { pdx::set_epsilon(eps); });
}

void pdx_string_free(char* text) {
    std::free(text);
}

pdx_status pdx_model_from_json(const char* json_text, pdx_model** out_model) {
    return guarded([&] {
        require(json_text && out_model, "null argument");
        auto bundle = pdx::load_model_json(json_text);
        *out_model = new pdx_model{std::move(bundle)};
    });
}

pdx_status pdx_model_from_file(const char* path, pdx_model** out_model) {
    return guarded([&] {
        require(path && out_model, "null argument");
        auto bundle = pdx::load_model_file(path);
        *out_model = new pdx_model{std::move(bundle)};
    });
}

pdx_status pdx_model_to_json(const pdx_model* model, char** out_json) {
    return guarded([&] {
        require(model && out_json, "null argument");
        *out_json = copy_string(pdx::model_to_json(model->bundle).dump());
    });
}

void pdx_model_free(pdx_model* model) {
    delete model;
}

size_t pdx_model_state_count(const pdx_model* model) {
    return model ? model->bundle.bd.size() : 0;
}

const char* pdx_model_state_name(const pdx_model* model, size_t index) {
    if (!model || index >= model->bundle.bd.size()) return nullptr;
    return model->bundle.bd.states()[index].c_str();
}

int pdx_model_has_bel(const pdx_model* model) {
    return model && model->bundle.mass ? 1 : 0;
}

int pdx_model_has_pl(const pdx_model* model) {
    return model && model->bundle.pl ? 1 : 0;
}

int pdx_model_has_mu(const pdx_model* model) {
    return model && model->bundle.mu ? 1 : 0;
}

pdx_status pdx_formula_canonical(const char* formula, char** out_text) {
    return guarded([&] {
        require(formula && out_text, "null argument");
        *out_text = copy_string(pdx::parse_formula(formula).to_string());
    });
}

pdx_status pdx_formula_equivalent(const char* lhs, const char* rhs, int* out_equivalent) {
    return guarded([&] {
        require(lhs && rhs && out_equivalent, "null argument");
        *out_equivalent = pdx::equivalent(pdx::parse_formula(lhs), pdx::parse_formula(rhs)) ? 1 : 0;
    });
}

pdx_status pdx_eval4(const pdx_model* model, const char* formula, const char* state,
                     char* out_value) {
    return guarded([&] {
        require(model && formula && state && out_value, "null argument");
        const pdx::FourValue v =
            pdx::eval4(model->bundle.bd, state, pdx::parse_formula(formula));
        *out_value = pdx::four_value_letter(v);
    });
}

pdx_status pdx_extensions(const pdx_model* model, const char* formula, uint64_t* out_positive,
                          uint64_t* out_negative) {
    return guarded([&] {
        require(model && formula && out_positive && out_negative, "null argument");
        const pdx::Extensions e =
            pdx::extensions(model->bundle.bd, pdx::parse_formula(formula));
        *out_positive = e.positive;
        *out_negative = e.negative;
    });
}

pdx_status pdx_bel(const pdx_model* model, const char* formula, double* out_pos,
                   double* out_neg) {
    return guarded([&] {
        require(model && formula && out_pos && out_neg, "null argument");
        const pdx::BeliefFunction bel = model->bundle.belief();
        const pdx::Extensions e =
            pdx::extensions(model->bundle.bd, pdx::parse_formula(formula));
        *out_pos = bel(e.positive);
        *out_neg = bel(e.negative);
    });
}

pdx_status pdx_pl(const pdx_model* model, const char* formula, double* out_pos,
                  double* out_neg) {
    return guarded([&] {
        require(model && formula && out_pos && out_neg, "null argument");
        const pdx::PlausibilityFunction pl =
            model->bundle.pl ? *model->bundle.pl
                             : pdx::plausibility_from_belief(model->bundle.belief());
        const pdx::Extensions e =
            pdx::extensions(model->bundle.bd, pdx::parse_formula(formula));
        *out_pos = pl(e.positive);
        *out_neg = pl(e.negative);
    });
}

pdx_status pdx_prob(const pdx_model* model, const char* formula, double* out_prob) {
    return guarded([&] {
        require(model && formula && out_prob, "null argument");
        const pdx::ProbabilisticBDModel m = model->bundle.probabilistic();
        *out_prob = pdx::prob(m, pdx::parse_formula(formula));
    });
}

pdx_status pdx_update(const pdx_model* model, const char* formula, pdx_method method,
                      pdx_model** out_model) {
    return guarded([&] {
        require(model && formula && out_model, "null argument");
        require(method == PDX_METHOD_LOWER_UPPER || method == PDX_METHOD_DS,
                "unknown conditioning method");
        const pdx::ConditioningMethod m = method == PDX_METHOD_DS
                                              ? pdx::ConditioningMethod::DS
                                              : pdx::ConditioningMethod::LowerUpper;
        const pdx::Formula f = pdx::parse_formula(formula);
        const pdx::ModelBundle& in = model->bundle;
        const pdx::StateSet b = pdx::positive_extension(in.bd, f);

        pdx::ModelBundle out{in.bd, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
        if (in.pl) {
            const pdx::DSplModel updated = pdx::update(in.ds_pl_model(), f, m);
            out.mass = pdx::mass_from_belief(updated.bel());
            out.pl = updated.pl();
        } else {
            const pdx::DSModel updated = pdx::update(in.ds_model(), f, m);
            out.mass = pdx::mass_from_belief(updated.bel());
        }
        if (in.mu) {
            out.mu = pdx::bayes_update_measure(*in.mu, b);
        }
        *out_model = new pdx_model{std::move(out)};
    });
}

pdx_status pdx_combine(const pdx_model* first, const pdx_model* second, pdx_model** out_model) {
    return guarded([&] {
        require(first && second && out_model, "null argument");
        require(first->bundle.mass.has_value() && second->bundle.mass.has_value(),
                "combine needs a mass in both models");
        pdx::MassFunction combined =
            pdx::ds_combine(*first->bundle.mass, *second->bundle.mass);
        pdx::ModelBundle out{first->bundle.bd, std::move(combined), std::nullopt, std::nullopt,
                             std::nullopt};
        *out_model = new pdx_model{std::move(out)};
    });
}

pdx_status pdx_check_report(const pdx_model* model, int kmax, char** out_json) {
    return guarded([&] {
        require(model && out_json, "null argument");
        const pdx::ModelBundle& bundle = model->bundle;
        const auto& universe = bundle.bd.states();

        ordered_json reports = ordered_json::array();
        bool pass = true;
        if (bundle.mass) {
            const pdx::BeliefFunction bel = bundle.belief();
            const pdx::AxiomReport r = pdx::check_belief_axioms(bel, kmax);
            pass = pass && r.pass;
            reports.push_back(axiom_report_json("bel", r, universe, kmax));
        }
        if (bundle.pl) {
            const pdx::AxiomReport r = pdx::check_plausibility_axioms(*bundle.pl, kmax);
            pass = pass && r.pass;
            reports.push_back(axiom_report_json("pl", r, universe, kmax));
        }
        if (bundle.mu) {
            double total = 0.0;
            double least = 0.0;
            for (std::size_t i = 0; i < bundle.mu->size(); ++i) {
                total += bundle.mu->point(i);
                least = std::min(least, bundle.mu->point(i));
            }
            const bool ok = std::abs(total - 1.0) <= pdx::epsilon() && least >= -pdx::epsilon();
            pass = pass && ok;
            ordered_json r;
            r["target"] = "mu";
            r["pass"] = ok;
            r["sum"] = total;
            reports.push_back(std::move(r));
        }

        ordered_json j;
        j["format"] = 1;
        j["epsilon"] = pdx::epsilon();
        j["reports"] = std::move(reports);
        j["pass"] = pass;
        *out_json = copy_string(j.dump());
    });
}

pdx_status pdx_oracle_report(const pdx_model* model, const char* formula, int samples,
                             uint64_t seed, char** out_json) {
    return guarded([&] {
        require(model && formula && out_json, "null argument");
        require(samples >= 0, "sample count must be nonnegative");
        const pdx::ModelBundle& bundle = model->bundle;
        const pdx::Formula f = pdx::parse_formula(formula);
        const pdx::StateSet b = pdx::positive_extension(bundle.bd, f);

        ordered_json j;
        j["format"] = 1;
        j["on"] = f.to_string();
        j["b"] = set_names(b, bundle.bd.states());
        j["tolerance"] = kOracleTolerance;
        j["seed"] = seed;

        bool pass = true;
        const pdx::BeliefFunction bel = bundle.belief();
        ordered_json bel_side = certify_pair(bel, b, samples, seed);
        pass = pass && bel_side["pass"].get<bool>();
        j["bel"] = std::move(bel_side);

        if (bundle.pl) {
            // The independent plausibility is certified through the credal
            // set of its associated belief.
            ordered_json pl_side =
                certify_pair(pdx::belief_from_plausibility(*bundle.pl), b, samples, seed + 1);
            pass = pass && pl_side["pass"].get<bool>();

            // Whether Bel <= Pl survives the two independent updates is
            // reported, not enforced.
            const pdx::BeliefFunction bel_b = pdx::condition_bel_lower(bel, b);
            const pdx::PlausibilityFunction pl_b = pdx::condition_pl_lower(*bundle.pl, b);
            double worst = 0.0;
            const pdx::StateSet full = pdx::full_set(bundle.bd.size());
            for (pdx::StateSet x = 0; x <= full; ++x) {
                worst = std::max(worst, bel_b(x) - pl_b(x));
                if (x == full) break;
            }
            pl_side["consistency_after_update"] = {{"max_bel_minus_pl", std::max(worst, 0.0)},
                                                   {"bel_below_pl", worst <= kOracleTolerance}};
            j["independent_pl"] = std::move(pl_side);
        }
        j["pass"] = pass;
        *out_json = copy_string(j.dump());
    });
}

} // extern "C"

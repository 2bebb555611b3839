// pdx command line: load Belnap-Dunn models with belief/plausibility/
// probability components, evaluate formulas, update and combine evidence,
// and certify the closed-form conditioning against the credal oracle.
// JSON in, JSON out; errors are printed as {"error": {...}}.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pdx/pdx.h"

using nlohmann::ordered_json;

namespace {

struct ModelDeleter {
    void operator()(pdx_model* m) const { pdx_model_free(m); }
};
using ModelPtr = std::unique_ptr<pdx_model, ModelDeleter>;

struct StringDeleter {
    void operator()(char* s) const { pdx_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

int g_precision = 12;

// Rounds every float in the document to g_precision significant digits so
// the printed text honors --precision while staying valid JSON.
void round_numbers(ordered_json& j) {
    if (j.is_number_float()) {
        char buffer[64];
        std::snprintf(buffer, sizeof(buffer), "%.*g", g_precision, j.get<double>());
        j = std::strtod(buffer, nullptr);
    } else if (j.is_object() || j.is_array()) {
        for (auto& child : j) round_numbers(child);
    }
}

void emit(ordered_json j) {
    round_numbers(j);
    std::cout << j.dump() << "\n";
}

const char* error_kind(pdx_status status) {
    switch (status) {
        case PDX_ERR_PARSE: return "parse";
        case PDX_ERR_UNDEFINED: return "undefined_update";
        case PDX_ERR_CONFLICT: return "total_conflict";
        case PDX_ERR_DOMAIN: return "domain";
        case PDX_ERR_NOMEM: return "out_of_memory";
        default: return "unknown";
    }
}

int exit_code(pdx_status status) {
    switch (status) {
        case PDX_OK: return 0;
        case PDX_ERR_UNDEFINED: return 2;
        case PDX_ERR_CONFLICT: return 3;
        default: return 1;
    }
}

// Emits the error document and returns the command exit code.
int fail(pdx_status status) {
    emit(ordered_json{{"error",
                       {{"code", static_cast<int>(status)},
                        {"kind", error_kind(status)},
                        {"message", pdx_last_error()}}}});
    return exit_code(status);
}

int fail_message(const std::string& message) {
    emit(ordered_json{{"error", {{"code", 1}, {"kind", "parse"}, {"message", message}}}});
    return 1;
}

ModelPtr load_model(const std::string& path, pdx_status& status) {
    pdx_model* raw = nullptr;
    status = pdx_model_from_file(path.c_str(), &raw);
    return ModelPtr(raw);
}

ordered_json mask_to_names(const pdx_model* model, uint64_t mask) {
    ordered_json names = ordered_json::array();
    const size_t n = pdx_model_state_count(model);
    for (size_t i = 0; i < n; ++i) {
        if (mask & (uint64_t{1} << i)) names.push_back(pdx_model_state_name(model, i));
    }
    return names;
}

int write_or_print_model(const pdx_model* model, const std::string& output_path) {
    char* raw = nullptr;
    pdx_status status = pdx_model_to_json(model, &raw);
    if (status != PDX_OK) return fail(status);
    CString text(raw);
    ordered_json j = ordered_json::parse(text.get());
    round_numbers(j);
    if (output_path.empty()) {
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) return fail_message("cannot write output file: " + output_path);
    out << j.dump() << "\n";
    out.close();
    emit(ordered_json{{"ok", true}, {"output", output_path}});
    return 0;
}

int run_eval(const std::string& model_path, const std::string& formula, const std::string& state) {
    pdx_status status;
    ModelPtr model = load_model(model_path, status);
    if (status != PDX_OK) return fail(status);
    if (!state.empty()) {
        char value = 0;
        status = pdx_eval4(model.get(), formula.c_str(), state.c_str(), &value);
        if (status != PDX_OK) return fail(status);
        emit(ordered_json{{"state", state}, {"value", std::string(1, value)}});
        return 0;
    }
    ordered_json values;
    const size_t n = pdx_model_state_count(model.get());
    for (size_t i = 0; i < n; ++i) {
        const char* name = pdx_model_state_name(model.get(), i);
        char value = 0;
        status = pdx_eval4(model.get(), formula.c_str(), name, &value);
        if (status != PDX_OK) return fail(status);
        values[name] = std::string(1, value);
    }
    emit(ordered_json{{"values", values}});
    return 0;
}

int run_ext(const std::string& model_path, const std::string& formula) {
    pdx_status status;
    ModelPtr model = load_model(model_path, status);
    if (status != PDX_OK) return fail(status);
    uint64_t positive = 0, negative = 0;
    status = pdx_extensions(model.get(), formula.c_str(), &positive, &negative);
    if (status != PDX_OK) return fail(status);
    emit(ordered_json{{"positive", mask_to_names(model.get(), positive)},
                      {"negative", mask_to_names(model.get(), negative)}});
    return 0;
}

int run_bel(const std::string& model_path, const std::string& formula) {
    pdx_status status;
    ModelPtr model = load_model(model_path, status);
    if (status != PDX_OK) return fail(status);
    double pos = 0, neg = 0;
    status = pdx_bel(model.get(), formula.c_str(), &pos, &neg);
    if (status != PDX_OK) return fail(status);
    emit(ordered_json{{"bel_pos", pos}, {"bel_neg", neg}});
    return 0;
}

int run_pl(const std::string& model_path, const std::string& formula) {
    pdx_status status;
    ModelPtr model = load_model(model_path, status);
    if (status != PDX_OK) return fail(status);
    double pos = 0, neg = 0;
    status = pdx_pl(model.get(), formula.c_str(), &pos, &neg);
    if (status != PDX_OK) return fail(status);
    emit(ordered_json{{"pl_pos", pos}, {"pl_neg", neg}});
    return 0;
}

int run_prob(const std::string& model_path, const std::string& formula) {
    pdx_status status;
    ModelPtr model = load_model(model_path, status);
    if (status != PDX_OK) return fail(status);
    double p = 0;
    status = pdx_prob(model.get(), formula.c_str(), &p);
    if (status != PDX_OK) return fail(status);
    emit(ordered_json{{"prob", p}});
    return 0;
}

int run_update(const std::string& model_path, const std::string& on, const std::string& method,
               const std::string& output_path) {
    pdx_status status;
    ModelPtr model = load_model(model_path, status);
    if (status != PDX_OK) return fail(status);
    pdx_method m;
    if (method == "lower") {
        m = PDX_METHOD_LOWER_UPPER;
    } else if (method == "ds") {
        m = PDX_METHOD_DS;
    } else {
        return fail_message("--method must be 'lower' or 'ds'");
    }
    pdx_model* raw = nullptr;
    status = pdx_update(model.get(), on.c_str(), m, &raw);
    if (status != PDX_OK) return fail(status);
    ModelPtr updated(raw);
    return write_or_print_model(updated.get(), output_path);
}

int run_combine(const std::string& first_path, const std::string& second_path,
                const std::string& output_path) {
    pdx_status status;
    ModelPtr first = load_model(first_path, status);
    if (status != PDX_OK) return fail(status);
    ModelPtr second = load_model(second_path, status);
    if (status != PDX_OK) return fail(status);
    pdx_model* raw = nullptr;
    status = pdx_combine(first.get(), second.get(), &raw);
    if (status != PDX_OK) return fail(status);
    ModelPtr combined(raw);
    return write_or_print_model(combined.get(), output_path);
}

int run_check(const std::string& model_path, int kmax) {
    pdx_status status;
    ModelPtr model = load_model(model_path, status);
    if (status != PDX_OK) return fail(status);
    char* raw = nullptr;
    status = pdx_check_report(model.get(), kmax, &raw);
    if (status != PDX_OK) return fail(status);
    CString report(raw);
    emit(ordered_json::parse(report.get()));
    return 0;
}

int run_oracle(const std::string& model_path, const std::string& on, int samples, uint64_t seed) {
    pdx_status status;
    ModelPtr model = load_model(model_path, status);
    if (status != PDX_OK) return fail(status);
    char* raw = nullptr;
    status = pdx_oracle_report(model.get(), on.c_str(), samples, seed, &raw);
    if (status != PDX_OK) return fail(status);
    CString report(raw);
    emit(ordered_json::parse(report.get()));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    // Accept the documented single-dash spellings for combine's two inputs.
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "-m1") arg = "--m1";
        if (arg == "-m2") arg = "--m2";
        args.push_back(std::move(arg));
    }

    CLI::App app{"belief and plausibility calculus over Belnap-Dunn models", "pdx"};
    app.require_subcommand(1);
    app.add_option("--precision", g_precision, "significant digits for printed numbers")
        ->default_val(12)
        ->check(CLI::Range(1, 17));

    std::string model_path, formula, state, on, method = "lower", output_path;
    std::string first_path, second_path;
    int kmax = 3;
    int samples = 200;
    uint64_t seed = 1;

    CLI::App* eval = app.add_subcommand("eval", "four-valued verdict of a formula");
    eval->add_option("-m,--model", model_path, "model file")->required();
    eval->add_option("-f,--formula", formula, "formula")->required();
    eval->add_option("-s,--state", state, "restrict to one state");

    CLI::App* ext = app.add_subcommand("ext", "positive and negative extensions");
    ext->add_option("-m,--model", model_path, "model file")->required();
    ext->add_option("-f,--formula", formula, "formula")->required();

    CLI::App* bel = app.add_subcommand("bel", "belief of a formula (positive and negative)");
    bel->add_option("-m,--model", model_path, "model file")->required();
    bel->add_option("-f,--formula", formula, "formula")->required();

    CLI::App* pl = app.add_subcommand("pl", "plausibility of a formula");
    pl->add_option("-m,--model", model_path, "model file")->required();
    pl->add_option("-f,--formula", formula, "formula")->required();

    CLI::App* prob = app.add_subcommand("prob", "probability of a formula");
    prob->add_option("-m,--model", model_path, "model file")->required();
    prob->add_option("-f,--formula", formula, "formula")->required();

    CLI::App* update = app.add_subcommand("update", "condition the model's measures on a formula");
    update->add_option("-m,--model", model_path, "model file")->required();
    update->add_option("--on", on, "formula carrying the new information")->required();
    update->add_option("--method", method, "conditioning method: lower | ds")->default_val("lower");
    update->add_option("-o,--output", output_path, "output model file (default: stdout)");

    CLI::App* combine = app.add_subcommand("combine", "Dempster-Shafer combination of two masses");
    combine->add_option("--m1", first_path, "first model file")->required();
    combine->add_option("--m2", second_path, "second model file")->required();
    combine->add_option("-o,--output", output_path, "output model file (default: stdout)");

    CLI::App* check = app.add_subcommand("check", "axiom reports for the measures present");
    check->add_option("-m,--model", model_path, "model file")->required();
    check->add_option("--kmax", kmax, "family size bound")->default_val(3)->check(CLI::Range(1, 6));

    CLI::App* oracle = app.add_subcommand("oracle", "certify conditioning against the credal oracle");
    oracle->add_option("-m,--model", model_path, "model file")->required();
    oracle->add_option("--on", on, "conditioning formula")->required();
    oracle->add_option("--samples", samples, "interior sample count")->default_val(200);
    oracle->add_option("--seed", seed, "sampling seed")->default_val(1);

    try {
        std::reverse(args.begin(), args.end()); // CLI11 parses right to left
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit(ordered_json{
            {"error", {{"code", 1}, {"kind", "usage"}, {"message", e.what()}}}});
        return 1;
    }

    if (const char* env = std::getenv("PDX_EPSILON")) {
        char* end = nullptr;
        const double eps = std::strtod(env, &end);
        if (end == env || *end != '\0' || pdx_set_epsilon(eps) != PDX_OK) {
            return fail_message("invalid PDX_EPSILON value: " + std::string(env));
        }
    }

    if (eval->parsed()) return run_eval(model_path, formula, state);
    if (ext->parsed()) return run_ext(model_path, formula);
    if (bel->parsed()) return run_bel(model_path, formula);
    if (pl->parsed()) return run_pl(model_path, formula);
    if (prob->parsed()) return run_prob(model_path, formula);
    if (update->parsed()) return run_update(model_path, on, method, output_path);
    if (combine->parsed()) return run_combine(first_path, second_path, output_path);
    if (check->parsed()) return run_check(model_path, kmax);
    if (oracle->parsed()) return run_oracle(model_path, on, samples, seed);
    return fail_message("no command");
}

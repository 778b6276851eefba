// lulab — command-line front end over the listlab C API.
//
// Subcommands: simulate, opt, ratio, analyze, lowerbound. JSON goes to
// stdout, diagnostics to stderr; exit code 2 flags usage or guard errors.

#include <listlab/listlab.h>

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

struct AlgorithmDeleter {
    void operator()(lu_algorithm* alg) const { lu_algorithm_free(alg); }
};
using AlgorithmHandle = std::unique_ptr<lu_algorithm, AlgorithmDeleter>;

[[noreturn]] void fail(lu_status status) {
    std::cerr << "error (" << lu_status_name(status) << "): " << lu_last_error() << "\n";
    std::exit(2);
}

AlgorithmHandle create_algorithm(const std::string& spec, int n_items,
                                 const std::optional<std::uint64_t>& seed) {
    std::string full = spec;
    if (seed) {
        if (spec != "bit") {
            std::cerr << "error: --seed applies only to --alg bit\n";
            std::exit(2);
        }
        full = "bit:seed=" + std::to_string(*seed);
    }
    lu_algorithm* raw = nullptr;
    if (lu_status status = lu_algorithm_create(full.c_str(), n_items, &raw)) fail(status);
    return AlgorithmHandle(raw);
}

void print_and_free(char* json) {
    std::cout << json << "\n";
    lu_string_free(json);
}

int state_item_count(const std::string& state) {
    int count = 0;
    if (lu_status status = lu_state_item_count(state.c_str(), &count)) fail(status);
    return count;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"list update laboratory"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::string alg_name;
    std::string initial;
    std::string sigma;
    std::optional<std::uint64_t> seed;
    bool trace = false;
    bool pairwise = false;
    bool force = false;
    int maxlen = 6;
    int depth = 4;
    int items = 3;
    int mhat = 3;
    int k_reps = 1;
    int t_scale = 1;
    long long b_const = 0;
    bool emit_table1 = false;
    std::string states_csv;

    auto* simulate = app.add_subcommand("simulate", "serve a request sequence");
    simulate->add_option("--alg", alg_name, "algorithm name")->required();
    simulate->add_option("--initial", initial, "initial state, e.g. [abc]")->required();
    simulate->add_option("--sigma", sigma, "request sequence; macros like x^3(yx)^2 expand");
    simulate->add_flag("--trace", trace, "emit every intermediate state");
    simulate->add_option("--seed", seed, "bit vector seed (turns bit into one atom)");

    auto* opt = app.add_subcommand("opt", "exact offline optimum");
    opt->add_option("--initial", initial, "initial state")->required();
    opt->add_option("--sigma", sigma, "request sequence");
    opt->add_flag("--pairwise", pairwise, "sum of two-item optima instead of the exact value");
    opt->add_flag("--force", force, "override the n <= 6 guard");

    auto* ratio = app.add_subcommand("ratio", "two-item competitiveness probe");
    ratio->add_option("--alg", alg_name, "algorithm name")->required();
    ratio->add_option("--maxlen", maxlen, "sequence length bound")->required();
    ratio->add_flag("--force", force, "override the maxlen <= 14 guard");
    ratio->add_option("--seed", seed, "bit vector seed");

    auto* analyze = app.add_subcommand("analyze", "projectivity and container structure");
    analyze->add_option("--alg", alg_name, "algorithm name")->required();
    analyze->add_option("--maxlen", maxlen, "projectivity check bound");
    analyze->add_option("--depth", depth, "container depth bound");
    analyze->add_option("--items", items, "alphabet size (>= 3)");
    analyze->add_option("--seed", seed, "bit vector seed");

    auto* lowerbound = app.add_subcommand("lowerbound", "two-item adversarial harness");
    lowerbound->add_option("--alg", alg_name, "algorithm name")->required();
    lowerbound->add_option("--mhat", mhat, "run length parameter (>= 3)");
    lowerbound->add_option("--K", k_reps, "block repetitions");
    lowerbound->add_option("--T", t_scale, "prefix spread multiplier");
    lowerbound->add_option("--b", b_const, "additive constant in the denominator");
    lowerbound->add_flag("--emit-table1", emit_table1, "include the per-offset cost table");
    lowerbound->add_option("--emit-states", states_csv, "write per-state costs as CSV");
    lowerbound->add_option("--seed", seed, "bit vector seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    char* json = nullptr;
    if (simulate->parsed()) {
        AlgorithmHandle alg = create_algorithm(alg_name, state_item_count(initial), seed);
        if (lu_status status = lu_simulate(alg.get(), initial.c_str(), sigma.c_str(),
                                           trace ? 1 : 0, &json)) {
            fail(status);
        }
    } else if (opt->parsed()) {
        if (lu_status status = lu_opt(initial.c_str(), sigma.c_str(), pairwise ? 1 : 0,
                                      force ? 1 : 0, &json)) {
            fail(status);
        }
    } else if (ratio->parsed()) {
        AlgorithmHandle alg = create_algorithm(alg_name, 2, seed);
        if (lu_status status = lu_ratio(alg.get(), maxlen, force ? 1 : 0, &json)) fail(status);
    } else if (analyze->parsed()) {
        AlgorithmHandle alg = create_algorithm(alg_name, items, seed);
        if (lu_status status = lu_analyze(alg.get(), depth, maxlen, &json)) fail(status);
    } else if (lowerbound->parsed()) {
        AlgorithmHandle alg = create_algorithm(alg_name, 2, seed);
        if (lu_status status = lu_lowerbound(alg.get(), mhat, k_reps, t_scale, b_const,
                                             emit_table1 ? 1 : 0,
                                             states_csv.empty() ? nullptr : states_csv.c_str(),
                                             &json)) {
            fail(status);
        }
    }
    print_and_free(json);
    return 0;
}

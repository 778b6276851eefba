#include "listlab/listlab.h"

#include "algorithms.hpp"
#include "core_model.hpp"
#include "reports.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

struct lu_algorithm {
    listlab::AlgorithmSpec spec;
};

namespace {

thread_local std::string g_last_error = "no error";

char* copy_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

template <typename Fn>
lu_status guarded(Fn&& fn) noexcept {
    try {
        fn();
        return LU_OK;
    } catch (const listlab::GuardError& e) {
        g_last_error = e.what();
        return LU_ERR_GUARD;
    } catch (const listlab::InputError& e) {
        g_last_error = e.what();
        return LU_ERR_INVALID;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return LU_ERR_NOMEM;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return LU_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return LU_ERR_INTERNAL;
    }
}

lu_status require(bool ok, const char* message) {
    if (ok) return LU_OK;
    g_last_error = message;
    return LU_ERR_INVALID;
}

}  // namespace

extern "C" {

const char* lu_status_name(lu_status status) {
    switch (status) {
        case LU_OK: return "ok";
        case LU_ERR_INVALID: return "invalid";
        case LU_ERR_GUARD: return "guard";
        case LU_ERR_NOMEM: return "nomem";
        case LU_ERR_INTERNAL: return "internal";
    }
    return "?";
}

const char* lu_last_error(void) { return g_last_error.c_str(); }

void lu_string_free(char* s) { std::free(s); }

lu_status lu_algorithm_create(const char* spec, int n_items, lu_algorithm** out) {
    if (lu_status s = require(spec && out, "spec and out must be non-NULL")) return s;
    return guarded([&] {
        *out = new lu_algorithm{listlab::AlgorithmSpec::parse(spec, n_items)};
    });
}

void lu_algorithm_free(lu_algorithm* alg) { delete alg; }

const char* lu_algorithm_name(const lu_algorithm* alg) {
    return alg ? alg->spec.text().c_str() : "";
}

int lu_algorithm_is_randomized(const lu_algorithm* alg) {
    return alg && alg->spec.randomized() ? 1 : 0;
}

lu_status lu_state_item_count(const char* state, int* out) {
    if (lu_status s = require(state && out, "state and out must be non-NULL")) return s;
    return guarded([&] {
        auto [alphabet, parsed] = listlab::parse_state(state);
        *out = parsed.size();
    });
}

lu_status lu_kendall_distance(const char* state_a, const char* state_b, long long* out) {
    if (lu_status s = require(state_a && state_b && out, "arguments must be non-NULL")) return s;
    return guarded([&] {
        auto [alphabet, a] = listlab::parse_state(state_a);
        listlab::ListState b = listlab::parse_state(state_b, alphabet);
        *out = listlab::kendall_distance(a, b);
    });
}

lu_status lu_access_cost(const char* state, const char* item, long long* out) {
    if (lu_status s = require(state && item && out, "arguments must be non-NULL")) return s;
    return guarded([&] {
        auto [alphabet, parsed] = listlab::parse_state(state);
        int id = alphabet.id_of(item);
        if (id < 0) throw listlab::InputError(std::string("item '") + item + "' is not in the state");
        *out = listlab::access_cost(parsed, static_cast<listlab::item_t>(id));
    });
}

lu_status lu_serve_cost(const lu_algorithm* alg, const char* initial, const char* sigma,
                        long long* out) {
    if (lu_status s = require(alg && initial && sigma && out, "arguments must be non-NULL")) return s;
    return guarded([&] {
        auto [alphabet, state] = listlab::parse_state(initial);
        listlab::RequestSequence requests = listlab::parse_sequence(sigma, alphabet);
        listlab::DeterministicAlgorithm algorithm = alg->spec.make_deterministic(state, alphabet);
        *out = listlab::serve_cost(algorithm, requests);
    });
}

lu_status lu_simulate(const lu_algorithm* alg, const char* initial, const char* sigma,
                      int with_trace, char** json_out) {
    if (lu_status s = require(alg && initial && sigma && json_out, "arguments must be non-NULL")) return s;
    return guarded([&] {
        *json_out = copy_string(
            listlab::simulate_report(alg->spec, initial, sigma, with_trace != 0).dump());
    });
}

lu_status lu_opt(const char* initial, const char* sigma, int pairwise, int force,
                 char** json_out) {
    if (lu_status s = require(initial && sigma && json_out, "arguments must be non-NULL")) return s;
    return guarded([&] {
        *json_out =
            copy_string(listlab::opt_report(initial, sigma, pairwise != 0, force != 0).dump());
    });
}

lu_status lu_ratio(const lu_algorithm* alg, int maxlen, int force, char** json_out) {
    if (lu_status s = require(alg && json_out, "arguments must be non-NULL")) return s;
    return guarded([&] {
        *json_out = copy_string(listlab::ratio_report(alg->spec, maxlen, force != 0).dump());
    });
}

lu_status lu_analyze(const lu_algorithm* alg, int depth, int maxlen, char** json_out) {
    if (lu_status s = require(alg && json_out, "arguments must be non-NULL")) return s;
    return guarded([&] {
        *json_out = copy_string(listlab::analyze_report(alg->spec, depth, maxlen).dump());
    });
}

lu_status lu_lowerbound(const lu_algorithm* alg, int m_hat, int k_reps, int t_scale, long long b,
                        int emit_table1, const char* states_csv_path, char** json_out) {
    if (lu_status s = require(alg && json_out, "arguments must be non-NULL")) return s;
    return guarded([&] {
        std::optional<std::string> csv_path;
        if (states_csv_path) csv_path = states_csv_path;
        *json_out = copy_string(listlab::lowerbound_report(alg->spec, m_hat, k_reps, t_scale, b,
                                                           emit_table1 != 0, csv_path)
                                    .dump());
    });
}

}  // extern "C"

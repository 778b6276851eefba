#include "reports.hpp"

#include "enumerate.hpp"
#include "lowerbound.hpp"
#include "offline_opt.hpp"
#include "projectivity.hpp"
#include "rational.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace listlab {

namespace {

using nlohmann::json;

json big_int_field(const BigInt& value) {
    if (value >= std::numeric_limits<std::int64_t>::min() &&
        value <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(value);
    }
    return value.str();
}

void add_rational_fields(json& out, const std::string& prefix, const Rational& value) {
    out[prefix + "_num"] = big_int_field(boost::multiprecision::numerator(value));
    out[prefix + "_den"] = big_int_field(boost::multiprecision::denominator(value));
    out[prefix + "_decimal"] = decimal_string(value);
}

ListState identity_initial(int n) { return ListState::identity(n); }

}  // namespace

AlgorithmSpec AlgorithmSpec::parse(const std::string& text, int n_items) {
    if (n_items < 2 || n_items > kMaxItems) {
        throw InputError("algorithm needs an alphabet of 2.." + std::to_string(kMaxItems) +
                         " items");
    }
    AlgorithmSpec spec;
    spec.text_ = text;
    spec.n_ = n_items;
    if (text == "mtf") {
        spec.kind_ = Kind::Mtf;
    } else if (text == "ts") {
        spec.kind_ = Kind::Ts;
    } else if (text == "transpose") {
        spec.kind_ = Kind::Transpose;
    } else if (text == "fc") {
        spec.kind_ = Kind::Fc;
    } else if (text == "lmtf") {
        spec.kind_ = Kind::Lmtf;
    } else if (text == "bit") {
        spec.kind_ = Kind::Bit;
    } else if (text == "comb") {
        spec.kind_ = Kind::Comb;
    } else if (text.starts_with("bit:seed=")) {
        spec.kind_ = Kind::BitSeeded;
        try {
            spec.seed_ = std::stoull(text.substr(9));
        } catch (const std::exception&) {
            throw InputError("bad seed in '" + text + "'");
        }
    } else if (text.starts_with("crf:")) {
        spec.kind_ = Kind::Crf;
        std::string path = text.substr(4);
        std::ifstream in(path);
        if (!in) throw InputError("cannot open crf table '" + path + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        spec.crf_csv_ = buffer.str();
    } else {
        throw InputError("unknown algorithm '" + text +
                         "' (expected mtf, ts, transpose, fc, lmtf, bit, comb, bit:seed=<u64>, "
                         "or crf:<file>)");
    }
    return spec;
}

bool AlgorithmSpec::randomized() const { return kind_ == Kind::Bit || kind_ == Kind::Comb; }

DeterministicAlgorithm AlgorithmSpec::make_deterministic(const ListState& initial,
                                                         const Alphabet& alphabet) const {
    if (initial.size() != n_ || alphabet.size() != n_) {
        throw InputError("algorithm was created for " + std::to_string(n_) + " items");
    }
    switch (kind_) {
        case Kind::Mtf: return make_mtf(initial);
        case Kind::Ts: return make_ts(initial);
        case Kind::Transpose: return make_transpose(initial);
        case Kind::Fc: return make_frequency_count(initial);
        case Kind::Lmtf: return make_lmtf(initial);
        case Kind::BitSeeded: return make_bit_seeded(seed_, initial);
        case Kind::Crf: {
            std::stringstream in(crf_csv_);
            return make_critical_request_algorithm(parse_crf_csv(in, alphabet, text_), initial);
        }
        case Kind::Bit:
        case Kind::Comb:
            throw InputError("'" + text_ +
                             "' is a distribution; use bit:seed=<u64> for one deterministic "
                             "atom");
    }
    throw InputError("unreachable algorithm kind");
}

RandomizedAlgorithm AlgorithmSpec::make_distribution(const ListState& initial,
                                                     const Alphabet& alphabet) const {
    switch (kind_) {
        case Kind::Bit: return make_bit_distribution(initial);
        case Kind::Comb: return make_comb(initial);
        default: return RandomizedAlgorithm::point_mass(make_deterministic(initial, alphabet));
    }
}

json simulate_report(const AlgorithmSpec& spec, const std::string& initial_text,
                     const std::string& sigma_text, bool with_trace) {
    auto [alphabet, initial] = parse_state(initial_text);
    RequestSequence sigma = parse_sequence(sigma_text, alphabet);
    DeterministicAlgorithm alg = spec.make_deterministic(initial, alphabet);
    ServeResult result = serve(alg, sigma, with_trace);
    json out;
    out["cost"] = result.cost;
    out["final"] = format_state(with_trace ? result.trace.back() : alg.state_after(sigma), alphabet);
    if (with_trace) {
        json states = json::array();
        for (const auto& state : result.trace) states.push_back(format_state(state, alphabet));
        out["states"] = states;
    }
    return out;
}

json opt_report(const std::string& initial_text, const std::string& sigma_text, bool pairwise,
                bool force) {
    auto [alphabet, initial] = parse_state(initial_text);
    RequestSequence sigma = parse_sequence(sigma_text, alphabet);
    json out;
    if (pairwise) {
        out["cost"] = opt_pairwise_lower(initial, sigma);
        out["method"] = "pairwise";
    } else {
        out["cost"] = opt_exact(initial, sigma, force);
        out["method"] = "exact";
    }
    return out;
}

json ratio_report(const AlgorithmSpec& spec, int maxlen, bool force) {
    if (spec.item_count() != 2) throw InputError("the ratio probe runs on two items");
    if (maxlen < 0) throw InputError("maxlen must be >= 0");
    if (maxlen > kRatioMaxlenGuard && !force) {
        throw GuardError("ratio guard: maxlen = " + std::to_string(maxlen) + " exceeds maxlen <= " +
                         std::to_string(kRatioMaxlenGuard) + " (2^(maxlen+1) sequences); force to override");
    }
    Alphabet alphabet(2);
    Rational best = 0;
    std::string argmax_sigma;
    std::string argmax_initial;
    bool any = false;
    bool unbounded = false;
    std::string unbounded_sigma;

    for (const ListState& initial : {ListState{0, 1}, ListState{1, 0}}) {
        RandomizedAlgorithm dist = spec.make_distribution(initial, alphabet);
        for (int length = 1; length <= maxlen; ++length) {
            for_each_sequence_of_length(2, length, [&](const std::vector<item_t>& digits) {
                RequestSequence sigma{std::vector<item_t>(digits)};
                long long opt = opt_two_items(initial, sigma);
                Rational cost = expected_cost(dist, sigma);
                if (opt == 0) {
                    if (cost > 0 && !unbounded) {
                        unbounded = true;
                        unbounded_sigma = format_sequence(sigma, alphabet);
                    }
                    return true;
                }
                Rational ratio = cost / Rational(opt);
                if (!any || ratio > best) {
                    any = true;
                    best = ratio;
                    argmax_sigma = format_sequence(sigma, alphabet);
                    argmax_initial = format_state(initial, alphabet);
                }
                return true;
            });
        }
    }

    json out;
    out["maxlen"] = maxlen;
    out["vacuous"] = !any;
    add_rational_fields(out, "sup_ratio", any ? best : Rational(0));
    if (any) {
        out["argmax_sigma"] = argmax_sigma;
        out["argmax_initial"] = argmax_initial;
    }
    if (unbounded) {
        out["unbounded"] = true;
        out["unbounded_sigma"] = unbounded_sigma;
    }
    return out;
}

json analyze_report(const AlgorithmSpec& spec, int depth, int maxlen) {
    const int n = spec.item_count();
    if (n < 3) throw InputError("analysis needs at least three items");
    if (spec.randomized()) {
        throw InputError("analysis runs on deterministic algorithms; analyze the atoms "
                         "(e.g. bit:seed=<u64>) instead");
    }
    Alphabet alphabet(n);
    ListState initial = identity_initial(n);
    DeterministicAlgorithm alg = spec.make_deterministic(initial, alphabet);

    json out;
    out["algorithm"] = spec.text();
    out["maxlen"] = maxlen;
    out["depth"] = depth;
    ProjectivityResult projectivity = check_projective(alg, maxlen);
    out["projective"] = projectivity.projective;
    if (!projectivity.projective) {
        json counterexample;
        counterexample["sigma"] = format_sequence(projectivity.counterexample->sigma, alphabet);
        counterexample["pair"] = alphabet.name(projectivity.counterexample->x) +
                                 alphabet.name(projectivity.counterexample->y);
        out["counterexample"] = counterexample;
        return out;
    }

    ContainerAnalysis analysis = build_containers(alg, depth);
    json containers = json::array();
    for (const Container& container : analysis.containers) {
        json entry;
        json members = json::array();
        for (const auto& member : container.members) {
            members.push_back(format_projection(member, alphabet));
        }
        entry["members"] = members;
        entry["class"] = container_class_name(container.cls);
        entry["order_index"] = container.order_index;
        if (!container.critical_index.empty()) {
            json critical;
            for (const auto& [member, value] : container.critical_index) {
                critical[format_projection(member, alphabet)] = value;
            }
            entry["F"] = critical;
        }
        containers.push_back(entry);
    }
    out["containers"] = containers;
    out["truncation_ties"] = analysis.truncation_ties;
    if (!analysis.diagnostics.empty()) out["diagnostics"] = analysis.diagnostics;
    return out;
}

json lowerbound_report(const AlgorithmSpec& spec, int m_hat, int k_reps, int t_scale, long long b,
                       bool emit_table1, const std::optional<std::string>& states_csv_path) {
    if (spec.item_count() != 2) throw InputError("the adversary harness runs on two items");
    AdversaryParams params{.m_hat = m_hat, .k_reps = k_reps, .t_scale = t_scale, .b = b};
    params.validate();
    Alphabet alphabet({"x", "y"});
    ListState initial = adversary_initial_state();
    RandomizedAlgorithm dist = spec.make_distribution(initial, alphabet);

    ExpectedRatio ratio = expected_ratio(dist, params);
    GoodStates good = good_states(params);

    json out;
    out["algorithm"] = spec.text();
    json params_json;
    params_json["mhat"] = params.m_hat;
    params_json["K"] = params.k_reps;
    params_json["T"] = params.t_scale;
    params_json["b"] = params.b;
    params_json["H"] = params.requests_per_item();
    out["params"] = params_json;
    add_rational_fields(out, "ratio", ratio.ratio);
    add_rational_fields(out, "cost_sum", ratio.cost_sum);
    out["opt_sum"] = ratio.opt_sum;
    out["good_states"] = good.states.size();
    out["good_states_formula_bound"] = good.formula_lower_bound;

    if (emit_table1) {
        json table = json::array();
        for (auto [fx, fy] : {std::pair<int, int>{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}}) {
            Table1Row row = table1_row(fx, fy, params.m_hat);
            json row_json;
            row_json["f_x"] = row.f_x;
            row_json["f_y"] = row.f_y;
            row_json["segments"] = row.segments;
            row_json["total"] = row.total;
            table.push_back(row_json);
        }
        out["table1"] = table;
    }

    if (states_csv_path) {
        // Weighted per-state expected costs; integers for point masses.
        std::map<StateCoordinate, Rational> combined;
        for (const auto& atom : dist.atoms()) {
            StateCostMap map = per_state_costs(atom.algorithm, params);
            for (const auto& [state, cost] : map.cost) {
                combined[state] += atom.weight * Rational(cost);
            }
        }
        std::ofstream csv(*states_csv_path);
        if (!csv) throw InputError("cannot write states csv '" + *states_csv_path + "'");
        csv << "i,j,good,cost_sum\n";
        for (const auto& [state, cost] : combined) {
            csv << state.i << ',' << state.j << ',' << (good.contains(state.i, state.j) ? 1 : 0)
                << ',';
            if (boost::multiprecision::denominator(cost) == 1) {
                csv << boost::multiprecision::numerator(cost).str();
            } else {
                csv << boost::multiprecision::numerator(cost).str() << '/'
                    << boost::multiprecision::denominator(cost).str();
            }
            csv << '\n';
        }
        out["states_csv"] = *states_csv_path;
    }
    return out;
}

}  // namespace listlab

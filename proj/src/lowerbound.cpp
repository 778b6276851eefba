#include "lowerbound.hpp"

#include "offline_opt.hpp"
#include "projectivity.hpp"

#include <algorithm>

namespace listlab {

namespace {

RequestSequence repeat(item_t x, int count) {
    return RequestSequence(std::vector<item_t>(static_cast<std::size_t>(count), x));
}

}  // namespace

void AdversaryParams::validate() const {
    if (m_hat < 3) throw InputError("adversary needs m_hat >= 3");
    if (k_reps < 1 || t_scale < 1) throw InputError("adversary needs K >= 1 and T >= 1");
    if (b < 0) throw InputError("adversary additive constant must be >= 0");
    const long long h = requests_per_item();
    if (h * h * t_scale > 50'000'000ll) {
        throw GuardError("adversary family guard: H^2*T = " + std::to_string(h * h * t_scale) +
                         " sequences exceed the 5e7 cap");
    }
    if (h * h * t_scale * (2 * h * static_cast<long long>(k_reps) + 2 * h) > 2'000'000'000ll) {
        throw GuardError("adversary family guard: total request volume exceeds the 2e9 cap");
    }
}

std::array<RequestSequence, 8> phi_segments(int m_hat) {
    if (m_hat < 3) throw InputError("phi needs m_hat >= 3");
    const item_t x = kAdversaryX;
    const item_t y = kAdversaryY;
    auto block = [&](std::initializer_list<item_t> lead, item_t run_item) {
        RequestSequence seq{std::vector<item_t>(lead)};
        seq.append(repeat(run_item, m_hat));
        return seq;
    };
    return {
        block({}, x),        // x^M
        block({y}, x),       // yx^M
        block({}, y),        // y^M
        block({x}, y),       // xy^M
        block({}, x),        // x^M
        block({y, x, y}, x), // yxyx^M
        block({}, y),        // y^M
        block({x, y, x}, y), // xyxy^M
    };
}

RequestSequence build_phi(int m_hat) {
    RequestSequence phi;
    for (const auto& segment : phi_segments(m_hat)) phi.append(segment);
    return phi;
}

std::vector<RequestSequence> build_lambda(const AdversaryParams& params) {
    params.validate();
    const int h_max = params.requests_per_item();
    const int t_max = h_max * params.t_scale;
    RequestSequence phi = build_phi(params.m_hat);
    RequestSequence phi_k;
    for (int k = 0; k < params.k_reps; ++k) phi_k.append(phi);

    std::vector<RequestSequence> family;
    family.reserve(static_cast<std::size_t>(h_max) * static_cast<std::size_t>(t_max));
    for (int h = 0; h < h_max; ++h) {
        for (int t = 0; t < t_max; ++t) {
            RequestSequence lambda = repeat(kAdversaryX, params.m_hat + t);
            lambda.append(repeat(kAdversaryY, params.m_hat + h));
            lambda.append(phi_k);
            family.push_back(std::move(lambda));
        }
    }
    return family;
}

Rational lambda_weight(const AdversaryParams& params) {
    const long long h = params.requests_per_item();
    return Rational(1, BigInt(h * h * params.t_scale));
}

long long StateCostMap::at(int i, int j) const {
    auto it = cost.find(StateCoordinate{i, j});
    return it == cost.end() ? 0 : it->second;
}

StateCostMap per_state_costs(const DeterministicAlgorithm& alg, const AdversaryParams& params) {
    if (alg.item_count() != 2) throw InputError("state accounting expects a two-item algorithm");
    if (alg.initial() != adversary_initial_state()) {
        throw InputError("state accounting expects the initial state [yx]");
    }
    StateCostMap map;
    for (const RequestSequence& lambda : build_lambda(params)) {
        auto run = alg.run();
        ListState previous = run->state();
        int i = 0;
        int j = 0;
        for (int t = 0; t < lambda.size(); ++t) {
            item_t z = lambda.at(t);
            run->serve(z);
            const ListState& next = run->state();
            long long cost = kendall_distance(previous, next) + access_cost(next, z);
            map.cost[StateCoordinate{i, j}] += cost;
            map.total += cost;
            previous = next;
            (z == kAdversaryX ? i : j) += 1;
        }
    }
    return map;
}

GoodStates good_states(const AdversaryParams& params) {
    params.validate();
    const int h_cap = params.requests_per_item();
    const int t_cap = h_cap * params.t_scale;
    const int prefix_count = 2 * h_cap;  // proper prefixes of phi

    RequestSequence phi = build_phi(params.m_hat);
    std::vector<int> phi_x(static_cast<std::size_t>(prefix_count));
    std::vector<int> phi_y(static_cast<std::size_t>(prefix_count));
    int cx = 0;
    int cy = 0;
    for (int p = 0; p < prefix_count; ++p) {
        phi_x[static_cast<std::size_t>(p)] = cx;
        phi_y[static_cast<std::size_t>(p)] = cy;
        (phi.at(p) == kAdversaryX ? cx : cy) += 1;
    }

    const int max_i = params.m_hat + (t_cap - 1) + (params.k_reps - 1) * h_cap + h_cap;
    const int max_j = params.m_hat + (h_cap - 1) + (params.k_reps - 1) * h_cap + h_cap;
    if (static_cast<long long>(max_i + 1) * (max_j + 1) > 100'000'000ll) {
        throw GuardError("good-state guard: the state grid needs more than 1e8 cells");
    }
    std::vector<int> counts(static_cast<std::size_t>(max_i + 1) * static_cast<std::size_t>(max_j + 1), 0);
    auto slot = [&](int i, int j) -> int& {
        return counts[static_cast<std::size_t>(i) * static_cast<std::size_t>(max_j + 1) +
                      static_cast<std::size_t>(j)];
    };

    for (int h = 0; h < h_cap; ++h) {
        for (int t = 0; t < t_cap; ++t) {
            for (int k = 0; k < params.k_reps; ++k) {
                for (int p = 0; p < prefix_count; ++p) {
                    int i = params.m_hat + t + k * h_cap + phi_x[static_cast<std::size_t>(p)];
                    int j = params.m_hat + h + k * h_cap + phi_y[static_cast<std::size_t>(p)];
                    ++slot(i, j);
                }
            }
        }
    }

    GoodStates result;
    for (int i = 0; i <= max_i; ++i) {
        for (int j = 0; j <= max_j; ++j) {
            if (slot(i, j) == prefix_count) result.states.push_back(StateCoordinate{i, j});
        }
    }
    const long long kh = static_cast<long long>(params.k_reps) * h_cap;
    const long long ht = static_cast<long long>(h_cap) * params.t_scale;
    result.formula_lower_bound = std::max(0ll, (kh - h_cap + 1) * (ht - 2 * h_cap + 1));
    return result;
}

bool GoodStates::contains(int i, int j) const {
    return std::binary_search(states.begin(), states.end(), StateCoordinate{i, j});
}

Table1Row table1_row(int f_x, int f_y, int m_hat) {
    if (m_hat < 3) throw InputError("table row needs m_hat >= 3");
    if (f_x < 0 || f_y < 0 || f_x >= m_hat || f_y >= m_hat) {
        throw InputError("table row needs 0 <= f_x, f_y < m_hat");
    }
    Table1Row row;
    row.f_x = f_x;
    row.f_y = f_y;

    // Request times per item, warmup x^M y^M included. With f frozen, the
    // critical request of x is its (f_x+1)-th most recent one.
    std::vector<long> times_x, times_y;
    long clock = 0;
    for (int i = 0; i < m_hat; ++i) times_x.push_back(clock++);
    for (int i = 0; i < m_hat; ++i) times_y.push_back(clock++);
    auto x_front = [&]() {
        long crit_x = times_x[times_x.size() - 1 - static_cast<std::size_t>(f_x)];
        long crit_y = times_y[times_y.size() - 1 - static_cast<std::size_t>(f_y)];
        return crit_x > crit_y;
    };

    const auto segments = phi_segments(m_hat);
    for (std::size_t s = 0; s < segments.size(); ++s) {
        std::string digits;
        for (int t = 0; t < segments[s].size(); ++t) {
            item_t z = segments[s].at(t);
            bool before = x_front();
            (z == kAdversaryX ? times_x : times_y).push_back(clock++);
            bool after = x_front();
            int cost = before != after ? 1 : 0;
            // Access is charged in the rearranged state.
            if (z == kAdversaryX ? !after : after) ++cost;
            digits += static_cast<char>('0' + cost);
            row.total += cost;
        }
        while (!digits.empty() && digits.back() == '0') digits.pop_back();
        row.segments[s] = digits;
    }
    return row;
}

ExpectedRatio expected_ratio(const RandomizedAlgorithm& alg, const AdversaryParams& params) {
    if (alg.item_count() != 2) throw InputError("expected ratio expects a two-item algorithm");
    for (const auto& atom : alg.atoms()) {
        if (atom.algorithm.initial() != adversary_initial_state()) {
            throw InputError("expected ratio expects atoms starting from [yx]");
        }
    }
    ExpectedRatio result;
    result.cost_sum = 0;
    const ListState initial = adversary_initial_state();
    for (const RequestSequence& lambda : build_lambda(params)) {
        result.cost_sum += expected_cost(alg, lambda);
        result.opt_sum += opt_two_items(initial, lambda) + params.b;
    }
    result.ratio = result.cost_sum / Rational(result.opt_sum);
    return result;
}

ProbeFamilies irregularity_probes(int x_limit, int y_limit, int m_hat, long long budget) {
    if (x_limit < 1 || y_limit < 1) throw InputError("probe limits must be >= 1");
    if (m_hat < 3) throw InputError("probes need m_hat >= 3");
    const long long grid = static_cast<long long>(x_limit) * y_limit;
    if (x_limit + y_limit + grid > budget) {
        throw GuardError("probe guard: X + Y + X*Y = " + std::to_string(x_limit + y_limit + grid) +
                         " probes exceed the budget of " + std::to_string(budget));
    }
    ProbeFamilies families;
    for (int i = 1; i <= x_limit; ++i) {
        RequestSequence probe = repeat(kAdversaryX, i);
        probe.append(repeat(kAdversaryY, y_limit));
        families.x_then_y.push_back(std::move(probe));
    }
    for (int j = 1; j <= y_limit; ++j) {
        RequestSequence probe = repeat(kAdversaryY, j);
        probe.append(repeat(kAdversaryX, x_limit));
        families.y_then_x.push_back(std::move(probe));
    }
    for (int i = 1; i <= x_limit; ++i) {
        for (int j = 1; j <= y_limit; ++j) {
            RequestSequence probe = repeat(kAdversaryX, i);
            probe.append(repeat(kAdversaryY, j));
            probe.append(repeat(kAdversaryX, m_hat));
            families.x_y_x_return.push_back(std::move(probe));
        }
    }
    return families;
}

std::vector<ProbeEvaluation> evaluate_probes(const RandomizedAlgorithm& alg,
                                             const std::vector<RequestSequence>& probes,
                                             const ListState& initial) {
    std::vector<ProbeEvaluation> evaluations;
    evaluations.reserve(probes.size());
    for (const RequestSequence& probe : probes) {
        ProbeEvaluation eval;
        eval.probe = probe;
        eval.expected = expected_cost(alg, probe);
        eval.opt = opt_two_items(initial, probe);
        evaluations.push_back(std::move(eval));
    }
    return evaluations;
}

const char* regularity_event_name(RegularityEvent event) {
    switch (event) {
        case RegularityEvent::Regular: return "regular";
        case RegularityEvent::ContainerBefore: return "container_before";
        case RegularityEvent::ContainerAfter: return "container_after";
        case RegularityEvent::ReversedContainer: return "reversed_container";
        case RegularityEvent::PairContainer: return "pair_container";
        case RegularityEvent::XIndexTooOld: return "x_index_too_old";
        case RegularityEvent::YIndexTooOld: return "y_index_too_old";
    }
    return "?";
}

std::vector<std::vector<RegularityEvent>> regularity_events(const DeterministicAlgorithm& alg,
                                                            int depth, int m_hat) {
    if (alg.item_count() < 3) throw InputError("event classification needs >= 3 items");
    ContainerAnalysis analysis = build_containers(alg, depth);
    auto container_of = [&](const UnaryProjection& u) -> const Container& {
        for (const auto& container : analysis.containers) {
            if (std::find(container.members.begin(), container.members.end(), u) !=
                container.members.end()) {
                return container;
            }
        }
        throw InputError("projection missing from the container analysis");
    };

    std::vector<std::vector<RegularityEvent>> events(
        static_cast<std::size_t>(depth),
        std::vector<RegularityEvent>(static_cast<std::size_t>(depth), RegularityEvent::Regular));
    for (int i = 1; i <= depth; ++i) {
        for (int j = 1; j <= depth; ++j) {
            const Container& cx = container_of(UnaryProjection{kAdversaryX, i});
            const Container& cy = container_of(UnaryProjection{kAdversaryY, j});
            RegularityEvent event = RegularityEvent::Regular;
            if (cx.order_index < cy.order_index) {
                event = RegularityEvent::ContainerBefore;
            } else if (cx.order_index > cy.order_index) {
                event = RegularityEvent::ContainerAfter;
            } else if (cx.cls == ContainerClass::WMinus) {
                event = RegularityEvent::ReversedContainer;
            } else if (cx.cls == ContainerClass::W2) {
                event = RegularityEvent::PairContainer;
            } else {
                int f_x = i - cx.critical_index.at(UnaryProjection{kAdversaryX, i});
                int f_y = j - cy.critical_index.at(UnaryProjection{kAdversaryY, j});
                if (f_x >= m_hat) {
                    event = RegularityEvent::XIndexTooOld;
                } else if (f_y >= m_hat) {
                    event = RegularityEvent::YIndexTooOld;
                }
            }
            events[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = event;
        }
    }
    return events;
}

}  // namespace listlab

#pragma once

#include "algorithms.hpp"
#include "core_model.hpp"
#include "rational.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace listlab {

// The two-item adversary works over x (item 0) and y (item 1), always
// starting from [yx].
constexpr item_t kAdversaryX = 0;
constexpr item_t kAdversaryY = 1;

inline ListState adversary_initial_state() { return ListState({kAdversaryY, kAdversaryX}); }

struct AdversaryParams {
    int m_hat = 3;  // >= 3, and larger than the regularity parameter under test
    int k_reps = 1;
    int t_scale = 1;
    long long b = 0;  // additive constant in the ratio denominator

    int requests_per_item() const { return 4 * m_hat + 4; }  // H
    void validate() const;
};

// The 8-segment block: x^M yx^M y^M xy^M x^M yxyx^M y^M xyxy^M.
RequestSequence build_phi(int m_hat);
std::array<RequestSequence, 8> phi_segments(int m_hat);

// The adversary family: x^(M+t) y^(M+h) phi^K for 0 <= h < H, 0 <= t < HT,
// uniform weight 1/(H^2 T) each. Ordered by (h, t).
std::vector<RequestSequence> build_lambda(const AdversaryParams& params);
Rational lambda_weight(const AdversaryParams& params);

// Count state: (i, j) = requests to x and y served so far.
struct StateCoordinate {
    int i = 0;
    int j = 0;
    auto operator<=>(const StateCoordinate&) const = default;
};

struct StateCostMap {
    std::map<StateCoordinate, long long> cost;  // sum over the family
    long long total = 0;

    long long at(int i, int j) const;
};

// Serves every family sequence and attributes each request's cost to the
// state it was served from.
StateCostMap per_state_costs(const DeterministicAlgorithm& alg, const AdversaryParams& params);

struct GoodStates {
    std::vector<StateCoordinate> states;  // sorted
    long long formula_lower_bound = 0;    // (KH-H+1)(HT-2H+1), clamped at 0

    bool contains(int i, int j) const;
};

// States reached by exactly one family sequence per proper prefix of phi
// (multiplicity exactly 2H).
GoodStates good_states(const AdversaryParams& params);

struct Table1Row {
    int f_x = 0;
    int f_y = 0;
    std::array<std::string, 8> segments;  // per-request cost digits, trailing zeros trimmed
    long long total = 0;
};

// Cost of serving phi's requests with relative critical indices frozen at
// (f_x, f_y), after an x^M y^M warmup. Requires f_x, f_y < M.
Table1Row table1_row(int f_x, int f_y, int m_hat);

struct ExpectedRatio {
    Rational ratio;
    Rational cost_sum;       // sum over the family of expected online cost
    long long opt_sum = 0;   // sum of (two-item OPT + b)
};

// Aggregate ratio sum A(lambda) / sum (OPT(lambda) + b) in exact rationals.
ExpectedRatio expected_ratio(const RandomizedAlgorithm& alg, const AdversaryParams& params);

struct ProbeFamilies {
    std::vector<RequestSequence> x_then_y;      // x^i y^Y,   1 <= i <= X
    std::vector<RequestSequence> y_then_x;      // y^j x^X,   1 <= j <= Y
    std::vector<RequestSequence> x_y_x_return;  // x^i y^j x^M, over the grid
};

// Probe sequences that expose irregular behavior: long runs that a
// competitive algorithm must serve almost for free.
ProbeFamilies irregularity_probes(int x_limit, int y_limit, int m_hat,
                                  long long budget = 200000);

struct ProbeEvaluation {
    RequestSequence probe;
    Rational expected;
    long long opt = 0;
};

std::vector<ProbeEvaluation> evaluate_probes(const RandomizedAlgorithm& alg,
                                             const std::vector<RequestSequence>& probes,
                                             const ListState& initial);

// Why a state (i, j) escapes the good-state cost bound for a given
// deterministic algorithm, judged from its container structure.
enum class RegularityEvent {
    Regular,
    ContainerBefore,   // C(x^i) < C(y^j)
    ContainerAfter,    // C(x^i) > C(y^j)
    ReversedContainer, // shared container in W-
    PairContainer,     // shared container in W2
    XIndexTooOld,      // f(x^i) >= M
    YIndexTooOld,      // f(y^j) >= M
};

const char* regularity_event_name(RegularityEvent event);

// Event per (i, j) with 1 <= i, j <= depth, for the pair (x, y) = (0, 1).
std::vector<std::vector<RegularityEvent>> regularity_events(const DeterministicAlgorithm& alg,
                                                            int depth, int m_hat);

}  // namespace listlab

#pragma once

// Test-side oracles, independent of the library implementations they check.

#include "algorithms.hpp"
#include "core_model.hpp"

#include <algorithm>
#include <vector>

namespace listlab::oracle {

// Pair-by-pair order comparison, no position arithmetic shared with
// kendall_distance.
inline long long kendall_by_pairs(const ListState& a, const ListState& b) {
    long long differing = 0;
    for (int i = 0; i < a.size(); ++i) {
        for (int j = i + 1; j < a.size(); ++j) {
            item_t u = a.at(i);
            item_t v = a.at(j);
            bool before_in_b = b.position_of(u) < b.position_of(v);
            if (!before_in_b) ++differing;
        }
    }
    return differing;
}

// Offline optimum by exhaustive search over every state trajectory.
// Exponential; usable only for tiny instances.
inline long long brute_force_opt(const ListState& initial, const RequestSequence& sigma) {
    const int n = initial.size();
    std::vector<item_t> base(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) base[static_cast<std::size_t>(i)] = static_cast<item_t>(i);
    std::vector<ListState> states;
    std::sort(base.begin(), base.end());
    do {
        states.emplace_back(std::vector<item_t>(base));
    } while (std::next_permutation(base.begin(), base.end()));

    long long best = -1;
    std::vector<std::size_t> choice(static_cast<std::size_t>(sigma.size()), 0);
    auto evaluate = [&]() {
        long long cost = 0;
        const ListState* previous = &initial;
        for (int t = 0; t < sigma.size(); ++t) {
            const ListState& next = states[choice[static_cast<std::size_t>(t)]];
            cost += kendall_by_pairs(*previous, next) + next.position_of(sigma.at(t));
            previous = &next;
        }
        return cost;
    };
    while (true) {
        long long cost = evaluate();
        if (best < 0 || cost < best) best = cost;
        int pos = sigma.size() - 1;
        while (pos >= 0 && choice[static_cast<std::size_t>(pos)] + 1 == states.size()) {
            choice[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++choice[static_cast<std::size_t>(pos)];
    }
    return best < 0 ? 0 : best;
}

// Move-to-front by direct list manipulation.
inline ListState direct_mtf_state(const ListState& initial, const RequestSequence& sigma) {
    std::vector<item_t> order(initial.order().begin(), initial.order().end());
    for (int t = 0; t < sigma.size(); ++t) {
        item_t x = sigma.at(t);
        auto it = std::find(order.begin(), order.end(), x);
        order.erase(it);
        order.insert(order.begin(), x);
    }
    return ListState(std::move(order));
}

// All sequences over 0..n-1 of exactly `length`, lexicographic.
template <typename Fn>
inline void every_sequence(int n, int length, Fn&& fn) {
    std::vector<item_t> digits(static_cast<std::size_t>(length), 0);
    while (true) {
        fn(RequestSequence{std::vector<item_t>(digits)});
        int pos = length - 1;
        while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == n - 1) {
            digits[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) return;
        ++digits[static_cast<std::size_t>(pos)];
    }
}

template <typename Fn>
inline void every_sequence_up_to(int n, int maxlen, Fn&& fn) {
    for (int length = 0; length <= maxlen; ++length) every_sequence(n, length, fn);
}

}  // namespace listlab::oracle

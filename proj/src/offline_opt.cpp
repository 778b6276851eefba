#include "offline_opt.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <mutex>

namespace listlab {

namespace {

struct PermutationSpace {
    std::vector<std::vector<item_t>> perms;
    std::vector<std::vector<std::uint16_t>> dist;      // Kendall distance matrix
    std::vector<std::vector<std::uint8_t>> positions;  // positions[p][item]

    explicit PermutationSpace(int n) {
        std::vector<item_t> base(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) base[static_cast<std::size_t>(i)] = static_cast<item_t>(i);
        do {
            perms.push_back(base);
        } while (std::next_permutation(base.begin(), base.end()));

        const std::size_t count = perms.size();
        positions.assign(count, std::vector<std::uint8_t>(static_cast<std::size_t>(n)));
        for (std::size_t p = 0; p < count; ++p) {
            for (int i = 0; i < n; ++i) positions[p][perms[p][static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
        }
        dist.assign(count, std::vector<std::uint16_t>(count));
        for (std::size_t p = 0; p < count; ++p) {
            for (std::size_t q = p; q < count; ++q) {
                int inversions = 0;
                for (int i = 0; i < n; ++i) {
                    for (int j = i + 1; j < n; ++j) {
                        item_t a = perms[p][static_cast<std::size_t>(i)];
                        item_t b = perms[p][static_cast<std::size_t>(j)];
                        if (positions[q][a] > positions[q][b]) ++inversions;
                    }
                }
                dist[p][q] = static_cast<std::uint16_t>(inversions);
                dist[q][p] = static_cast<std::uint16_t>(inversions);
            }
        }
    }

    std::size_t index_of(const ListState& state) const {
        auto it = std::lower_bound(perms.begin(), perms.end(),
                                   std::vector<item_t>(state.order().begin(), state.order().end()));
        return static_cast<std::size_t>(it - perms.begin());
    }
};

const PermutationSpace& permutation_space(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<PermutationSpace>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<PermutationSpace>(n);
    return *slot;
}

constexpr long long kInfinity = std::numeric_limits<long long>::max() / 4;

}  // namespace

long long opt_exact(const ListState& initial, const RequestSequence& sigma, bool force) {
    const int n = initial.size();
    if (!initial.is_permutation_of(n)) {
        throw InputError("opt_exact expects a state over items 0..n-1");
    }
    if (n > kOptExactItemGuard && !force) {
        throw GuardError("opt_exact guard: n = " + std::to_string(n) + " exceeds n <= " +
                         std::to_string(kOptExactItemGuard) +
                         "; consider opt_pairwise_lower or force");
    }
    if (n > 8) throw GuardError("opt_exact refuses n > 8 even when forced");
    for (int i = 0; i < sigma.size(); ++i) {
        if (sigma.at(i) >= n) throw InputError("request outside the alphabet");
    }

    const PermutationSpace& space = permutation_space(n);
    const std::size_t count = space.perms.size();
    std::vector<long long> cost(count, kInfinity);
    cost[space.index_of(initial)] = 0;
    std::vector<long long> next(count);
    for (int t = 0; t < sigma.size(); ++t) {
        item_t x = sigma.at(t);
        for (std::size_t q = 0; q < count; ++q) {
            long long best = kInfinity;
            for (std::size_t p = 0; p < count; ++p) {
                if (cost[p] >= kInfinity) continue;
                long long candidate = cost[p] + space.dist[p][q];
                if (candidate < best) best = candidate;
            }
            next[q] = best >= kInfinity ? kInfinity : best + space.positions[q][x];
        }
        cost.swap(next);
    }
    long long best = *std::min_element(cost.begin(), cost.end());
    if (best >= kInfinity) throw InputError("opt_exact: unreachable state space");
    return best;
}

long long opt_two_items(const ListState& initial, const RequestSequence& sigma) {
    if (initial.size() != 2) throw InputError("opt_two_items expects a two-item state");
    const item_t front = initial.at(0);
    const item_t back = initial.at(1);
    // cost_fb: front-item first; cost_bf: flipped.
    long long cost_fb = 0;
    long long cost_bf = 1;
    for (int t = 0; t < sigma.size(); ++t) {
        item_t x = sigma.at(t);
        if (x != front && x != back) throw InputError("opt_two_items: request outside the pair");
        long long stay_fb = std::min(cost_fb, cost_bf + 1);
        long long stay_bf = std::min(cost_bf, cost_fb + 1);
        cost_fb = stay_fb + (x == front ? 0 : 1);
        cost_bf = stay_bf + (x == back ? 0 : 1);
    }
    return std::min(cost_fb, cost_bf);
}

long long opt_pairwise_lower(const ListState& initial, const RequestSequence& sigma) {
    const int n = initial.size();
    long long total = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            item_t x = initial.at(i);
            item_t y = initial.at(j);
            total += opt_two_items(project_state(initial, x, y), project_sequence(sigma, x, y));
        }
    }
    return total;
}

}  // namespace listlab

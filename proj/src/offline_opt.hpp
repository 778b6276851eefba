#pragma once

#include "core_model.hpp"

namespace listlab {

constexpr int kOptExactItemGuard = 6;

// Exact offline optimum: dynamic program over all n! states per request,
// transition cost = Kendall distance, access charged in the new state.
// Guarded at n <= 6 unless forced.
long long opt_exact(const ListState& initial, const RequestSequence& sigma, bool force = false);

// Two-item specialization (two-state dynamic program). `initial` holds the
// two items; sigma must request only those.
long long opt_two_items(const ListState& initial, const RequestSequence& sigma);

// Sum over unordered pairs of the two-item optimum on the projected
// instance; a lower bound on opt_exact.
long long opt_pairwise_lower(const ListState& initial, const RequestSequence& sigma);

}  // namespace listlab

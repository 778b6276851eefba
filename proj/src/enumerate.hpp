#pragma once

#include "core_model.hpp"

#include <vector>

namespace listlab {

// All sequences of a given length over items 0..n-1, lexicographic.
// The callback returns false to stop the walk; the function reports
// whether it ran to completion.
template <typename Fn>
bool for_each_sequence_of_length(int n, int length, Fn&& fn) {
    std::vector<item_t> digits(static_cast<std::size_t>(length), 0);
    while (true) {
        if (!fn(digits)) return false;
        int pos = length - 1;
        while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == n - 1) {
            digits[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) return true;
        ++digits[static_cast<std::size_t>(pos)];
    }
}

}  // namespace listlab

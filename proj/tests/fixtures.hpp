#pragma once

// Shared test fixtures.

#include "algorithms.hpp"

#include <sstream>

namespace listlab::fixtures {

// Three-item critical-request table used across the suites, stored in the
// relative form f = i - F:
//   F(a^i), i=0..4: 0 1 0 2 2      f: 0 0 2 1 2
//   F(b^i):         0 0 2 2 4      f: 0 1 0 1 0
//   F(c^i):         0 1 2 2 2      f: 0 0 0 1 2
inline CriticalRequestFunction example_table_crf() {
    std::stringstream csv;
    csv << "a,1,0\na,2,2\na,3,1\na,4,2\na,*,0\n"
        << "b,1,1\nb,2,0\nb,3,1\nb,4,0\nb,*,0\n"
        << "c,1,0\nc,2,0\nc,3,1\nc,4,2\nc,*,0\n";
    return parse_crf_csv(csv, Alphabet(3), "example-table");
}

}  // namespace listlab::fixtures

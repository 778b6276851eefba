#pragma once

#include "algorithms.hpp"
#include "core_model.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace listlab {

constexpr long kInterleaveBudget = 1000000;  // per projection pair

struct ProjectivityCounterexample {
    RequestSequence sigma;
    item_t x = 0;
    item_t y = 0;
};

struct ProjectivityResult {
    bool projective = false;
    int maxlen = 0;
    std::optional<ProjectivityCounterexample> counterexample;
};

// Compares the pair order after sigma with the pair order after the
// projected sequence, for every pair and every sequence up to maxlen.
// A failure reports the shortest violating sequence, lexicographically
// first, with its lexicographically first pair.
ProjectivityResult check_projective(const DeterministicAlgorithm& alg, int maxlen);

// Projected cost of one pair: paid exchanges of the pair plus the accesses
// of x or y served behind the other. Summed over all pairs this equals the
// full serve cost.
long long pairwise_cost(const DeterministicAlgorithm& alg, const RequestSequence& sigma,
                        item_t x, item_t y);

// Whether both relative orders of x and y are realizable by interleavings
// of x^i with y^j.
bool is_agile(const DeterministicAlgorithm& alg, const UnaryProjection& a,
              const UnaryProjection& b, long budget = kInterleaveBudget);

// R(x^i): ordinals q such that swapping the qth request to x with an
// adjacent request to some y (j <= bound_j) flips the pair order.
std::set<int> agile_request_set(const DeterministicAlgorithm& alg, const UnaryProjection& node,
                                int bound_j, long budget = kInterleaveBudget);

// Directed graph on unary projections up to a depth bound; an arc
// (x^i, y^j) records an interleaving that leaves x in front of y.
struct ProjectionGraph {
    std::vector<UnaryProjection> nodes;
    std::vector<std::vector<bool>> arc;  // arc[u][v]

    int index_of(const UnaryProjection& u) const;
};

enum class ContainerClass { WPlus, WMinus, W2 };

const char* container_class_name(ContainerClass cls);

struct Container {
    std::vector<UnaryProjection> members;
    ContainerClass cls = ContainerClass::W2;
    int order_index = 0;
    std::map<UnaryProjection, int> critical_index;  // F, non-W2 containers only
};

struct ContainerAnalysis {
    int depth = 0;
    ProjectionGraph graph;
    std::vector<Container> containers;  // sorted by order_index
    std::vector<std::string> diagnostics;
    bool truncation_ties = false;  // order forced beyond the same-item count rule
};

// Strongly connected components of the projection graph, linearized into
// the total container order, classified W+/W-/W2, with critical indices
// extracted for non-W2 members. Non-projective inputs yield diagnostics
// instead of a silent classification.
ContainerAnalysis build_containers(const DeterministicAlgorithm& alg, int depth,
                                   long budget = kInterleaveBudget);

struct RegularityCounterexample {
    RequestSequence sigma;  // prefix before the x^M block
    item_t item = 0;
};

struct RegularityResult {
    bool pass = false;
    int m = 0;
    int maxlen = 0;
    std::optional<RegularityCounterexample> counterexample;
};

// Pass iff every item leads the list after sigma followed by M requests to
// it, for all sigma up to maxlen.
RegularityResult check_m_regular(const DeterministicAlgorithm& alg, int m, int maxlen);

}  // namespace listlab

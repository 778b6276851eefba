#include "projectivity.hpp"

#include "enumerate.hpp"

#include <algorithm>
#include <cstdint>

namespace listlab {

namespace {

long long binomial(int total, int pick) {
    long long result = 1;
    pick = std::min(pick, total - pick);
    for (int i = 1; i <= pick; ++i) {
        result = result * (total - pick + i) / i;
        if (result > (1ll << 62) / total) return 1ll << 62;
    }
    return result;
}

// All interleavings of count_x requests to x with count_y requests to y,
// lexicographic over item ids.
template <typename Fn>
void for_each_interleaving(item_t x, int count_x, item_t y, int count_y, Fn&& fn) {
    std::vector<item_t> seq;
    seq.insert(seq.end(), static_cast<std::size_t>(count_x), x);
    seq.insert(seq.end(), static_cast<std::size_t>(count_y), y);
    std::sort(seq.begin(), seq.end());
    do {
        fn(seq);
    } while (std::next_permutation(seq.begin(), seq.end()));
}

bool x_in_front(const ListState& state, item_t x, item_t y) {
    return state.position_of(x) < state.position_of(y);
}

ListState state_after_raw(const DeterministicAlgorithm& alg, std::span<const item_t> requests) {
    auto run = alg.run();
    for (item_t r : requests) run->serve(r);
    return run->state();
}

void check_interleave_budget(const UnaryProjection& a, const UnaryProjection& b, long budget) {
    if (binomial(a.count + b.count, a.count) > budget) {
        throw GuardError("interleaving guard: C(" + std::to_string(a.count + b.count) + "," +
                         std::to_string(a.count) + ") exceeds the budget of " +
                         std::to_string(budget));
    }
}

}  // namespace

ProjectivityResult check_projective(const DeterministicAlgorithm& alg, int maxlen) {
    const int n = alg.item_count();
    if (n < 3) throw InputError("projectivity needs at least three items");
    ProjectivityResult result;
    result.maxlen = maxlen;
    result.projective = true;
    for (int length = 0; length <= maxlen && result.projective; ++length) {
        for_each_sequence_of_length(n, length, [&](const std::vector<item_t>& digits) {
            RequestSequence sigma{std::vector<item_t>(digits)};
            ListState full = state_after_raw(alg, digits);
            for (item_t x = 0; x < n; ++x) {
                for (item_t y = static_cast<item_t>(x + 1); y < n; ++y) {
                    RequestSequence projected = project_sequence(sigma, x, y);
                    ListState via_projection = alg.state_after(projected);
                    if (x_in_front(full, x, y) != x_in_front(via_projection, x, y)) {
                        result.projective = false;
                        result.counterexample = ProjectivityCounterexample{sigma, x, y};
                        return false;
                    }
                }
            }
            return true;
        });
    }
    return result;
}

long long pairwise_cost(const DeterministicAlgorithm& alg, const RequestSequence& sigma,
                        item_t x, item_t y) {
    if (x == y) throw InputError("pairwise cost needs two distinct items");
    auto run = alg.run();
    bool front = x_in_front(run->state(), x, y);
    long long cost = 0;
    for (int t = 0; t < sigma.size(); ++t) {
        item_t z = sigma.at(t);
        run->serve(z);
        bool now = x_in_front(run->state(), x, y);
        if (now != front) ++cost;
        if ((z == x && !now) || (z == y && now)) ++cost;
        front = now;
    }
    return cost;
}

bool is_agile(const DeterministicAlgorithm& alg, const UnaryProjection& a,
              const UnaryProjection& b, long budget) {
    if (a.item == b.item) throw InputError("agility is defined for distinct items");
    check_interleave_budget(a, b, budget);
    bool seen_ab = false;
    bool seen_ba = false;
    for_each_interleaving(a.item, a.count, b.item, b.count, [&](const std::vector<item_t>& seq) {
        if (seen_ab && seen_ba) return;
        ListState state = state_after_raw(alg, seq);
        (x_in_front(state, a.item, b.item) ? seen_ab : seen_ba) = true;
    });
    return seen_ab && seen_ba;
}

std::set<int> agile_request_set(const DeterministicAlgorithm& alg, const UnaryProjection& node,
                                int bound_j, long budget) {
    const int n = alg.item_count();
    std::set<int> ordinals;
    for (item_t y = 0; y < n; ++y) {
        if (y == node.item) continue;
        for (int j = 0; j <= bound_j; ++j) {
            check_interleave_budget(node, UnaryProjection{y, j}, budget);
            for_each_interleaving(node.item, node.count, y, j, [&](const std::vector<item_t>& seq) {
                ListState base = state_after_raw(alg, seq);
                bool base_front = x_in_front(base, node.item, y);
                for (std::size_t p = 0; p + 1 < seq.size(); ++p) {
                    if (seq[p] == seq[p + 1]) continue;
                    std::vector<item_t> swapped = seq;
                    std::swap(swapped[p], swapped[p + 1]);
                    ListState state = state_after_raw(alg, swapped);
                    if (x_in_front(state, node.item, y) != base_front) {
                        std::size_t x_pos = seq[p] == node.item ? p : p + 1;
                        int ordinal = static_cast<int>(
                            std::count(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(x_pos) + 1,
                                       node.item));
                        ordinals.insert(ordinal);
                    }
                }
            });
        }
    }
    return ordinals;
}

int ProjectionGraph::index_of(const UnaryProjection& u) const {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i] == u) return static_cast<int>(i);
    }
    return -1;
}

const char* container_class_name(ContainerClass cls) {
    switch (cls) {
        case ContainerClass::WPlus: return "W+";
        case ContainerClass::WMinus: return "W-";
        case ContainerClass::W2: return "W2";
    }
    return "?";
}

namespace {

struct SccResult {
    std::vector<int> component;  // node -> component id
    int count = 0;
};

// Tarjan, iterative.
SccResult strongly_connected_components(const std::vector<std::vector<bool>>& arc) {
    const int n = static_cast<int>(arc.size());
    SccResult result;
    result.component.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> index(static_cast<std::size_t>(n), -1);
    std::vector<int> lowlink(static_cast<std::size_t>(n), 0);
    std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
    std::vector<int> stack;
    int next_index = 0;

    struct Frame {
        int node;
        int next_child;
    };
    for (int start = 0; start < n; ++start) {
        if (index[static_cast<std::size_t>(start)] >= 0) continue;
        std::vector<Frame> frames{{start, 0}};
        index[static_cast<std::size_t>(start)] = lowlink[static_cast<std::size_t>(start)] = next_index++;
        stack.push_back(start);
        on_stack[static_cast<std::size_t>(start)] = true;
        while (!frames.empty()) {
            Frame& frame = frames.back();
            int u = frame.node;
            if (frame.next_child < n) {
                int v = frame.next_child++;
                if (!arc[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) continue;
                if (index[static_cast<std::size_t>(v)] < 0) {
                    index[static_cast<std::size_t>(v)] = lowlink[static_cast<std::size_t>(v)] = next_index++;
                    stack.push_back(v);
                    on_stack[static_cast<std::size_t>(v)] = true;
                    frames.push_back(Frame{v, 0});
                } else if (on_stack[static_cast<std::size_t>(v)]) {
                    lowlink[static_cast<std::size_t>(u)] =
                        std::min(lowlink[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
                }
            } else {
                if (lowlink[static_cast<std::size_t>(u)] == index[static_cast<std::size_t>(u)]) {
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[static_cast<std::size_t>(w)] = false;
                        result.component[static_cast<std::size_t>(w)] = result.count;
                        if (w == u) break;
                    }
                    ++result.count;
                }
                frames.pop_back();
                if (!frames.empty()) {
                    int parent = frames.back().node;
                    lowlink[static_cast<std::size_t>(parent)] =
                        std::min(lowlink[static_cast<std::size_t>(parent)], lowlink[static_cast<std::size_t>(u)]);
                }
            }
        }
    }
    return result;
}

}  // namespace

ContainerAnalysis build_containers(const DeterministicAlgorithm& alg, int depth, long budget) {
    const int n = alg.item_count();
    if (depth < 0) throw InputError("container depth must be >= 0");
    ContainerAnalysis analysis;
    analysis.depth = depth;

    // Nodes: x^0 .. x^depth per item.
    ProjectionGraph& graph = analysis.graph;
    for (item_t x = 0; x < n; ++x) {
        for (int i = 0; i <= depth; ++i) graph.nodes.push_back(UnaryProjection{x, i});
    }
    const int node_count = static_cast<int>(graph.nodes.size());
    graph.arc.assign(static_cast<std::size_t>(node_count),
                     std::vector<bool>(static_cast<std::size_t>(node_count), false));

    for (int u = 0; u < node_count; ++u) {
        for (int v = u + 1; v < node_count; ++v) {
            const UnaryProjection& a = graph.nodes[static_cast<std::size_t>(u)];
            const UnaryProjection& b = graph.nodes[static_cast<std::size_t>(v)];
            if (a.item == b.item) continue;
            check_interleave_budget(a, b, budget);
            bool seen_ab = false;
            bool seen_ba = false;
            for_each_interleaving(a.item, a.count, b.item, b.count,
                                  [&](const std::vector<item_t>& seq) {
                                      if (seen_ab && seen_ba) return;
                                      ListState state = state_after_raw(alg, seq);
                                      (x_in_front(state, a.item, b.item) ? seen_ab : seen_ba) = true;
                                  });
            graph.arc[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = seen_ab;
            graph.arc[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = seen_ba;
            if (!seen_ab && !seen_ba) {
                analysis.diagnostics.push_back("no order recorded between two projections");
            }
        }
    }

    // Arc transitivity across distinct items; holds for projective inputs.
    for (int u = 0; u < node_count && analysis.diagnostics.size() < 8; ++u) {
        for (int v = 0; v < node_count; ++v) {
            if (!graph.arc[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) continue;
            for (int w = 0; w < node_count; ++w) {
                const UnaryProjection& nu = graph.nodes[static_cast<std::size_t>(u)];
                const UnaryProjection& nv = graph.nodes[static_cast<std::size_t>(v)];
                const UnaryProjection& nw = graph.nodes[static_cast<std::size_t>(w)];
                if (nu.item == nw.item || nv.item == nw.item) continue;
                if (graph.arc[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] &&
                    !graph.arc[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)]) {
                    analysis.diagnostics.push_back("arc transitivity violated; input is not projective");
                }
            }
        }
    }

    SccResult scc = strongly_connected_components(graph.arc);
    std::vector<Container> containers(static_cast<std::size_t>(scc.count));
    for (int u = 0; u < node_count; ++u) {
        containers[static_cast<std::size_t>(scc.component[static_cast<std::size_t>(u)])]
            .members.push_back(graph.nodes[static_cast<std::size_t>(u)]);
    }
    for (auto& container : containers) std::sort(container.members.begin(), container.members.end());

    // Reachability over the condensation.
    std::vector<std::vector<bool>> reach(static_cast<std::size_t>(scc.count),
                                         std::vector<bool>(static_cast<std::size_t>(scc.count), false));
    for (int u = 0; u < node_count; ++u) {
        for (int v = 0; v < node_count; ++v) {
            if (graph.arc[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
                reach[static_cast<std::size_t>(scc.component[static_cast<std::size_t>(u)])]
                     [static_cast<std::size_t>(scc.component[static_cast<std::size_t>(v)])] = true;
            }
        }
    }
    for (int k = 0; k < scc.count; ++k) {
        for (int i = 0; i < scc.count; ++i) {
            if (!reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) continue;
            for (int j = 0; j < scc.count; ++j) {
                if (reach[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) {
                    reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
                }
            }
        }
    }

    // Linearize: repeatedly emit the container with no unplaced predecessor,
    // smallest (item, count) first. Ties between same-item singletons follow
    // the stipulated count order; any other tie is a truncation artifact.
    std::vector<bool> placed(static_cast<std::size_t>(scc.count), false);
    std::vector<int> order;
    auto key_of = [&](int c) { return containers[static_cast<std::size_t>(c)].members.front(); };
    for (int step = 0; step < scc.count; ++step) {
        std::vector<int> available;
        for (int c = 0; c < scc.count; ++c) {
            if (placed[static_cast<std::size_t>(c)]) continue;
            bool ready = true;
            for (int p = 0; p < scc.count; ++p) {
                if (p != c && !placed[static_cast<std::size_t>(p)] &&
                    reach[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)]) {
                    ready = false;
                    break;
                }
            }
            if (ready) available.push_back(c);
        }
        int chosen = *std::min_element(available.begin(), available.end(),
                                       [&](int l, int r) { return key_of(l) < key_of(r); });
        for (int other : available) {
            if (other == chosen) continue;
            const auto& a = containers[static_cast<std::size_t>(chosen)].members;
            const auto& b = containers[static_cast<std::size_t>(other)].members;
            bool same_item_singletons = a.size() == 1 && b.size() == 1 && a[0].item == b[0].item;
            if (!same_item_singletons) analysis.truncation_ties = true;
        }
        placed[static_cast<std::size_t>(chosen)] = true;
        containers[static_cast<std::size_t>(chosen)].order_index = step;
        order.push_back(chosen);
    }

    // Classification and critical-index extraction.
    for (auto& container : containers) {
        std::set<item_t> items;
        for (const auto& m : container.members) items.insert(m.item);
        if (items.size() <= 2) {
            container.cls = ContainerClass::W2;
            continue;
        }
        bool extraction_ok = true;
        for (const auto& member : container.members) {
            std::set<int> ordinals;
            for (const auto& partner : container.members) {
                if (partner.item == member.item) continue;
                check_interleave_budget(member, partner, budget);
                for_each_interleaving(
                    member.item, member.count, partner.item, partner.count,
                    [&](const std::vector<item_t>& seq) {
                        ListState base = state_after_raw(alg, seq);
                        bool base_front = x_in_front(base, member.item, partner.item);
                        for (std::size_t p = 0; p + 1 < seq.size(); ++p) {
                            if (seq[p] == seq[p + 1]) continue;
                            std::vector<item_t> swapped = seq;
                            std::swap(swapped[p], swapped[p + 1]);
                            if (x_in_front(state_after_raw(alg, swapped), member.item,
                                           partner.item) != base_front) {
                                std::size_t x_pos = seq[p] == member.item ? p : p + 1;
                                ordinals.insert(static_cast<int>(std::count(
                                    seq.begin(),
                                    seq.begin() + static_cast<std::ptrdiff_t>(x_pos) + 1,
                                    member.item)));
                            }
                        }
                    });
            }
            if (ordinals.size() != 1) {
                analysis.diagnostics.push_back("critical index not unique inside a container; "
                                               "input is not projective");
                extraction_ok = false;
                break;
            }
            container.critical_index[member] = *ordinals.begin();
        }
        if (!extraction_ok) {
            container.cls = ContainerClass::WPlus;
            continue;
        }
        // Decide forward (W+) vs reversed (W-) time order, cross-checking
        // every member pair over every interleaving.
        bool all_forward = true;
        bool all_reverse = true;
        for (const auto& a : container.members) {
            for (const auto& b : container.members) {
                if (a.item >= b.item) continue;
                int fa = container.critical_index[a];
                int fb = container.critical_index[b];
                for_each_interleaving(a.item, a.count, b.item, b.count,
                                      [&](const std::vector<item_t>& seq) {
                                          int pos_a = -1, pos_b = -1, seen_a = 0, seen_b = 0;
                                          for (std::size_t p = 0; p < seq.size(); ++p) {
                                              if (seq[p] == a.item && ++seen_a == fa)
                                                  pos_a = static_cast<int>(p);
                                              if (seq[p] == b.item && ++seen_b == fb)
                                                  pos_b = static_cast<int>(p);
                                          }
                                          bool front =
                                              x_in_front(state_after_raw(alg, seq), a.item, b.item);
                                          if (front != (pos_a > pos_b)) all_forward = false;
                                          if (front != (pos_a < pos_b)) all_reverse = false;
                                      });
            }
        }
        if (all_forward && !all_reverse) {
            container.cls = ContainerClass::WPlus;
        } else if (all_reverse && !all_forward) {
            container.cls = ContainerClass::WMinus;
        } else {
            container.cls = ContainerClass::WPlus;
            analysis.diagnostics.push_back(
                "container mixes forward and reversed critical-request order");
        }
        // Members of one container must be pairwise agile across items.
        for (const auto& a : container.members) {
            for (const auto& b : container.members) {
                if (a.item >= b.item) continue;
                int u = graph.index_of(a);
                int v = graph.index_of(b);
                if (!graph.arc[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] ||
                    !graph.arc[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) {
                    analysis.diagnostics.push_back("container members are not mutually agile");
                }
            }
        }
    }

    analysis.containers.resize(containers.size());
    for (const auto& container : containers) {
        analysis.containers[static_cast<std::size_t>(container.order_index)] = container;
    }
    return analysis;
}

RegularityResult check_m_regular(const DeterministicAlgorithm& alg, int m, int maxlen) {
    if (m < 1) throw InputError("regularity parameter M must be positive");
    const int n = alg.item_count();
    RegularityResult result;
    result.pass = true;
    result.m = m;
    result.maxlen = maxlen;
    for (int length = 0; length <= maxlen && result.pass; ++length) {
        for_each_sequence_of_length(n, length, [&](const std::vector<item_t>& digits) {
            for (item_t x = 0; x < n; ++x) {
                auto run = alg.run();
                for (item_t r : digits) run->serve(r);
                for (int k = 0; k < m; ++k) run->serve(x);
                if (run->state().at(0) != x) {
                    result.pass = false;
                    result.counterexample =
                        RegularityCounterexample{RequestSequence{std::vector<item_t>(digits)}, x};
                    return false;
                }
            }
            return true;
        });
    }
    return result;
}

}  // namespace listlab

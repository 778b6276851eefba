#include "algorithms.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <random>
#include <sstream>

namespace listlab {

DeterministicAlgorithm::DeterministicAlgorithm(std::string name, ListState initial,
                                               RunFactory factory)
    : name_(std::move(name)), initial_(std::move(initial)), factory_(std::move(factory)) {
    if (initial_.size() < 2) throw InputError("algorithm needs at least two items");
}

ListState DeterministicAlgorithm::state_after(const RequestSequence& sigma) const {
    auto r = run();
    for (int i = 0; i < sigma.size(); ++i) r->serve(sigma.at(i));
    return r->state();
}

CriticalRequestFunction::CriticalRequestFunction(std::string name, RelFn f_rel)
    : name_(std::move(name)), f_rel_(std::move(f_rel)) {}

long CriticalRequestFunction::f(item_t x, long i) const {
    if (i == 0) return 0;
    long value = f_rel_(x, i);
    if (value < 0) throw InputError("relative critical index f(" + std::to_string(x) + "^" +
                                    std::to_string(i) + ") is negative");
    return value;
}

long CriticalRequestFunction::F(item_t x, long i) const {
    return std::max<long>(i - f(x, i), 0);
}

namespace {

// Shared by the one-shot evaluator and the incremental runner: rebuild the
// list from per-item critical times.
ListState order_by_critical_times(const ListState& initial, const std::vector<long>& crit_time) {
    const int n = initial.size();
    std::vector<item_t> front, back;
    for (int pos = 0; pos < n; ++pos) {
        item_t x = initial.at(pos);
        if (crit_time[x] >= 0)
            front.push_back(x);
        else
            back.push_back(x);
    }
    std::stable_sort(front.begin(), front.end(),
                     [&](item_t l, item_t r) { return crit_time[l] > crit_time[r]; });
    front.insert(front.end(), back.begin(), back.end());
    return ListState(std::move(front));
}

class CriticalRequestRun final : public AlgorithmRun {
public:
    CriticalRequestRun(CriticalRequestFunction crf, ListState initial)
        : crf_(std::move(crf)), initial_(std::move(initial)), state_(initial_), times_(256) {}

    void serve(item_t x) override {
        if (!initial_.contains(x)) throw InputError("request to item outside the list");
        times_[x].push_back(clock_++);
        std::vector<long> crit(256, -1);
        for (item_t y : initial_.order()) {
            long i = static_cast<long>(times_[y].size());
            long F = crf_.F(y, i);
            if (F > i) throw InputError("critical request function exceeds request count");
            if (F > 0) crit[y] = times_[y][static_cast<std::size_t>(F - 1)];
        }
        state_ = order_by_critical_times(initial_, crit);
    }

    const ListState& state() const override { return state_; }

private:
    CriticalRequestFunction crf_;
    ListState initial_;
    ListState state_;
    std::vector<std::vector<long>> times_;
    long clock_ = 0;
};

class TransposeRun final : public AlgorithmRun {
public:
    explicit TransposeRun(ListState initial) : state_(std::move(initial)) {}

    void serve(item_t x) override {
        int pos = state_.position_of(x);
        if (pos == 0) return;
        std::vector<item_t> order(state_.order().begin(), state_.order().end());
        std::swap(order[static_cast<std::size_t>(pos)], order[static_cast<std::size_t>(pos - 1)]);
        state_ = ListState(std::move(order));
    }

    const ListState& state() const override { return state_; }

private:
    ListState state_;
};

class FrequencyCountRun final : public AlgorithmRun {
public:
    explicit FrequencyCountRun(ListState initial)
        : initial_(std::move(initial)), state_(initial_), count_(256, 0), last_(256, -1) {}

    void serve(item_t x) override {
        if (!initial_.contains(x)) throw InputError("request to item outside the list");
        ++count_[x];
        last_[x] = clock_++;
        std::vector<item_t> order(initial_.order().begin(), initial_.order().end());
        std::vector<int> initial_pos(256, 0);
        for (int i = 0; i < initial_.size(); ++i) initial_pos[initial_.at(i)] = i;
        std::sort(order.begin(), order.end(), [&](item_t l, item_t r) {
            if (count_[l] != count_[r]) return count_[l] > count_[r];
            if (count_[l] == 0) return initial_pos[l] < initial_pos[r];
            return last_[l] > last_[r];
        });
        state_ = ListState(std::move(order));
    }

    const ListState& state() const override { return state_; }

private:
    ListState initial_;
    ListState state_;
    std::vector<long> count_;
    std::vector<long> last_;
    long clock_ = 0;
};

class LmtfRun final : public AlgorithmRun {
public:
    explicit LmtfRun(ListState initial) : state_(std::move(initial)), last_(256, -1) {}

    void serve(item_t x) override {
        int pos_x = state_.position_of(x);
        long previous = last_[x];
        if (previous >= 0) {
            // Move x in front of every item not requested since x's
            // previous request; insertion point is the frontmost such item.
            int target = pos_x;
            for (int pos = 0; pos < pos_x; ++pos) {
                item_t y = state_.at(pos);
                if (last_[y] < previous) {
                    target = pos;
                    break;
                }
            }
            if (target < pos_x) {
                std::vector<item_t> order(state_.order().begin(), state_.order().end());
                order.erase(order.begin() + pos_x);
                order.insert(order.begin() + target, x);
                state_ = ListState(std::move(order));
            }
        }
        last_[x] = clock_++;
    }

    const ListState& state() const override { return state_; }

private:
    ListState state_;
    std::vector<long> last_;
    long clock_ = 0;
};

}  // namespace

ListState critical_request_state(const CriticalRequestFunction& crf, const ListState& initial,
                                 const RequestSequence& sigma) {
    std::vector<long> crit(256, -1);
    for (item_t x : initial.order()) {
        RequestSequence sigma_x = project_sequence(sigma, x);
        long i = sigma_x.size();
        long F = crf.F(x, i);
        if (F > i) throw InputError("critical request function exceeds request count");
        if (F == 0) continue;
        // Position in sigma of the F-th request to x.
        long seen = 0;
        for (int pos = 0; pos < sigma.size(); ++pos) {
            if (sigma.at(pos) == x && ++seen == F) {
                crit[x] = pos;
                break;
            }
        }
    }
    return order_by_critical_times(initial, crit);
}

DeterministicAlgorithm make_critical_request_algorithm(CriticalRequestFunction crf,
                                                       const ListState& initial) {
    std::string name = crf.name();
    return DeterministicAlgorithm(name, initial, [crf = std::move(crf), initial]() {
        return std::make_unique<CriticalRequestRun>(crf, initial);
    });
}

DeterministicAlgorithm make_mtf(const ListState& initial) {
    return make_critical_request_algorithm(
        CriticalRequestFunction("mtf", [](item_t, long) { return 0; }), initial);
}

DeterministicAlgorithm make_ts(const ListState& initial) {
    return make_critical_request_algorithm(
        CriticalRequestFunction("ts", [](item_t, long) { return 1; }), initial);
}

DeterministicAlgorithm make_transpose(const ListState& initial) {
    return DeterministicAlgorithm("transpose", initial, [initial]() {
        return std::make_unique<TransposeRun>(initial);
    });
}

DeterministicAlgorithm make_frequency_count(const ListState& initial) {
    return DeterministicAlgorithm("fc", initial, [initial]() {
        return std::make_unique<FrequencyCountRun>(initial);
    });
}

DeterministicAlgorithm make_lmtf(const ListState& initial) {
    return DeterministicAlgorithm("lmtf", initial, [initial]() {
        return std::make_unique<LmtfRun>(initial);
    });
}

DeterministicAlgorithm make_bit(const std::vector<int>& bits, const ListState& initial) {
    if (static_cast<int>(bits.size()) != initial.size()) {
        throw InputError("bit vector must have one entry per item");
    }
    std::string name = "bit(";
    for (int b : bits) {
        if (b != 0 && b != 1) throw InputError("bit entries must be 0 or 1");
        name += static_cast<char>('0' + b);
    }
    name += ')';
    return make_critical_request_algorithm(
        CriticalRequestFunction(name, [bits](item_t x, long i) { return (bits[x] + i) % 2; }),
        initial);
}

CriticalRequestFunction parse_crf_csv(std::istream& in, const Alphabet& alphabet,
                                      const std::string& name) {
    std::vector<std::vector<long>> table(static_cast<std::size_t>(alphabet.size()));
    std::vector<long> fallback(static_cast<std::size_t>(alphabet.size()), 0);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line;
        trimmed.erase(std::remove_if(trimmed.begin(), trimmed.end(),
                                     [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }),
                      trimmed.end());
        if (trimmed.empty() || trimmed[0] == '#') continue;
        std::stringstream row(trimmed);
        std::string item_tok, i_tok, f_tok;
        if (!std::getline(row, item_tok, ',') || !std::getline(row, i_tok, ',') ||
            !std::getline(row, f_tok, ',')) {
            throw InputError("crf csv line " + std::to_string(lineno) + ": expected item,i,f");
        }
        int id = alphabet.id_of(item_tok);
        if (id < 0) throw InputError("crf csv line " + std::to_string(lineno) + ": unknown item '" +
                                     item_tok + "'");
        long f_value = 0;
        try {
            f_value = std::stol(f_tok);
        } catch (const std::exception&) {
            throw InputError("crf csv line " + std::to_string(lineno) + ": bad f value");
        }
        if (f_value < 0) throw InputError("crf csv line " + std::to_string(lineno) + ": f must be >= 0");
        if (i_tok == "*" || i_tok == "default") {
            fallback[static_cast<std::size_t>(id)] = f_value;
            continue;
        }
        long i_value = 0;
        try {
            i_value = std::stol(i_tok);
        } catch (const std::exception&) {
            throw InputError("crf csv line " + std::to_string(lineno) + ": bad i value");
        }
        if (i_value < 0) throw InputError("crf csv line " + std::to_string(lineno) + ": i must be >= 0");
        auto& column = table[static_cast<std::size_t>(id)];
        if (static_cast<long>(column.size()) <= i_value) column.resize(static_cast<std::size_t>(i_value) + 1, -1);
        column[static_cast<std::size_t>(i_value)] = f_value;
    }
    return CriticalRequestFunction(name, [table, fallback](item_t x, long i) -> long {
        const auto& column = table[x];
        if (i < static_cast<long>(column.size()) && column[static_cast<std::size_t>(i)] >= 0) {
            return column[static_cast<std::size_t>(i)];
        }
        return fallback[x];
    });
}

DeterministicAlgorithm make_crf_from_file(const std::string& path, const Alphabet& alphabet,
                                          const ListState& initial) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open crf table '" + path + "'");
    return make_critical_request_algorithm(parse_crf_csv(in, alphabet, "crf:" + path), initial);
}

RandomizedAlgorithm::RandomizedAlgorithm(std::string name, std::vector<WeightedAtom> atoms)
    : name_(std::move(name)), atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw InputError("distribution needs at least one atom");
    Rational total = 0;
    for (const auto& atom : atoms_) {
        if (atom.weight <= 0) throw InputError("distribution weights must be positive");
        if (atom.algorithm.item_count() != atoms_.front().algorithm.item_count()) {
            throw InputError("distribution atoms disagree on the alphabet");
        }
        total += atom.weight;
    }
    if (total != 1) throw InputError("distribution weights must sum to exactly 1");
}

RandomizedAlgorithm RandomizedAlgorithm::point_mass(DeterministicAlgorithm alg) {
    std::string name = alg.name();
    std::vector<WeightedAtom> atoms;
    atoms.push_back(WeightedAtom{std::move(alg), Rational(1)});
    return RandomizedAlgorithm(std::move(name), std::move(atoms));
}

RandomizedAlgorithm make_bit_distribution(const ListState& initial) {
    const int n = initial.size();
    if (n > kBitAtomGuard) {
        throw GuardError("bit distribution guard: 2^n atoms with n = " + std::to_string(n) +
                         " exceeds n <= " + std::to_string(kBitAtomGuard) +
                         "; use a seeded bit atom instead");
    }
    const std::uint64_t count = 1ull << n;
    Rational weight = Rational(1, BigInt(count));
    std::vector<WeightedAtom> atoms;
    atoms.reserve(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        std::vector<int> bits(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) bits[static_cast<std::size_t>(i)] = (mask >> i) & 1;
        atoms.push_back(WeightedAtom{make_bit(bits, initial), weight});
    }
    return RandomizedAlgorithm("bit", std::move(atoms));
}

RandomizedAlgorithm make_comb(const ListState& initial) {
    RandomizedAlgorithm bit = make_bit_distribution(initial);
    std::vector<WeightedAtom> atoms;
    atoms.reserve(bit.atoms().size() + 1);
    for (const auto& atom : bit.atoms()) {
        atoms.push_back(WeightedAtom{atom.algorithm, atom.weight * Rational(4, 5)});
    }
    atoms.push_back(WeightedAtom{make_ts(initial), Rational(1, 5)});
    return RandomizedAlgorithm("comb", std::move(atoms));
}

DeterministicAlgorithm make_bit_seeded(std::uint64_t seed, const ListState& initial) {
    std::mt19937_64 rng(seed);
    std::vector<int> bits(static_cast<std::size_t>(initial.size()));
    for (auto& b : bits) b = static_cast<int>(rng() & 1u);
    return make_bit(bits, initial);
}

ServeResult serve(const DeterministicAlgorithm& alg, const RequestSequence& sigma,
                  bool want_trace) {
    const int n = alg.item_count();
    ServeResult result;
    auto run = alg.run();
    ListState previous = run->state();
    if (!previous.is_permutation_of(n)) throw InputError("algorithm initial state is not a permutation");
    if (want_trace) result.trace.push_back(previous);
    for (int i = 0; i < sigma.size(); ++i) {
        item_t x = sigma.at(i);
        run->serve(x);
        const ListState& next = run->state();
        if (!next.is_permutation_of(n)) {
            throw InputError("algorithm '" + alg.name() + "' produced a non-permutation state");
        }
        result.cost += kendall_distance(previous, next) + access_cost(next, x);
        previous = next;
        if (want_trace) result.trace.push_back(next);
    }
    return result;
}

long long serve_cost(const DeterministicAlgorithm& alg, const RequestSequence& sigma) {
    return serve(alg, sigma, false).cost;
}

Rational expected_cost(const RandomizedAlgorithm& alg, const RequestSequence& sigma) {
    Rational total = 0;
    for (const auto& atom : alg.atoms()) {
        total += atom.weight * Rational(serve_cost(atom.algorithm, sigma));
    }
    return total;
}

}  // namespace listlab

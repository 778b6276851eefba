#pragma once

#include "core_model.hpp"
#include "rational.hpp"

#include <functional>
#include <iosfwd>
#include <memory>

namespace listlab {

// A running instance of a deterministic algorithm: consumes one request at
// a time and exposes the list state after everything served so far.
class AlgorithmRun {
public:
    virtual ~AlgorithmRun() = default;
    virtual void serve(item_t x) = 0;
    virtual const ListState& state() const = 0;
};

// A deterministic online algorithm, specified by its state function: the
// list state after each request-sequence prefix, starting from `initial`.
// Runs may consult the entire request history.
class DeterministicAlgorithm {
public:
    using RunFactory = std::function<std::unique_ptr<AlgorithmRun>()>;

    DeterministicAlgorithm(std::string name, ListState initial, RunFactory factory);

    const std::string& name() const { return name_; }
    const ListState& initial() const { return initial_; }
    int item_count() const { return initial_.size(); }
    std::unique_ptr<AlgorithmRun> run() const { return factory_(); }
    ListState state_after(const RequestSequence& sigma) const;

private:
    std::string name_;
    ListState initial_;
    RunFactory factory_;
};

// Critical-request description in relative form: f(x^i) counts back from
// the most recent request, so the critical request is the (i - f(x^i))th.
// F clamps at zero; F(x^0) = 0 always.
class CriticalRequestFunction {
public:
    using RelFn = std::function<long(item_t, long)>;

    CriticalRequestFunction(std::string name, RelFn f_rel);

    const std::string& name() const { return name_; }
    long f(item_t x, long i) const;
    long F(item_t x, long i) const;

private:
    std::string name_;
    RelFn f_rel_;
};

// List state reached by the critical-request rule: items with a critical
// request first, most recent critical closest to the front; the rest keep
// their initial relative order at the tail.
ListState critical_request_state(const CriticalRequestFunction& crf, const ListState& initial,
                                 const RequestSequence& sigma);

DeterministicAlgorithm make_critical_request_algorithm(CriticalRequestFunction crf,
                                                       const ListState& initial);

DeterministicAlgorithm make_mtf(const ListState& initial);
DeterministicAlgorithm make_ts(const ListState& initial);
DeterministicAlgorithm make_transpose(const ListState& initial);
DeterministicAlgorithm make_frequency_count(const ListState& initial);
DeterministicAlgorithm make_lmtf(const ListState& initial);
// One BIT atom: f(x^i) = (bits[x] + i) mod 2 for i > 0.
DeterministicAlgorithm make_bit(const std::vector<int>& bits, const ListState& initial);

// Relative-f table parsed from CSV rows "item,i,f"; a row with i = '*'
// (or 'default') sets f for every count past the listed ones. Items past
// the end of a column fall back to that default, or to 0.
CriticalRequestFunction parse_crf_csv(std::istream& in, const Alphabet& alphabet,
                                      const std::string& name);
DeterministicAlgorithm make_crf_from_file(const std::string& path, const Alphabet& alphabet,
                                          const ListState& initial);

struct WeightedAtom {
    DeterministicAlgorithm algorithm;
    Rational weight;
};

// An explicit finite distribution over deterministic algorithms with exact
// rational weights summing to one.
class RandomizedAlgorithm {
public:
    RandomizedAlgorithm(std::string name, std::vector<WeightedAtom> atoms);

    static RandomizedAlgorithm point_mass(DeterministicAlgorithm alg);

    const std::string& name() const { return name_; }
    const std::vector<WeightedAtom>& atoms() const { return atoms_; }
    int item_count() const { return atoms_.front().algorithm.item_count(); }

private:
    std::string name_;
    std::vector<WeightedAtom> atoms_;
};

constexpr int kBitAtomGuard = 16;  // 2^n atoms; enumeration is capped here

// Uniform distribution over all 2^n bit vectors. Guard: n <= 16.
RandomizedAlgorithm make_bit_distribution(const ListState& initial);
// 4/5 BIT + 1/5 TS.
RandomizedAlgorithm make_comb(const ListState& initial);
// One BIT atom with bits drawn from a seeded mt19937_64; usable past the
// 2^n guard.
DeterministicAlgorithm make_bit_seeded(std::uint64_t seed, const ListState& initial);

struct ServeResult {
    long long cost = 0;
    std::vector<ListState> trace;  // S(empty) .. S(sigma)
};

// Serves sigma, charging each request the paid exchanges into the new
// state plus the access cost there.
ServeResult serve(const DeterministicAlgorithm& alg, const RequestSequence& sigma,
                  bool want_trace = true);
long long serve_cost(const DeterministicAlgorithm& alg, const RequestSequence& sigma);

Rational expected_cost(const RandomizedAlgorithm& alg, const RequestSequence& sigma);

}  // namespace listlab

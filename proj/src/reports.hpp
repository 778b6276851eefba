#pragma once

#include "algorithms.hpp"
#include "core_model.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace listlab {

// A parsed algorithm name, bound to an alphabet size but not yet to an
// initial state. Accepted forms: mtf, ts, transpose, fc, lmtf, bit, comb,
// bit:seed=<u64>, crf:<csv path>.
class AlgorithmSpec {
public:
    static AlgorithmSpec parse(const std::string& text, int n_items);

    const std::string& text() const { return text_; }
    int item_count() const { return n_; }
    // bit and comb are distributions; everything else is deterministic.
    bool randomized() const;

    DeterministicAlgorithm make_deterministic(const ListState& initial,
                                              const Alphabet& alphabet) const;
    RandomizedAlgorithm make_distribution(const ListState& initial,
                                          const Alphabet& alphabet) const;

private:
    enum class Kind { Mtf, Ts, Transpose, Fc, Lmtf, Bit, BitSeeded, Comb, Crf };

    Kind kind_ = Kind::Mtf;
    int n_ = 2;
    std::string text_;
    std::uint64_t seed_ = 0;
    std::string crf_csv_;  // file contents, parsed against the live alphabet
};

constexpr int kRatioMaxlenGuard = 14;

nlohmann::json simulate_report(const AlgorithmSpec& spec, const std::string& initial_text,
                               const std::string& sigma_text, bool with_trace);
nlohmann::json opt_report(const std::string& initial_text, const std::string& sigma_text,
                          bool pairwise, bool force);
nlohmann::json ratio_report(const AlgorithmSpec& spec, int maxlen, bool force);
nlohmann::json analyze_report(const AlgorithmSpec& spec, int depth, int maxlen);
nlohmann::json lowerbound_report(const AlgorithmSpec& spec, int m_hat, int k_reps, int t_scale,
                                 long long b, bool emit_table1,
                                 const std::optional<std::string>& states_csv_path);

}  // namespace listlab

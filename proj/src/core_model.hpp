#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace listlab {

// Malformed input: unknown items, non-permutations, bad syntax.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A resource guard tripped (state space, interleaving count, memory).
// The message names the guard and, where one exists, the cheaper alternative.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using item_t = std::uint8_t;

constexpr int kMaxItems = 200;

// Fixed item alphabet for one experiment. Items are ids 0..n-1; the
// alphabet only supplies display names (letters a,b,c,... by default, or
// the letters a state string was parsed from; u0,u1,... past 26).
class Alphabet {
public:
    explicit Alphabet(int n);
    Alphabet(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(item_t id) const;
    // Returns the id for a display name, or -1.
    int id_of(std::string_view name) const;

private:
    std::vector<std::string> names_;
};

// A list state: distinct items, front of list first.
class ListState {
public:
    ListState() = default;
    explicit ListState(std::vector<item_t> order);
    ListState(std::initializer_list<item_t> order) : ListState(std::vector<item_t>(order)) {}

    static ListState identity(int n);

    int size() const { return static_cast<int>(order_.size()); }
    item_t at(int pos) const { return order_[static_cast<std::size_t>(pos)]; }
    std::span<const item_t> order() const { return order_; }
    bool contains(item_t x) const;
    int position_of(item_t x) const;  // front = 0; throws if absent
    // True when the state is exactly a permutation of ids 0..n-1.
    bool is_permutation_of(int n) const;

    bool operator==(const ListState&) const = default;

private:
    std::vector<item_t> order_;
};

class RequestSequence {
public:
    RequestSequence() = default;
    explicit RequestSequence(std::vector<item_t> requests) : requests_(std::move(requests)) {}
    RequestSequence(std::initializer_list<item_t> requests) : requests_(requests) {}

    int size() const { return static_cast<int>(requests_.size()); }
    bool empty() const { return requests_.empty(); }
    item_t at(int pos) const { return requests_[static_cast<std::size_t>(pos)]; }
    std::span<const item_t> items() const { return requests_; }
    void push_back(item_t x) { requests_.push_back(x); }
    void append(const RequestSequence& tail);
    int count_of(item_t x) const;

    bool operator==(const RequestSequence&) const = default;

private:
    std::vector<item_t> requests_;
};

// The i-fold repetition of requests to one item. Zero-length projections
// of different items are distinct values.
struct UnaryProjection {
    item_t item = 0;
    int count = 0;

    bool operator==(const UnaryProjection&) const = default;
    auto operator<=>(const UnaryProjection&) const = default;
};

// Number of unordered item pairs whose relative order differs between the
// two states; the minimum number of adjacent paid exchanges transforming
// one into the other. Both states must hold the same item set.
long long kendall_distance(const ListState& a, const ListState& b);

// Number of items in front of x; equals the partial-model access cost.
long long access_cost(const ListState& state, item_t x);

RequestSequence project_sequence(const RequestSequence& sigma, std::span<const item_t> items);
RequestSequence project_sequence(const RequestSequence& sigma, item_t x);
RequestSequence project_sequence(const RequestSequence& sigma, item_t x, item_t y);

// Two-item state [xy] or [yx], whichever matches the relative order in
// `state`.
ListState project_state(const ListState& state, item_t x, item_t y);

UnaryProjection unary_projection(const RequestSequence& sigma, item_t x);

// ---- Text I/O ----------------------------------------------------------
//
// States read and print as bracketed item lists ("[abc]"); sequences as
// strings of item letters ("baacbc") with an optional repetition macro
// expanded first: "x^3(yx)^2" -> "xxxyxyx". Alphabets beyond 26 items use
// comma-separated u-tokens ("[u0,u1,u2]" / "u0,u1,u1").

// Parses a state string; the letters appearing define the alphabet
// (ids assigned in sorted letter order).
std::pair<Alphabet, ListState> parse_state(std::string_view text);
// Parses a state over an existing alphabet.
ListState parse_state(std::string_view text, const Alphabet& alphabet);
RequestSequence parse_sequence(std::string_view text, const Alphabet& alphabet);
std::string expand_sequence_macros(std::string_view text);

std::string format_state(const ListState& state, const Alphabet& alphabet);
std::string format_sequence(const RequestSequence& sigma, const Alphabet& alphabet);
std::string format_projection(const UnaryProjection& u, const Alphabet& alphabet);

}  // namespace listlab

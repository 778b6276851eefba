#include "core_model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace listlab {

namespace {

std::string default_name(int id) {
    if (id < 26) return std::string(1, static_cast<char>('a' + id));
    return "u" + std::to_string(id);
}

bool is_u_token(std::string_view tok) {
    if (tok.size() < 2 || tok[0] != 'u') return false;
    return std::all_of(tok.begin() + 1, tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

}  // namespace

Alphabet::Alphabet(int n) {
    if (n < 2 || n > kMaxItems) {
        throw InputError("alphabet size must be between 2 and " + std::to_string(kMaxItems) +
                         ", got " + std::to_string(n));
    }
    names_.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) names_.push_back(default_name(i));
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() < 2 || names_.size() > kMaxItems) {
        throw InputError("alphabet size must be between 2 and " + std::to_string(kMaxItems));
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
        for (std::size_t j = i + 1; j < names_.size(); ++j) {
            if (names_[i] == names_[j]) throw InputError("duplicate item name '" + names_[i] + "'");
        }
    }
}

const std::string& Alphabet::name(item_t id) const {
    if (id >= names_.size()) throw InputError("item id " + std::to_string(id) + " outside alphabet");
    return names_[id];
}

int Alphabet::id_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return static_cast<int>(i);
    }
    return -1;
}

ListState::ListState(std::vector<item_t> order) : order_(std::move(order)) {
    for (std::size_t i = 0; i < order_.size(); ++i) {
        for (std::size_t j = i + 1; j < order_.size(); ++j) {
            if (order_[i] == order_[j]) throw InputError("list state repeats an item");
        }
    }
}

ListState ListState::identity(int n) {
    if (n < 1 || n > kMaxItems) throw InputError("list size out of range");
    std::vector<item_t> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = static_cast<item_t>(i);
    return ListState(std::move(order));
}

bool ListState::contains(item_t x) const {
    return std::find(order_.begin(), order_.end(), x) != order_.end();
}

int ListState::position_of(item_t x) const {
    auto it = std::find(order_.begin(), order_.end(), x);
    if (it == order_.end()) throw InputError("item not present in list state");
    return static_cast<int>(it - order_.begin());
}

bool ListState::is_permutation_of(int n) const {
    if (static_cast<int>(order_.size()) != n) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (item_t x : order_) {
        if (x >= n || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

void RequestSequence::append(const RequestSequence& tail) {
    requests_.insert(requests_.end(), tail.requests_.begin(), tail.requests_.end());
}

int RequestSequence::count_of(item_t x) const {
    return static_cast<int>(std::count(requests_.begin(), requests_.end(), x));
}

long long kendall_distance(const ListState& a, const ListState& b) {
    if (a.size() != b.size()) throw InputError("kendall distance: states have different sizes");
    const int n = a.size();
    std::vector<int> pos_b(256, -1);
    for (int i = 0; i < n; ++i) pos_b[b.at(i)] = i;
    long long inversions = 0;
    for (int i = 0; i < n; ++i) {
        if (pos_b[a.at(i)] < 0) throw InputError("kendall distance: states hold different items");
        for (int j = i + 1; j < n; ++j) {
            if (pos_b[a.at(i)] > pos_b[a.at(j)]) ++inversions;
        }
    }
    return inversions;
}

long long access_cost(const ListState& state, item_t x) {
    return state.position_of(x);
}

RequestSequence project_sequence(const RequestSequence& sigma, std::span<const item_t> items) {
    std::vector<item_t> kept;
    for (item_t r : sigma.items()) {
        if (std::find(items.begin(), items.end(), r) != items.end()) kept.push_back(r);
    }
    return RequestSequence(std::move(kept));
}

RequestSequence project_sequence(const RequestSequence& sigma, item_t x) {
    const item_t items[1] = {x};
    return project_sequence(sigma, items);
}

RequestSequence project_sequence(const RequestSequence& sigma, item_t x, item_t y) {
    const item_t items[2] = {x, y};
    return project_sequence(sigma, items);
}

ListState project_state(const ListState& state, item_t x, item_t y) {
    if (x == y) throw InputError("state projection needs two distinct items");
    if (state.position_of(x) < state.position_of(y)) return ListState({x, y});
    return ListState({y, x});
}

UnaryProjection unary_projection(const RequestSequence& sigma, item_t x) {
    return UnaryProjection{x, sigma.count_of(x)};
}

// ---- Text I/O ----------------------------------------------------------

namespace {

std::vector<std::string> split_tokens(std::string_view body) {
    std::vector<std::string> tokens;
    if (body.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= body.size()) {
            std::size_t comma = body.find(',', start);
            if (comma == std::string_view::npos) comma = body.size();
            std::string tok(body.substr(start, comma - start));
            if (tok.empty()) throw InputError("empty item token in state string");
            tokens.push_back(std::move(tok));
            start = comma + 1;
            if (comma == body.size()) break;
        }
    } else {
        for (char c : body) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            tokens.emplace_back(1, c);
        }
    }
    return tokens;
}

void validate_letter(const std::string& tok) {
    if (tok.size() == 1) {
        char c = tok[0];
        if (c < 'a' || c > 'z') throw InputError("item '" + tok + "' is not a lowercase letter");
        return;
    }
    if (!is_u_token(tok)) throw InputError("item token '" + tok + "' is neither a letter nor u<k>");
}

}  // namespace

std::pair<Alphabet, ListState> parse_state(std::string_view text) {
    std::string_view body = text;
    if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
        throw InputError("state must be bracketed, e.g. [abc]");
    }
    body.remove_prefix(1);
    body.remove_suffix(1);
    std::vector<std::string> tokens = split_tokens(body);
    if (tokens.size() < 2) throw InputError("state needs at least two items");
    for (const auto& tok : tokens) validate_letter(tok);

    std::vector<std::string> names = tokens;
    std::sort(names.begin(), names.end(), [](const std::string& l, const std::string& r) {
        if (is_u_token(l) && is_u_token(r)) {
            return std::stoi(l.substr(1)) < std::stoi(r.substr(1));
        }
        return l < r;
    });
    Alphabet alphabet(names);

    std::vector<item_t> order;
    order.reserve(tokens.size());
    for (const auto& tok : tokens) {
        int id = alphabet.id_of(tok);
        if (id < 0) throw InputError("internal: token lost during alphabet build");
        order.push_back(static_cast<item_t>(id));
    }
    return {std::move(alphabet), ListState(std::move(order))};
}

ListState parse_state(std::string_view text, const Alphabet& alphabet) {
    std::string_view body = text;
    if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
        throw InputError("state must be bracketed, e.g. [abc]");
    }
    body.remove_prefix(1);
    body.remove_suffix(1);
    std::vector<std::string> tokens = split_tokens(body);
    std::vector<item_t> order;
    order.reserve(tokens.size());
    for (const auto& tok : tokens) {
        int id = alphabet.id_of(tok);
        if (id < 0) throw InputError("item '" + tok + "' is not in the alphabet");
        order.push_back(static_cast<item_t>(id));
    }
    ListState state(std::move(order));
    if (state.size() != alphabet.size()) {
        throw InputError("state must list every alphabet item exactly once");
    }
    return state;
}

std::string expand_sequence_macros(std::string_view text) {
    // Grammar: unit = letter | '(' units ')' ; each unit may carry '^<int>'.
    std::string out;
    std::vector<std::size_t> group_starts;
    std::size_t i = 0;
    auto read_exponent = [&]() -> long {
        ++i;  // consume '^'
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw InputError("'^' must be followed by a number");
        }
        long value = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + (text[i] - '0');
            if (value > 1000000) throw InputError("repetition count too large");
            ++i;
        }
        return value;
    };
    auto repeat_tail = [&](std::size_t start, long times) {
        std::string unit = out.substr(start);
        if (times == 0) {
            out.resize(start);
            return;
        }
        for (long r = 1; r < times; ++r) out += unit;
        if (out.size() > 10u * 1000 * 1000) throw GuardError("expanded sequence exceeds 10M requests");
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '(') {
            group_starts.push_back(out.size());
            ++i;
        } else if (c == ')') {
            if (group_starts.empty()) throw InputError("unmatched ')' in sequence");
            std::size_t start = group_starts.back();
            group_starts.pop_back();
            ++i;
            if (i < text.size() && text[i] == '^') repeat_tail(start, read_exponent());
        } else if (c == '^') {
            if (out.empty()) throw InputError("'^' needs a preceding item or group");
            std::size_t start = out.size() - 1;
            repeat_tail(start, read_exponent());
        } else {
            out += c;
            ++i;
        }
    }
    if (!group_starts.empty()) throw InputError("unmatched '(' in sequence");
    return out;
}

RequestSequence parse_sequence(std::string_view text, const Alphabet& alphabet) {
    std::string expanded = expand_sequence_macros(text);
    std::vector<item_t> requests;
    if (expanded.find(',') != std::string_view::npos || alphabet.size() > 26) {
        std::size_t start = 0;
        std::string_view sv = expanded;
        while (start < sv.size()) {
            std::size_t comma = sv.find(',', start);
            if (comma == std::string_view::npos) comma = sv.size();
            std::string tok(sv.substr(start, comma - start));
            if (!tok.empty()) {
                int id = alphabet.id_of(tok);
                if (id < 0) throw InputError("request '" + tok + "' is not in the alphabet");
                requests.push_back(static_cast<item_t>(id));
            }
            start = comma + 1;
        }
    } else {
        for (char c : expanded) {
            int id = alphabet.id_of(std::string(1, c));
            if (id < 0) throw InputError(std::string("request '") + c + "' is not in the alphabet");
            requests.push_back(static_cast<item_t>(id));
        }
    }
    return RequestSequence(std::move(requests));
}

std::string format_state(const ListState& state, const Alphabet& alphabet) {
    std::string out = "[";
    bool commas = alphabet.size() > 26;
    for (int i = 0; i < state.size(); ++i) {
        if (commas && i > 0) out += ',';
        out += alphabet.name(state.at(i));
    }
    out += ']';
    return out;
}

std::string format_sequence(const RequestSequence& sigma, const Alphabet& alphabet) {
    std::string out;
    bool commas = alphabet.size() > 26;
    for (int i = 0; i < sigma.size(); ++i) {
        if (commas && i > 0) out += ',';
        out += alphabet.name(sigma.at(i));
    }
    return out;
}

std::string format_projection(const UnaryProjection& u, const Alphabet& alphabet) {
    return alphabet.name(u.item) + "^" + std::to_string(u.count);
}

}  // namespace listlab

#include "core_model.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace listlab;

namespace {

ListState random_state(int n, std::mt19937_64& rng) {
    std::vector<item_t> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = static_cast<item_t>(i);
    std::shuffle(order.begin(), order.end(), rng);
    return ListState(std::move(order));
}

}  // namespace

TEST_CASE("kendall distance on fixed states") {
    ListState abc{0, 1, 2};
    CHECK(kendall_distance(abc, abc) == 0);
    CHECK(kendall_distance(abc, ListState{2, 1, 0}) == 3);
    // [abc] vs [bca]: oracle counts pairs (a,b) and (a,c) inverted.
    ListState bca{1, 2, 0};
    CHECK(oracle::kendall_by_pairs(abc, bca) == 2);
    CHECK(kendall_distance(abc, bca) == 2);
}

TEST_CASE("kendall distance rejects mismatched alphabets") {
    CHECK_THROWS_AS(kendall_distance(ListState{0, 1}, ListState{0, 1, 2}), InputError);
    CHECK_THROWS_AS(kendall_distance(ListState{0, 1}, ListState{0, 2}), InputError);
}

TEST_CASE("kendall distance is a metric on random triples") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 200; ++round) {
        int n = 2 + static_cast<int>(rng() % 5);
        ListState a = random_state(n, rng);
        ListState b = random_state(n, rng);
        ListState c = random_state(n, rng);
        CHECK(kendall_distance(a, b) == oracle::kendall_by_pairs(a, b));
        CHECK(kendall_distance(a, b) == kendall_distance(b, a));
        CHECK((kendall_distance(a, b) == 0) == (a == b));
        CHECK(kendall_distance(a, c) <= kendall_distance(a, b) + kendall_distance(b, c));
    }
}

TEST_CASE("access cost is the number of items in front") {
    ListState abc{0, 1, 2};
    CHECK(access_cost(abc, 0) == 0);
    CHECK(access_cost(abc, 1) == 1);
    CHECK(access_cost(abc, 2) == 2);

    std::mt19937_64 rng(11);
    for (int round = 0; round < 100; ++round) {
        int n = 2 + static_cast<int>(rng() % 5);
        ListState state = random_state(n, rng);
        for (item_t x = 0; x < n; ++x) {
            long long in_front = 0;
            for (item_t y = 0; y < n; ++y) {
                if (y != x && state.position_of(y) < state.position_of(x)) ++in_front;
            }
            CHECK(access_cost(state, x) == in_front);
        }
    }
}

TEST_CASE("sequence projection") {
    Alphabet abc(3);
    RequestSequence sigma = parse_sequence("baacbc", abc);
    CHECK(format_sequence(project_sequence(sigma, 1, 2), abc) == "bcbc");
    RequestSequence sigma2 = parse_sequence("abbcab", abc);
    CHECK(format_sequence(project_sequence(sigma2, 0), abc) == "aa");
    CHECK(project_sequence(RequestSequence{}, 0, 1).empty());
}

TEST_CASE("state projection") {
    ListState abc{0, 1, 2};
    CHECK(project_state(abc, 0, 2) == ListState{0, 2});
    ListState cba{2, 1, 0};
    CHECK(project_state(cba, 0, 1) == ListState{1, 0});
    ListState cab{2, 0, 1};
    CHECK(project_state(cab, 1, 2) == ListState{2, 1});
    CHECK_THROWS_AS(project_state(abc, 1, 1), InputError);
}

TEST_CASE("unary projections compare by item and count") {
    CHECK(UnaryProjection{0, 0} != UnaryProjection{1, 0});
    CHECK(UnaryProjection{0, 2} == UnaryProjection{0, 2});
    Alphabet abc(3);
    RequestSequence sigma = parse_sequence("abbcab", abc);
    CHECK(unary_projection(sigma, 1) == UnaryProjection{1, 3});
}

TEST_CASE("state parsing and formatting") {
    auto [alphabet, state] = parse_state("[abc]");
    CHECK(alphabet.size() == 3);
    CHECK(state == ListState{0, 1, 2});
    CHECK(format_state(state, alphabet) == "[abc]");

    auto [xy, yx] = parse_state("[yx]");
    CHECK(yx == ListState{1, 0});
    CHECK(format_state(yx, xy) == "[yx]");
    CHECK(format_state(ListState{0, 1}, xy) == "[xy]");

    CHECK_THROWS_AS(parse_state("abc"), InputError);
    CHECK_THROWS_AS(parse_state("[aab]"), InputError);
    CHECK_THROWS_AS(parse_state("[a]"), InputError);
    CHECK_THROWS_AS(parse_state("[aB]"), InputError);
}

TEST_CASE("u-token states past 26 items") {
    std::vector<std::string> names;
    for (int i = 0; i < 30; ++i) names.push_back("u" + std::to_string(i));
    Alphabet big(names);
    ListState state = ListState::identity(30);
    std::string text = format_state(state, big);
    CHECK(text.substr(0, 7) == "[u0,u1,");
    CHECK(parse_state(text, big) == state);

    RequestSequence sigma = parse_sequence("u0,u29,u0", big);
    CHECK(sigma == RequestSequence{0, 29, 0});
    CHECK(format_sequence(sigma, big) == "u0,u29,u0");
    CHECK_THROWS_AS(parse_sequence("u0,u30", big), InputError);
}

TEST_CASE("sequence macros expand before parsing") {
    CHECK(expand_sequence_macros("x^3(yx)^2") == "xxxyxyx");
    CHECK(expand_sequence_macros("ab") == "ab");
    CHECK(expand_sequence_macros("(ab)^0c") == "c");
    CHECK(expand_sequence_macros("((ab)^2c)^2") == "ababcababc");
    CHECK_THROWS_AS(expand_sequence_macros("a^"), InputError);
    CHECK_THROWS_AS(expand_sequence_macros("(ab"), InputError);
    CHECK_THROWS_AS(expand_sequence_macros(")a"), InputError);

    Alphabet xy({"x", "y"});
    CHECK(format_sequence(parse_sequence("x^3(yx)^2", xy), xy) == "xxxyxyx");
    CHECK(parse_sequence("", xy).empty());
    CHECK_THROWS_AS(parse_sequence("xz", xy), InputError);
}

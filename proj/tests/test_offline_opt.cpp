#include "offline_opt.hpp"

#include "algorithms.hpp"
#include "lowerbound.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace listlab;

TEST_CASE("opt_exact on the paid-exchange example") {
    Alphabet abc(3);
    ListState initial{0, 1, 2};
    RequestSequence sigma = parse_sequence("cbbc", abc);
    CHECK(oracle::brute_force_opt(initial, sigma) == 4);
    CHECK(opt_exact(initial, sigma) == 4);
    CHECK(opt_exact(initial, RequestSequence{}) == 0);
}

TEST_CASE("opt_exact equals the trajectory oracle on small instances") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 60; ++round) {
        int n = 2 + static_cast<int>(rng() % 2);
        int length = static_cast<int>(rng() % 5);
        std::vector<item_t> requests(static_cast<std::size_t>(length));
        for (auto& r : requests) r = static_cast<item_t>(rng() % n);
        ListState initial = ListState::identity(n);
        RequestSequence sigma{std::move(requests)};
        CHECK(opt_exact(initial, sigma) == oracle::brute_force_opt(initial, sigma));
    }
}

TEST_CASE("opt_exact guard suggests the pairwise bound") {
    ListState big = ListState::identity(7);
    CHECK_THROWS_WITH_AS(opt_exact(big, RequestSequence{0}),
                         doctest::Contains("opt_pairwise_lower"), GuardError);
    CHECK(opt_exact(big, RequestSequence{6}, true) == 6);
}

TEST_CASE("opt_two_items basics") {
    ListState xy{0, 1};
    CHECK(opt_two_items(xy, RequestSequence{1}) == 1);
    for (int k = 0; k <= 6; ++k) {
        RequestSequence xs(std::vector<item_t>(static_cast<std::size_t>(k), 0));
        CHECK(opt_two_items(xy, xs) == 0);
    }
    CHECK_THROWS_AS(opt_two_items(ListState{0, 1, 2}, RequestSequence{}), InputError);
    CHECK_THROWS_AS(opt_two_items(xy, RequestSequence{2}), InputError);
}

TEST_CASE("opt_two_items matches opt_exact on every short two-item sequence") {
    for (ListState initial : {ListState{0, 1}, ListState{1, 0}}) {
        oracle::every_sequence_up_to(2, 12, [&](const RequestSequence& sigma) {
            CHECK(opt_two_items(initial, sigma) == opt_exact(initial, sigma));
        });
    }
}

TEST_CASE("adversary block and prefixed block optima") {
    ListState yx{1, 0};
    RequestSequence phi = build_phi(3);
    CHECK(opt_two_items(yx, phi) == 10);

    // One block with the x^(M+t) y^(M+h) prefix costs 10 + 2.
    for (int t : {0, 2}) {
        for (int h : {0, 3}) {
            RequestSequence lambda(std::vector<item_t>(static_cast<std::size_t>(3 + t), 0));
            for (int r = 0; r < 3 + h; ++r) lambda.push_back(1);
            lambda.append(phi);
            CHECK(opt_two_items(yx, lambda) == 12);
        }
    }
}

TEST_CASE("opt_pairwise_lower on the worked example") {
    Alphabet abc(3);
    ListState initial{0, 1, 2};
    RequestSequence sigma = parse_sequence("cbbc", abc);
    // Pair contributions: {b,c} -> 2, {a,c} -> 1, {a,b} -> 1.
    CHECK(opt_two_items(ListState{1, 2}, parse_sequence("cbbc", abc)) == 2);
    CHECK(opt_two_items(ListState{0, 2}, parse_sequence("cc", abc)) == 1);
    CHECK(opt_two_items(ListState{0, 1}, parse_sequence("bb", abc)) == 1);
    CHECK(opt_pairwise_lower(initial, sigma) == 4);
    CHECK(opt_pairwise_lower(initial, RequestSequence{}) == 0);
    // A single pair reduces to the two-item optimum.
    ListState ab{0, 1};
    RequestSequence two = parse_sequence("baab", Alphabet(2));
    CHECK(opt_pairwise_lower(ab, two) == opt_two_items(ab, two));
}

TEST_CASE("pairwise bound never exceeds the exact optimum") {
    for (int n : {3, 4}) {
        ListState initial = ListState::identity(n);
        oracle::every_sequence_up_to(n, 6, [&](const RequestSequence& sigma) {
            CHECK(opt_pairwise_lower(initial, sigma) <= opt_exact(initial, sigma));
        });
    }
}

TEST_CASE("opt never exceeds any online algorithm") {
    std::mt19937_64 rng(17);
    ListState initial{0, 1, 2};
    std::vector<DeterministicAlgorithm> roster;
    roster.push_back(make_mtf(initial));
    roster.push_back(make_ts(initial));
    roster.push_back(make_transpose(initial));
    roster.push_back(make_frequency_count(initial));
    roster.push_back(make_lmtf(initial));
    for (int round = 0; round < 120; ++round) {
        int length = static_cast<int>(rng() % 8);
        std::vector<item_t> requests(static_cast<std::size_t>(length));
        for (auto& r : requests) r = static_cast<item_t>(rng() % 3);
        RequestSequence sigma{std::move(requests)};
        long long opt = opt_exact(initial, sigma);
        for (const auto& alg : roster) CHECK(opt <= serve_cost(alg, sigma));
    }
}

TEST_CASE("opt is monotone under appending requests") {
    std::mt19937_64 rng(19);
    ListState initial{0, 1, 2};
    for (int round = 0; round < 100; ++round) {
        int length = static_cast<int>(rng() % 6);
        std::vector<item_t> requests(static_cast<std::size_t>(length));
        for (auto& r : requests) r = static_cast<item_t>(rng() % 3);
        RequestSequence sigma{std::vector<item_t>(requests)};
        RequestSequence extended = sigma;
        extended.push_back(static_cast<item_t>(rng() % 3));
        CHECK(opt_exact(initial, extended) >= opt_exact(initial, sigma));
    }
}

// Exercises the shared library strictly through the public C header.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <listlab/listlab.h>

#include <json.hpp>

#include <cstdio>
#include <memory>
#include <string>

namespace {

using nlohmann::json;

struct AlgorithmDeleter {
    void operator()(lu_algorithm* alg) const { lu_algorithm_free(alg); }
};
using Handle = std::unique_ptr<lu_algorithm, AlgorithmDeleter>;

Handle make(const char* spec, int n) {
    lu_algorithm* raw = nullptr;
    REQUIRE(lu_algorithm_create(spec, n, &raw) == LU_OK);
    return Handle(raw);
}

json call_json(lu_status status, char** payload) {
    REQUIRE(status == LU_OK);
    json parsed = json::parse(*payload);
    lu_string_free(*payload);
    *payload = nullptr;
    return parsed;
}

}  // namespace

TEST_CASE("scalar helpers") {
    int n = 0;
    CHECK(lu_state_item_count("[abc]", &n) == LU_OK);
    CHECK(n == 3);
    CHECK(lu_state_item_count("abc", &n) == LU_ERR_INVALID);
    CHECK(std::string(lu_last_error()).find("bracketed") != std::string::npos);

    long long value = -1;
    CHECK(lu_kendall_distance("[abc]", "[bca]", &value) == LU_OK);
    CHECK(value == 2);
    CHECK(lu_kendall_distance("[abc]", "[ab]", &value) == LU_ERR_INVALID);

    CHECK(lu_access_cost("[abc]", "c", &value) == LU_OK);
    CHECK(value == 2);
    CHECK(lu_access_cost("[abc]", "q", &value) == LU_ERR_INVALID);
}

TEST_CASE("algorithm lifecycle and errors") {
    Handle mtf = make("mtf", 3);
    CHECK(std::string(lu_algorithm_name(mtf.get())) == "mtf");
    CHECK(lu_algorithm_is_randomized(mtf.get()) == 0);

    Handle comb = make("comb", 2);
    CHECK(lu_algorithm_is_randomized(comb.get()) == 1);

    lu_algorithm* raw = nullptr;
    CHECK(lu_algorithm_create("nope", 3, &raw) == LU_ERR_INVALID);
    CHECK(lu_algorithm_create("mtf", 1, &raw) == LU_ERR_INVALID);
    CHECK(lu_algorithm_create(nullptr, 3, &raw) == LU_ERR_INVALID);
    CHECK(lu_algorithm_create("bit", 20, &raw) == LU_OK);  // guard trips at use time
    Handle big(raw);
    char* payload = nullptr;
    CHECK(lu_ratio(big.get(), 2, 0, &payload) == LU_ERR_INVALID);  // needs two items
}

TEST_CASE("simulate") {
    Handle mtf = make("mtf", 3);
    char* payload = nullptr;
    json out = call_json(lu_simulate(mtf.get(), "[abc]", "c", 0, &payload), &payload);
    CHECK(out["cost"] == 2);
    CHECK(out["final"] == "[cab]");

    Handle mtf2 = make("mtf", 2);
    payload = nullptr;
    out = call_json(lu_simulate(mtf2.get(), "[ab]", "", 1, &payload), &payload);
    CHECK(out["cost"] == 0);
    CHECK(out["states"] == json::array({"[ab]"}));

    payload = nullptr;
    CHECK(lu_simulate(mtf.get(), "[ab]", "a", 0, &payload) == LU_ERR_INVALID);  // wrong n
    Handle comb = make("comb", 2);
    CHECK(lu_simulate(comb.get(), "[ab]", "a", 0, &payload) == LU_ERR_INVALID);
    CHECK(std::string(lu_last_error()).find("distribution") != std::string::npos);
}

TEST_CASE("simulate with letters from the initial state") {
    Handle mtf = make("mtf", 2);
    char* payload = nullptr;
    json out = call_json(lu_simulate(mtf.get(), "[yx]", "x^2y", 0, &payload), &payload);
    CHECK(out["final"] == "[yx]");
    CHECK(out["cost"] == 1 + 0 + 1);
}

TEST_CASE("crf tables load from files") {
    std::string path = "capi_table.csv";
    std::FILE* f = std::fopen(path.c_str(), "w");
    REQUIRE(f != nullptr);
    std::fputs("a,1,0\na,2,2\na,3,1\na,4,2\na,*,0\n"
               "b,1,1\nb,2,0\nb,3,1\nb,4,0\nb,*,0\n"
               "c,1,0\nc,2,0\nc,3,1\nc,4,2\nc,*,0\n",
               f);
    std::fclose(f);

    Handle crf = make(("crf:" + path).c_str(), 3);
    char* payload = nullptr;
    json out = call_json(lu_simulate(crf.get(), "[abc]", "abbcab", 0, &payload), &payload);
    CHECK(out["final"] == "[cba]");
    payload = nullptr;
    out = call_json(lu_simulate(crf.get(), "[abc]", "abbcaba", 0, &payload), &payload);
    CHECK(out["final"] == "[acb]");
    std::remove(path.c_str());

    lu_algorithm* raw = nullptr;
    CHECK(lu_algorithm_create("crf:does_not_exist.csv", 3, &raw) == LU_ERR_INVALID);
}

TEST_CASE("seeded bit atoms are deterministic") {
    Handle a = make("bit:seed=99", 4);
    Handle b = make("bit:seed=99", 4);
    char* pa = nullptr;
    char* pb = nullptr;
    json ja = call_json(lu_simulate(a.get(), "[abcd]", "dcbadcba", 0, &pa), &pa);
    json jb = call_json(lu_simulate(b.get(), "[abcd]", "dcbadcba", 0, &pb), &pb);
    CHECK(ja == jb);
}

TEST_CASE("opt") {
    char* payload = nullptr;
    json out = call_json(lu_opt("[abc]", "cbbc", 0, 0, &payload), &payload);
    CHECK(out["cost"] == 4);
    CHECK(out["method"] == "exact");

    payload = nullptr;
    out = call_json(lu_opt("[abc]", "cbbc", 1, 0, &payload), &payload);
    CHECK(out["cost"] == 4);
    CHECK(out["method"] == "pairwise");

    payload = nullptr;
    CHECK(lu_opt("[abcdefg]", "a", 0, 0, &payload) == LU_ERR_GUARD);
    CHECK(std::string(lu_last_error()).find("opt_pairwise_lower") != std::string::npos);
    out = call_json(lu_opt("[abcdefg]", "a", 0, 1, &payload), &payload);
    CHECK(out["cost"] == 0);
}

TEST_CASE("payloads are byte-identical across runs") {
    Handle comb = make("comb", 2);
    char* first = nullptr;
    char* second = nullptr;
    REQUIRE(lu_ratio(comb.get(), 7, 0, &first) == LU_OK);
    REQUIRE(lu_ratio(comb.get(), 7, 0, &second) == LU_OK);
    CHECK(std::string(first) == std::string(second));
    lu_string_free(first);
    lu_string_free(second);
}

TEST_CASE("ratio") {
    Handle mtf = make("mtf", 2);
    char* payload = nullptr;
    json out = call_json(lu_ratio(mtf.get(), 8, 0, &payload), &payload);
    CHECK(out["sup_ratio_num"] == 2);
    CHECK(out["sup_ratio_den"] == 1);
    CHECK(out["vacuous"] == false);

    payload = nullptr;
    out = call_json(lu_ratio(mtf.get(), 0, 0, &payload), &payload);
    CHECK(out["vacuous"] == true);
    CHECK(out["sup_ratio_num"] == 0);
    CHECK(out["sup_ratio_den"] == 1);

    payload = nullptr;
    CHECK(lu_ratio(mtf.get(), 15, 0, &payload) == LU_ERR_GUARD);
}

TEST_CASE("analyze") {
    Handle lmtf = make("lmtf", 3);
    char* payload = nullptr;
    json out = call_json(lu_analyze(lmtf.get(), 3, 6, &payload), &payload);
    CHECK(out["projective"] == false);
    CHECK(out["counterexample"]["sigma"] == "cabc");
    CHECK(out["counterexample"]["pair"] == "bc");
    CHECK_FALSE(out.contains("containers"));

    Handle mtf = make("mtf", 3);
    payload = nullptr;
    out = call_json(lu_analyze(mtf.get(), 3, 5, &payload), &payload);
    CHECK(out["projective"] == true);
    REQUIRE(out.contains("containers"));
    CHECK(out["containers"][0]["class"] == "W+");
    CHECK(out["containers"][0]["members"].size() == 9);
    CHECK(out["containers"][0]["F"]["a^2"] == 2);
    CHECK(out["truncation_ties"] == false);
}

TEST_CASE("lowerbound") {
    Handle mtf = make("mtf", 2);
    char* payload = nullptr;
    std::string csv_path = "capi_states.csv";
    json out = call_json(
        lu_lowerbound(mtf.get(), 3, 2, 2, 0, 1, csv_path.c_str(), &payload), &payload);
    CHECK(out["ratio_num"] == 17);  // (16*2+2)/(10*2+2) = 34/22 = 17/11
    CHECK(out["ratio_den"] == 11);
    CHECK(out["params"]["H"] == 16);
    CHECK(out["good_states"].get<long long>() >= 17);
    REQUIRE(out.contains("table1"));
    CHECK(out["table1"][0]["total"] == 16);
    CHECK(out["table1"][3]["total"] == 18);

    std::FILE* csv = std::fopen(csv_path.c_str(), "r");
    REQUIRE(csv != nullptr);
    char header[64] = {0};
    REQUIRE(std::fgets(header, sizeof header, csv) != nullptr);
    CHECK(std::string(header) == "i,j,good,cost_sum\n");
    std::fclose(csv);
    std::remove(csv_path.c_str());

    payload = nullptr;
    CHECK(lu_lowerbound(mtf.get(), 2, 1, 1, 0, 0, nullptr, &payload) == LU_ERR_INVALID);
}

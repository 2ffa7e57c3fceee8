#include <doctest.h>

#include <algorithm>
#include <random>

#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "twoway/instance.hpp"

using namespace twoway;
using twoway::testing::R;

TEST_CASE("decimal text parses exactly") {
    CHECK(parse_rational("0.08") == Rational(2, 25));
    CHECK(parse_rational("  -3.25 ") == Rational(-13, 4));
    CHECK(parse_rational("7/2") == Rational(7, 2));
    CHECK(parse_rational("1e-3") == Rational(1, 1000));
    CHECK(parse_rational("2.5E2") == Rational(250));
    CHECK(parse_rational(".5") == Rational(1, 2));
    CHECK(parse_rational("008") == Rational(8));
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
}

TEST_CASE("rationals print as terminating decimals or p/q") {
    CHECK(format_rational(R("1.11")) == "1.11");
    CHECK(format_rational(R("2")) == "2");
    CHECK(format_rational(R("2.80")) == "2.8");
    CHECK(format_rational(R("0.005")) == "0.005");
    CHECK(format_rational(Rational(1, 3)) == "1/3");
    CHECK(format_rational(Rational(-1, 8)) == "-0.125");
    CHECK(format_double(1.0 / 3.0) == "0.333333333333");
}

TEST_CASE("weights reject negatives and mix modes as float") {
    CHECK_THROWS_AS(Weight(R("-0.1")), std::domain_error);
    CHECK_THROWS_AS(Weight(-1.0), std::domain_error);
    CHECK_THROWS_AS(Weight(R("0.1")) - Weight(R("0.2")), std::domain_error);

    Weight a(R("0.1"));
    Weight b(R("0.2"));
    CHECK((a + b) == Weight(R("0.3")));
    CHECK((a + b).is_exact());
    Weight f = a + Weight(0.2);
    CHECK(f.mode() == ArithmeticMode::Float);
    CHECK(approx_equal(f, Weight(0.3)));
    CHECK(a < b);
    CHECK_THROWS_AS(Weight(0.5).exact(), std::logic_error);
}

TEST_CASE("parse_instance reads a full-variant instance") {
    const auto inst = parse_instance(R"({"keys": [1,3,5,7], "beta": [0.08,0.02,0.08,0.33],
                                        "alpha": [0.15,0.21,0.08,0.04,0.01]})");
    CHECK(inst.variant() == Variant::Full);
    CHECK(inst.size() == 4);
    CHECK(inst.key_weight(1) == R("0.08"));
    CHECK(inst.gap_weight(4) == R("0.01"));
    CHECK(inst == testing::fixture_instance("four_keys.inst"));
}

TEST_CASE("parse_instance reads a successful-variant instance") {
    const auto inst =
        parse_instance(R"({"variant": "successful", "keys": [1,3,5,7], "beta": ["0.005","0.9","0.09","0.005"]})");
    CHECK(inst.variant() == Variant::Successful);
    CHECK(inst.size() == 4);
    CHECK(inst.alpha() == std::vector<Rational>(5, Rational(0)));
}

TEST_CASE("parse_instance rejects invalid documents") {
    auto rejects = [](const char* doc, const char* message) {
        try {
            parse_instance(doc);
            FAIL("accepted " << doc);
        } catch (const InstanceError& e) {
            CHECK(std::string(e.what()).find(message) != std::string::npos);
        }
    };
    rejects(R"({"keys": [3,1], "beta": [1,1], "alpha": [0,0,0]})", "keys not strictly increasing");
    rejects(R"({"keys": [1,1], "beta": [1,1], "alpha": [0,0,0]})", "keys not strictly increasing");
    rejects(R"({"keys": [1,2], "beta": ["-0.1",1], "alpha": [0,0,0]})", "negative weight");
    rejects(R"({"keys": [1,2], "beta": [1], "alpha": [0,0,0]})", "length mismatch");
    rejects(R"({"keys": [1,2], "beta": [1,1], "alpha": [0,0]})", "length mismatch");
    rejects(R"({"keys": [1,2], "beta": [1,1})", "malformed");
    rejects(R"({"keys": [1], "beta": ["x"], "alpha": [0,0]})", "malformed number");
    rejects(R"({"variant": "successful", "keys": [], "beta": []})", "at least one key");
    rejects(R"({"variant": "successful", "keys": [1], "beta": [1], "alpha": [0,0]})", "not allowed");
    rejects(R"({"keys": [1], "beta": [1]})", "missing field 'alpha'");
    rejects(R"({"keys": [1], "beta": [1], "alpha": [0,0], "gamma": 1})", "unknown field");
    rejects(R"({"variant": "partial", "keys": [1], "beta": [1], "alpha": [0,0]})", "unknown variant");
}

TEST_CASE("empty full instance is legal") {
    const auto inst = parse_instance(R"({"keys": [], "beta": [], "alpha": ["0.7"]})");
    CHECK(inst.size() == 0);
    CHECK(total_weight(inst) == Weight(R("0.7")));
}

TEST_CASE("rank permutation orders by weight, ties by index") {
    SUBCASE("four keys") {
        const auto pi = rank_permutation(testing::fixture_instance("four_keys.inst"));
        CHECK(pi.key_at(1) == 2);
        CHECK(pi.key_at(2) == 1);
        CHECK(pi.key_at(3) == 3);
        CHECK(pi.key_at(4) == 4);
        CHECK(pi.rank_of(2) == 1);
    }
    SUBCASE("single key") {
        const auto pi = rank_permutation(Instance::successful({R("4")}, {R("0.5")}));
        CHECK(pi.key_at(1) == 1);
    }
    SUBCASE("all equal weights give the identity") {
        const auto pi = rank_permutation(Instance::successful({1, 2, 3, 4, 5}, std::vector<Rational>(5, R("0.2"))));
        for (int r = 1; r <= 5; ++r) CHECK(pi.key_at(r) == r);
    }
}

TEST_CASE("total weight of the reference instances") {
    CHECK(total_weight(testing::fixture_instance("four_keys.inst")) == Weight(R("1")));
    CHECK(total_weight(testing::fixture_instance("skewed.inst")) == Weight(R("1")));
}

TEST_CASE("property: serialize then parse is the identity") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        const int n = static_cast<int>(rng() % 8);
        Instance inst = testing::random_full(rng, n, testing::style_for(t));
        if (t % 4 == 0) inst = inst.scaled(Rational(1, 3)); // non-terminating decimals
        const std::string text = serialize_instance(inst);
        CHECK(parse_instance(text) == inst);
        CHECK(serialize_instance(parse_instance(text)) == text);
    }
    const auto succ = testing::fixture_instance("skewed.inst");
    CHECK(parse_instance(serialize_instance(succ)) == succ);
}

TEST_CASE("property: rank permutation is a weight-ordered bijection") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const auto inst = testing::random_successful(rng, n, testing::style_for(t));
        const RankPermutation pi(inst);
        std::vector<int> seen;
        for (int r = 1; r <= n; ++r) {
            const int b = pi.key_at(r);
            seen.push_back(b);
            CHECK(pi.rank_of(b) == r);
            if (r > 1) {
                const int prev = pi.key_at(r - 1);
                CHECK(inst.key_weight(prev) <= inst.key_weight(b));
                if (inst.key_weight(prev) == inst.key_weight(b)) CHECK(prev < b);
            }
        }
        std::sort(seen.begin(), seen.end());
        for (int b = 1; b <= n; ++b) CHECK(seen[static_cast<std::size_t>(b - 1)] == b);
    }
}

TEST_CASE("property: total weight ignores order-preserving key relabelling") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 50; ++t) {
        const int n = static_cast<int>(rng() % 8);
        const auto inst = testing::random_full(rng, n, testing::style_for(t));
        std::vector<Rational> relabelled;
        for (const auto& k : inst.keys()) relabelled.push_back(k * 10 + Rational(1, 7));
        const auto moved = Instance::full(relabelled, inst.beta(), inst.alpha());
        CHECK(total_weight(moved) == total_weight(inst));
    }
}

#include <seifert/census.hpp>
#include <seifert/taut.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace seifert;

TEST_CASE("zero euler number is out of scope", "[taut]") {
    auto v = decide_taut(parse_invariant("(-1; 1/2, 1/2)"));
    CHECK(v.tag == VerdictTag::NotApplicable);
    CHECK(v.reason == VerdictReason::NotQHSInput);
}

TEST_CASE("fewer than three fibers never admits", "[taut]") {
    auto v = decide_taut(parse_invariant("(0; 1/2, 1/2)"));
    CHECK(v.tag == VerdictTag::NoTautC0);
    CHECK(v.reason == VerdictReason::SmallN);
    CHECK(decide_taut(parse_invariant("(-1; 1/3)")).tag == VerdictTag::NoTautC0);
    CHECK(decide_taut(parse_invariant("(2;)")).tag == VerdictTag::NoTautC0);
}

TEST_CASE("b0 outside the unit interval range", "[taut]") {
    auto v3 = decide_taut(parse_invariant("(0; 2/3, 1/2, 1/3)"));
    CHECK(v3.tag == VerdictTag::NoTautC0); // three fibers sharpen the verdict
    CHECK(v3.reason == VerdictReason::Ehn2OutOfRange);

    auto v4 = decide_taut(parse_invariant("(0; 1/2, 1/3, 1/5, 1/7)"));
    CHECK(v4.tag == VerdictTag::NoTautC2);
    CHECK(v4.reason == VerdictReason::Ehn2OutOfRange);

    auto vbig = decide_taut(parse_invariant("(-4; 1/2, 1/3, 1/5, 1/7)"));
    CHECK(vbig.tag == VerdictTag::NoTautC2);
    CHECK(vbig.reason == VerdictReason::Ehn2OutOfRange);
}

TEST_CASE("interior b0 admits at once", "[taut]") {
    auto m = solve_zhs({2, 3, 5, 7}, +1); // lands on b0 = 2 for both signs
    REQUIRE(m.b0() == 2);
    auto v = decide_taut(m);
    CHECK(v.tag == VerdictTag::AdmitsTautAnalytic);
    CHECK(v.reason == VerdictReason::Ehn1);
    CHECK_FALSE(v.witness.has_value());
}

TEST_CASE("b0 = 1 runs the witness search", "[taut]") {
    auto found = decide_taut(parse_invariant("(-1; 1/2, 1/3, 1/7)"));
    CHECK(found.tag == VerdictTag::AdmitsTautAnalytic);
    CHECK(found.reason == VerdictReason::PropertyStarFound);
    REQUIRE(found.witness.has_value());
    CHECK(*found.witness == PropertyStarWitness{5, 2});
    CHECK_FALSE(found.flipped);

    auto poincare = decide_taut(parse_invariant("(-1; 1/2, 1/3, 1/5)"));
    CHECK(poincare.tag == VerdictTag::NoTautC0);
    CHECK(poincare.reason == VerdictReason::PropertyStarEmpty);
    CHECK_FALSE(poincare.witness.has_value());

    auto empty4 = decide_taut(parse_invariant("(-1; 3/5, 1/2, 1/4, 1/5)"));
    CHECK(empty4.tag == VerdictTag::NoTautC2); // four fibers keep C2 only
    CHECK(empty4.reason == VerdictReason::PropertyStarEmpty);
}

TEST_CASE("b0 = n-1 reduces by reversing orientation", "[taut]") {
    auto v = decide_taut(parse_invariant("(-2; 1/2, 2/3, 6/7)"));
    CHECK(v.tag == VerdictTag::AdmitsTautAnalytic);
    CHECK(v.reason == VerdictReason::PropertyStarFound);
    CHECK(v.flipped);
    REQUIRE(v.witness.has_value());
    CHECK(*v.witness == PropertyStarWitness{5, 2});

    auto p = decide_taut(parse_invariant("(-2; 1/2, 2/3, 4/5)"));
    CHECK(p.tag == VerdictTag::NoTautC0);
    CHECK(p.flipped);
}

TEST_CASE("unnormalized input is accepted", "[taut]") {
    auto v = decide_taut(make_invariant(-2, {{3, 2}, {1, 3}, {1, 7}}));
    CHECK(v.tag == VerdictTag::AdmitsTautAnalytic); // same space as (-1; 1/2, 1/3, 1/7)
    REQUIRE(v.witness.has_value());
    CHECK(*v.witness == PropertyStarWitness{5, 2});
}

TEST_CASE("the verdict is orientation invariant", "[taut][property]") {
    std::mt19937 rng(20230405);
    std::uniform_int_distribution<long long> euler(-4, 2);
    std::uniform_int_distribution<long long> den(2, 9);
    std::uniform_int_distribution<int> count(3, 5);
    for (int i = 0; i < 300; ++i) {
        std::vector<std::pair<Int, Int>> raw;
        int n = count(rng);
        for (int k = 0; k < n; ++k) {
            long long a = den(rng);
            std::uniform_int_distribution<long long> num(1, a - 1);
            long long b = num(rng);
            long long g = std::gcd(b, a);
            raw.emplace_back(b / g, a / g);
        }
        auto m = normalize(make_invariant(euler(rng), std::move(raw)));
        if (euler_number(m).is_zero()) continue;
        auto v = decide_taut(m);
        auto w = decide_taut(flip(m));
        CHECK(v.tag == w.tag);
    }
}

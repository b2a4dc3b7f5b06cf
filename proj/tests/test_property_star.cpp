#include <seifert/property_star.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <random>
#include <vector>

using namespace seifert;

namespace {

std::vector<Rational> triple(long long b1, long long a1, long long b2, long long a2,
                             long long b3, long long a3) {
    return {Rational(b1, a1), Rational(b2, a2), Rational(b3, a3)};
}

// Exhaustive reference search over an enlarged m range, with no shortcuts:
// tries every alpha instead of interval arithmetic.
std::optional<PropertyStarWitness> brute_force(const std::vector<Rational>& coeffs,
                                               const Int& m_cap) {
    for (Int m = 2; m <= m_cap; ++m)
        for (Int alpha = 1; alpha < m; ++alpha) {
            PropertyStarWitness w{m, alpha};
            if (property_star_holds(coeffs, w)) return w;
        }
    return std::nullopt;
}

} // namespace

TEST_CASE("property holds on strict inequalities only", "[property-star]") {
    auto c = triple(1, 2, 1, 3, 1, 7);
    CHECK(property_star_holds(c, {5, 2}));
    CHECK_FALSE(property_star_holds(c, {2, 1}));  // c1 = (m-alpha)/m exactly
    CHECK_FALSE(property_star_holds(c, {3, 1}));  // c2 = alpha/m exactly
    CHECK_FALSE(property_star_holds(c, {7, 3}));  // c3 = 1/m exactly
    CHECK(property_star_holds(triple(2, 5, 1, 3, 1, 4), {2, 1}));
}

TEST_CASE("witness and coefficient validation", "[property-star]") {
    auto c = triple(1, 2, 1, 3, 1, 7);
    CHECK_THROWS_AS(property_star_holds(c, {0, 0}), Error);
    CHECK_THROWS_AS(property_star_holds(c, {3, 3}), Error);
    CHECK_THROWS_AS(property_star_holds(c, {3, -1}), Error);
    CHECK_THROWS_AS(property_star_holds({Rational(1, 2), Rational(1, 3)}, {5, 2}), Error);
    CHECK_THROWS_AS(property_star_holds(triple(1, 3, 1, 2, 1, 7), {5, 2}), Error); // unsorted
    CHECK_THROWS_AS(property_star_holds(triple(3, 2, 1, 3, 1, 7), {5, 2}), Error); // >= 1
    std::vector<Rational> zero{Rational(1, 2), Rational(1, 3), Rational()};
    CHECK_THROWS_AS(property_star_holds(zero, {5, 2}), Error);
}

TEST_CASE("search bound comes from the third coefficient", "[property-star]") {
    CHECK(witness_search_bound(triple(1, 2, 1, 3, 1, 5)) == 4);
    CHECK(witness_search_bound(triple(1, 2, 1, 3, 1, 7)) == 6);
    CHECK(witness_search_bound(triple(1, 2, 1, 3, 2, 7)) == 3);
}

TEST_CASE("search finds the smallest witness or proves none", "[property-star]") {
    CHECK(search_witness(triple(1, 2, 1, 3, 1, 7)) == PropertyStarWitness{5, 2});
    CHECK(search_witness(triple(2, 5, 1, 3, 1, 4)) == PropertyStarWitness{2, 1});
    CHECK(search_witness(triple(1, 2, 2, 5, 1, 9)) == PropertyStarWitness{7, 3});
    CHECK_FALSE(search_witness(triple(1, 2, 1, 3, 1, 5)).has_value());
    CHECK_FALSE(search_witness(triple(2, 3, 2, 3, 2, 3)).has_value());
}

TEST_CASE("search agrees with a widened brute force", "[property-star][property]") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<long long> den(2, 24);
    int found = 0, empty = 0;
    for (int i = 0; i < 400; ++i) {
        std::vector<Rational> c;
        for (int k = 0; k < 3; ++k) {
            long long a = den(rng);
            std::uniform_int_distribution<long long> num(1, a - 1);
            c.push_back(Rational(num(rng), a));
        }
        std::sort(c.begin(), c.end(), [](const Rational& x, const Rational& y) { return y < x; });

        Int cap = witness_search_bound(c) * 10 + 10;
        auto fast = search_witness(c);
        auto slow = brute_force(c, cap);
        if (fast.has_value()) {
            ++found;
            REQUIRE(slow.has_value());
            // Both searches scan m ascending, alpha ascending: equal pairs.
            CHECK(fast->m == slow->m);
            CHECK(fast->alpha == slow->alpha);
            CHECK(property_star_holds(c, *fast));
        } else {
            ++empty;
            CHECK_FALSE(slow.has_value());
        }
    }
    // Both outcomes must actually occur for the comparison to mean anything.
    CHECK(found > 50);
    CHECK(empty > 50);
}

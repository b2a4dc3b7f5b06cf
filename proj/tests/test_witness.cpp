#include <seifert/census.hpp>
#include <seifert/witness.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace seifert;

namespace {

Rational rat(long long n, long long d) { return Rational(n, d); }

WitnessTrace run(const std::string& text) { return construct_witness(parse_invariant(text)); }

} // namespace

TEST_CASE("tail merging", "[witness]") {
    auto less = reduce_to_three({rat(1, 2), rat(1, 3), rat(1, 7), rat(1, 8)});
    CHECK(less.step1 == Step1Case::MergedLess);
    CHECK(less.c1 == rat(1, 2));
    CHECK(less.c2 == rat(1, 3));
    CHECK(less.c3 == rat(15, 56));

    auto greater = reduce_to_three({rat(1, 2), rat(1, 8), rat(1, 9), rat(1, 10)});
    CHECK(greater.step1 == Step1Case::MergedGreater);
    CHECK(greater.c2 == rat(19, 90));
    CHECK(greater.c3 == rat(1, 8));

    auto plain = reduce_to_three({rat(1, 2), rat(1, 3), rat(1, 7)});
    CHECK(plain.step1 == Step1Case::None);

    // merged tail hitting the second entry exactly, overtaking the first,
    // or reaching 1 are all rejected
    CHECK_THROWS_AS(reduce_to_three({rat(1, 2), rat(1, 4), rat(1, 8), rat(1, 8)}), Error);
    CHECK_THROWS_AS(reduce_to_three({rat(1, 3), rat(1, 3), rat(1, 3), rat(1, 5), rat(1, 7)}),
                    Error);
    CHECK_THROWS_AS(reduce_to_three({rat(3, 4), rat(2, 3), rat(1, 2), rat(1, 2)}), Error);
}

TEST_CASE("base quantities", "[witness]") {
    auto q = base_quantities({rat(6, 11), rat(1, 4), rat(1, 5), Step1Case::None});
    CHECK(q.alpha1 == rat(5, 11));
    CHECK(q.alpha2 == rat(1, 4));
    CHECK(q.a == 44);
    CHECK(q.b == 9);
    CHECK(q.N == 4);
    CHECK_FALSE(q.n_alpha1_integral);
    CHECK(q.r == rat(9, 11));
    CHECK(q.r_prime == rat(8, 9));
    CHECK(q.r_second == rat(2, 9));

    CHECK_THROWS_AS(base_quantities({rat(2, 5), rat(1, 3), rat(1, 4), Step1Case::None}), Error);
    CHECK_THROWS_AS(base_quantities({rat(1, 2), rat(1, 7), rat(1, 3), Step1Case::None}), Error);
    CHECK_THROWS_AS(base_quantities({rat(2, 3), rat(1, 2), rat(1, 8), Step1Case::None}), Error);
}

TEST_CASE("bezout pairs", "[witness]") {
    CHECK(bezout_uv(26, 3) == std::pair<Int, Int>{2, 17});
    CHECK(bezout_uv(44, 9) == std::pair<Int, Int>{8, 39});
    CHECK(bezout_uv(12, 1) == std::pair<Int, Int>{1, 11});
    CHECK(bezout_uv(10, 3) == std::pair<Int, Int>{1, 3});
    CHECK_THROWS_AS(bezout_uv(10, 4), Error);
    CHECK_THROWS_AS(bezout_uv(3, 3), Error);

    std::mt19937 rng(99);
    std::uniform_int_distribution<long long> pick(1, 400);
    for (int i = 0; i < 500; ++i) {
        long long a = pick(rng) + 1, b = pick(rng) % a;
        if (b < 1 || std::gcd(a, b) != 1) continue;
        auto [u, v] = bezout_uv(a, b);
        CHECK(Int(a) * u - Int(b) * v == 1);
        CHECK(u >= 1);
        CHECK(u <= b);
        CHECK(v >= 0);
        CHECK(v < a);
    }
}

// Each construction branch on a genuine integral homology sphere that lands
// in it, checked against the frozen pair and the independent search.
TEST_CASE("construction branches", "[witness]") {
    struct Vector {
        const char* input;
        Branch branch;
        long long m, alpha;
    };
    const Vector vectors[] = {
        {"(-1; 1/2, 1/3, 1/7)", Branch::BEquals1, 5, 2},
        {"(-1; 1/2, 2/7, 1/5)", Branch::CaseA, 3, 1},
        {"(-1; 2/3, 1/5, 1/8)", Branch::CaseB, 7, 2},
        {"(-1; 6/11, 1/4, 1/5)", Branch::CaseC, 3, 1},
        {"(-1; 1/2, 5/13, 2/17)", Branch::CaseI_A, 7, 3},
        {"(-1; 3/5, 1/4, 2/13)", Branch::CaseI_B, 6, 2},
        {"(-1; 6/11, 1/4, 8/39)", Branch::CaseI_C, 3, 1},
        {"(-1; 2/3, 1/4, 1/11)", Branch::CaseII_bGtHalf, 10, 3},
        {"(-1; 1/2, 1/3, 2/11)", Branch::CaseII_b2Eq1, 5, 2},
        {"(-1; 1/2, 2/5, 1/9)", Branch::CaseII_b2Ge2, 7, 3},
        {"(-1; 1/2, 4/13, 1/5)", Branch::CaseIII_general, 3, 1},
        {"(-1; 2/5, 1/3, 1/4)", Branch::AllBelowHalf, 2, 1},
    };
    for (const auto& vec : vectors) {
        INFO(vec.input);
        auto m = parse_invariant(vec.input);
        REQUIRE(homology_class(m).tag == HomologyTag::ZHS);
        auto tr = construct_witness(m);
        CHECK(tr.branch == vec.branch);
        CHECK(tr.result == PropertyStarWitness{vec.m, vec.alpha});
        CHECK(tr.verified);
        CHECK_FALSE(tr.flipped);
        CHECK(property_star_holds(sorted_coefficients(m), tr.result));
    }
}

TEST_CASE("trace details on a positive-sign run", "[witness]") {
    auto tr = run("(-1; 1/2, 5/13, 2/17)");
    CHECK(tr.epsilon == 1);
    CHECK(tr.step1 == Step1Case::None);
    REQUIRE(tr.quantities.has_value());
    CHECK(tr.quantities->a == 26);
    CHECK(tr.quantities->b == 3);
    CHECK(tr.quantities->N == 8);
    REQUIRE(tr.bezout.has_value());
    CHECK(tr.bezout->u == 2);
    CHECK(tr.bezout->v == 17);
    CHECK(tr.bezout->p == 0);
}

TEST_CASE("negative-sign run carries no bezout data", "[witness]") {
    auto tr = run("(-1; 1/2, 2/7, 1/5)");
    CHECK(tr.epsilon == -1);
    REQUIRE(tr.quantities.has_value());
    CHECK_FALSE(tr.bezout.has_value());
}

TEST_CASE("b0 = n-1 is flipped first", "[witness]") {
    auto tr = run("(-2; 1/2, 2/3, 6/7)");
    CHECK(tr.flipped);
    CHECK(tr.epsilon == -1); // sign of the flipped presentation
    CHECK(tr.branch == Branch::BEquals1);
    CHECK(tr.result == PropertyStarWitness{5, 2});
}

TEST_CASE("merged tails still construct", "[witness]") {
    auto tr = run("(-1; 1/2, 1/3, 1/7, 1/43)");
    CHECK((homology_class(parse_invariant("(-1; 1/2, 1/3, 1/7, 1/43)")).tag ==
           HomologyTag::ZHS));
    CHECK(tr.step1 != Step1Case::None);
    CHECK(tr.verified);
}

TEST_CASE("named exclusions", "[witness]") {
    auto kind_of = [](const char* text) {
        try {
            construct_witness(parse_invariant(text));
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::IoError; // anything that is not an exclusion
    };
    CHECK(kind_of("(-1; 1/2, 1/3, 1/5)") == ErrorKind::PoincareExcluded);
    CHECK(kind_of("(-2; 1/2, 2/3, 4/5)") == ErrorKind::PoincareExcluded);
    CHECK(kind_of("(0; 1/2, 1/2)") == ErrorKind::NotZHS);
    CHECK(kind_of("(-1; 1/2)") == ErrorKind::SphereExcluded);
    // both orientations of this sphere sit at b0 = 2, out of the construction's reach
    REQUIRE(solve_zhs({2, 3, 5, 7}, +1) == parse_invariant("(-2; 1/2, 1/3, 3/5, 4/7)"));
    CHECK(kind_of("(-2; 1/2, 1/3, 3/5, 4/7)") == ErrorKind::WrongB0);
}

TEST_CASE("unreachable small-tail branch works when forced", "[witness]") {
    // No integral sphere triple can reach this branch: its guard demands
    // c2 < 1/v while the Bezout ray forces the third coefficient above it.
    // The construction itself is still sound on synthetic sorted input.
    ReductionTriple t{rat(1, 2), rat(1, 5), rat(1, 7), Step1Case::None};
    auto q = base_quantities(t);
    auto [w, branch] = witness_eps_plus(t, q);
    CHECK(branch == Branch::CaseIII_smallAlpha2);
    CHECK(w == PropertyStarWitness{3, 1});
    CHECK(property_star_holds({t.c1, t.c2, t.c3}, w));
}

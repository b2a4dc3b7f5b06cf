#include <seifert/classify.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace seifert;

TEST_CASE("homology classes", "[classify]") {
    SECTION("integral, positive sign") {
        auto h = homology_class(parse_invariant("(-1; 1/2, 1/3, 1/5)"));
        CHECK(h.tag == HomologyTag::ZHS);
        CHECK(h.epsilon == 1);
        CHECK(h.euler == Rational(1, 30));
    }
    SECTION("integral, negative sign") {
        auto h = homology_class(parse_invariant("(-1; 1/2, 1/3, 1/7)"));
        CHECK(h.tag == HomologyTag::ZHS);
        CHECK(h.epsilon == -1);
        CHECK(h.euler == Rational(-1, 42));
    }
    SECTION("rational but not integral") {
        auto h = homology_class(parse_invariant("(0; 1/2, 1/2)"));
        CHECK(h.tag == HomologyTag::NonIntegralQHS);
        CHECK(h.euler == Rational(1));
    }
    SECTION("euler number zero") {
        auto h = homology_class(parse_invariant("(-1; 1/2, 1/2)"));
        CHECK(h.tag == HomologyTag::NotQHS);
    }
    SECTION("requires a normalized invariant") {
        CHECK_THROWS_AS(homology_class(make_invariant(0, {{-1, 3}})), Error);
    }
}

TEST_CASE("geometry by the base characteristic", "[classify]") {
    auto spherical = geometry(parse_invariant("(-1; 1/2, 1/3, 1/5)"));
    CHECK(spherical.tag == GeometryTag::Spherical);
    CHECK(spherical.chi == Rational(1, 30));

    auto nil = geometry(parse_invariant("(0; 1/2, 1/3, 1/6)"));
    CHECK(nil.tag == GeometryTag::Nil);
    CHECK(nil.chi == Rational());

    auto hyp = geometry(parse_invariant("(-1; 1/2, 1/3, 1/7)"));
    CHECK(hyp.tag == GeometryTag::SL2R);
    CHECK(hyp.chi == Rational(-1, 42));

    CHECK_THROWS_AS(geometry(parse_invariant("(-1; 1/2, 1/2)")), Error); // e = 0
    CHECK_THROWS_AS(geometry(parse_invariant("(0; 1/2, 1/2)")), Error);  // n < 3
    try {
        geometry(parse_invariant("(0; 1/2, 1/2)"));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::GeometryNotApplicable);
    }
}

TEST_CASE("exceptional detection", "[classify]") {
    CHECK(detect_exceptional(parse_invariant("(-1; 1/2)")) == ExceptionalType::SphereLike);
    CHECK(detect_exceptional(parse_invariant("(0; 1/2, 1/2)")) == ExceptionalType::LensLike);
    CHECK(detect_exceptional(parse_invariant("(-1; 1/2, 1/3, 1/5)")) ==
          ExceptionalType::Poincare);
    CHECK(detect_exceptional(parse_invariant("(-2; 1/2, 2/3, 4/5)")) ==
          ExceptionalType::Poincare); // reversed orientation
    CHECK(detect_exceptional(parse_invariant("(-1; 1/2, 1/3, 1/7)")) ==
          ExceptionalType::Generic);
    CHECK(detect_exceptional(parse_invariant("(-1; 1/2, 1/3, 1/5, 1/7)")) ==
          ExceptionalType::Generic); // {2,3,5} needs exactly three fibers
}

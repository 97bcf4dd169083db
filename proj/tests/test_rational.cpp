#include "bigolin/rational.hpp"

#include <doctest.h>

#include <random>

using namespace bigolin;

namespace {

GaussianRational random_value(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 7);
    return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

} // namespace

TEST_CASE("canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(0, 5).denominator() == 1);
    CHECK(Rational(7).str() == "7");
}

TEST_CASE("arithmetic identities") {
    GaussianRational one(1), i = GaussianRational::i();
    CHECK(one * i == i);
    GaussianRational z{Rational(1), Rational(1)};
    CHECK(z * z.conj() == GaussianRational(2));
    GaussianRational w{Rational(1, 2), Rational(1, 3)};
    CHECK(w + w.conj() == GaussianRational(1));
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        GaussianRational a = random_value(rng), b = random_value(rng), c = random_value(rng);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a * b).conj() == a.conj() * b.conj());
        REQUIRE(a.conj().conj() == a);
        Rational n = (a * a.conj()).re;
        REQUIRE((a * a.conj()).im.is_zero());
        REQUIRE(n.sign() >= 0);
        if (!a.is_zero()) REQUIRE(a * a.inverse() == GaussianRational(1));
    }
}

TEST_CASE("division") {
    GaussianRational z{Rational(5, 7), Rational(-2)};
    CHECK(z.conj().conj() == z);
    CHECK(GaussianRational::checked_div(z, GaussianRational(0)) == std::nullopt);
    auto q = GaussianRational::checked_div(GaussianRational(1), GaussianRational::i());
    REQUIRE(q.has_value());
    CHECK(*q == -GaussianRational::i());
}

TEST_CASE("text serialization") {
    CHECK(GaussianRational(Rational(1, 2), Rational(1, 3)).str() == "1/2+1/3i");
    CHECK(GaussianRational(Rational(1, 2), Rational(-1, 3)).str() == "1/2-1/3i");
    CHECK(GaussianRational(Rational(0), Rational(1)).str() == "1i");
    CHECK(GaussianRational(Rational(-2)).str() == "-2");

    for (const char* text : {"1/2+1/3i", "-1", "0", "1i", "-i", "i", "2/3i", "-5/7-2i", "4"}) {
        auto v = GaussianRational::parse(text);
        REQUIRE_MESSAGE(v.has_value(), text);
        auto round = GaussianRational::parse(v->str());
        REQUIRE(round.has_value());
        CHECK(*round == *v);
    }
    CHECK(!GaussianRational::parse("").has_value());
    CHECK(!GaussianRational::parse("1/0").has_value());
    CHECK(!GaussianRational::parse("1+").has_value());
    CHECK(!GaussianRational::parse("1 + 2i").has_value());
    CHECK(!GaussianRational::parse("2i+1").has_value());
}

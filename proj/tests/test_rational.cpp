#include <doctest.h>

#include <random>
#include <sstream>

#include "diagcop/error.hpp"
#include "diagcop/rational.hpp"

using diagcop::BigRational;
using diagcop::Rational;

TEST_CASE("parsing fractions and decimals") {
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse(" -2/4 ") == Rational(-1, 2));
    CHECK(Rational::parse("0.1625") == Rational(13, 80));
    CHECK(Rational::parse("-1.5e-1") == Rational(-3, 20));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("1/3").str() == "1/3");
    for (const char* bad : {"", "1/0", "abc", "1/-3", "0.1.2", "--1"})
        CHECK_THROWS_AS(Rational::parse(bad), diagcop::Error);
}

TEST_CASE("overflowing products stay exact") {
    const std::int64_t big = std::int64_t(1) << 61;
    Rational a(big - 1, 3), b(big + 1, 5);
    BigRational ref = BigRational(big - 1, 3) * BigRational(big + 1, 5);
    Rational p = a * b;
    CHECK_FALSE(p.is_small());
    CHECK(p == Rational(ref));
    CHECK((p / b) == a);
    CHECK(((p - p) + a) == a);
    CHECK((p / b).is_small());
}

TEST_CASE("arithmetic agrees with the multiprecision reference") {
    std::mt19937_64 eng(42);
    std::uniform_int_distribution<std::int64_t> num(-(std::int64_t(1) << 40), std::int64_t(1) << 40);
    std::uniform_int_distribution<std::int64_t> den(1, std::int64_t(1) << 40);
    for (int i = 0; i < 2000; ++i) {
        auto an = num(eng), ad = den(eng), bn = num(eng), bd = den(eng);
        Rational a(an, ad), b(bn, bd);
        BigRational ra(an, ad), rb(bn, bd);
        CHECK(a + b == Rational(ra + rb));
        CHECK(a - b == Rational(ra - rb));
        CHECK(a * b == Rational(ra * rb));
        if (bn != 0) CHECK(a / b == Rational(ra / rb));
        CHECK((a < b) == (ra < rb));
    }
}

TEST_CASE("lowest terms and printing") {
    Rational r(-6, -8);
    CHECK(r.num() == 3);
    CHECK(r.den() == 4);
    std::ostringstream s;
    s << Rational(10, -4);
    CHECK(s.str() == "-5/2");
    CHECK(Rational(13, 80).to_double() == doctest::Approx(0.1625));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <random>

#include "k3dyn/exactnum.hpp"

using namespace k3dyn;

namespace {

using Dec = boost::multiprecision::cpp_dec_float_100;

QuadExt rand_qe(std::mt19937_64& rng, std::int64_t d) {
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 10000);
    BigRational p(num(rng), den(rng)), q(num(rng), den(rng));
    if (q == 0) return QuadExt(p);
    return QuadExt(p, q, d);
}

Dec to_dec(const BigRational& r) {
    return Dec(numerator(r).str()) / Dec(denominator(r).str());
}

int dec_sign(const QuadExt& x) {
    Dec v = to_dec(x.rat());
    if (x.disc() != 0) v += to_dec(x.rad()) * sqrt(Dec(x.disc()));
    if (v > Dec("1e-80")) return 1;
    if (v < Dec("-1e-80")) return -1;
    return 0;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/6") == BigRational(1, 2));
    CHECK(parse_rational("-14") == BigRational(-14));
    CHECK(rational_to_string(BigRational(-3, 7)) == "-3/7");
    CHECK(rational_to_string(BigRational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("2x"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("construction rules") {
    CHECK_THROWS_AS(QuadExt(BigRational(1), BigRational(1), 12), Error);
    CHECK_THROWS_AS(QuadExt(BigRational(1), BigRational(1), 1), Error);
    // q = 0 normalizes to the purely rational representation.
    QuadExt z(BigRational(7), BigRational(0), 5);
    CHECK(z.is_rational());
    CHECK(z == QuadExt(7));
    // Cross-field zeros compare equal.
    QuadExt a = QuadExt::sqrt_of(3) - QuadExt::sqrt_of(3);
    QuadExt b = QuadExt::sqrt_of(5) - QuadExt::sqrt_of(5);
    CHECK(a == b);
    CHECK(a.is_zero());
}

TEST_CASE("arithmetic identities from the built-in constants") {
    QuadExt beta_ab(BigRational(2), BigRational(1), 3);
    CHECK(beta_ab * beta_ab.conjugate() == QuadExt(1));
    CHECK(beta_ab.pow(2) == QuadExt(BigRational(7), BigRational(4), 3));

    QuadExt beta_c(BigRational(3, 2), BigRational(1, 2), 5);
    CHECK(beta_c.pow(3) == QuadExt(BigRational(9), BigRational(4), 5));

    QuadExt a(BigRational(-3, 2), BigRational(1, 2), 5);
    CHECK(a + QuadExt(2) == QuadExt(BigRational(1, 2), BigRational(1, 2), 5));
}

TEST_CASE("incompatible fields and division by zero") {
    CHECK_THROWS_AS(QuadExt::sqrt_of(2) + QuadExt::sqrt_of(3), IncompatibleField);
    CHECK_THROWS_AS(QuadExt::sqrt_of(2) * QuadExt::sqrt_of(3), IncompatibleField);
    CHECK_THROWS_AS(QuadExt(1) / QuadExt(0), DivisionByZero);
    CHECK_THROWS_AS(QuadExt(0).inverse(), DivisionByZero);
    // Rationals mix freely with any field.
    CHECK(QuadExt(2) * QuadExt::sqrt_of(7) ==
          QuadExt(BigRational(0), BigRational(2), 7));
}

TEST_CASE("exact sign") {
    CHECK(QuadExt(BigRational(-3, 2), BigRational(1, 2), 5).sign() == -1);
    CHECK(QuadExt(0).sign() == 0);
    CHECK(QuadExt(BigRational(-4), BigRational(2), 5).sign() == 1);
    // Near-miss convergents of √3: 1351/780 > √3 > 265/153.
    CHECK((QuadExt(BigRational(1351, 780)) - QuadExt::sqrt_of(3)).sign() == 1);
    CHECK((QuadExt(BigRational(265, 153)) - QuadExt::sqrt_of(3)).sign() == -1);
}

TEST_CASE("decimal embedding") {
    QuadExt beta_ab(BigRational(2), BigRational(1), 3);
    CHECK(beta_ab.to_decimal(4) == "3.7321");
    QuadExt b3(BigRational(9), BigRational(4), 5);
    CHECK(b3.to_decimal(3) == "17.944");
    CHECK(QuadExt(-1).to_decimal(3) == "-1.000");
    CHECK(QuadExt(BigRational(1, 3)).to_decimal(4) == "0.3333");
    CHECK(QuadExt(BigRational(2, 3)).to_decimal(4) == "0.6667");
    CHECK((-QuadExt::sqrt_of(2)).to_decimal(5) == "-1.41421");
}

TEST_CASE("in-field square roots") {
    CHECK(*rational_sqrt(BigRational(49, 4)) == BigRational(7, 2));
    CHECK(!rational_sqrt(BigRational(2)));
    CHECK(!rational_sqrt(BigRational(-1)));
    // 9+4√5 = (2+√5)².
    QuadExt b3(BigRational(9), BigRational(4), 5);
    CHECK(*quad_sqrt(b3) == QuadExt(BigRational(2), BigRational(1), 5));
    // (3+√5)/2 = ((1+√5)/2)².
    QuadExt beta_c(BigRational(3, 2), BigRational(1, 2), 5);
    CHECK(*quad_sqrt(beta_c) == QuadExt(BigRational(1, 2), BigRational(1, 2), 5));
    CHECK(*quad_sqrt(QuadExt(3), 3) == QuadExt::sqrt_of(3));
    CHECK(!quad_sqrt(QuadExt(2), 3));
    CHECK(!quad_sqrt(-QuadExt(1)));
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(20240817);
    for (std::int64_t d : {2, 3, 5}) {
        for (int it = 0; it < 200; ++it) {
            QuadExt x = rand_qe(rng, d), y = rand_qe(rng, d), z = rand_qe(rng, d);
            CHECK((x + y) + z == x + (y + z));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x + y == y + x);
            CHECK(x * y == y * x);
            if (!x.is_zero()) {
                CHECK(x * x.inverse() == QuadExt(1));
                CHECK(x / x == QuadExt(1));
            }
            CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
            CHECK((x * y).norm() == x.norm() * y.norm());
            CHECK(x.pow(3) == x * x * x);
        }
    }
}

TEST_CASE("sign oracle against 100-digit evaluation") {
    std::mt19937_64 rng(424242);
    int checked = 0;
    for (std::int64_t d : {2, 3, 5, 7}) {
        for (int it = 0; it < 250; ++it) {
            QuadExt x = rand_qe(rng, d);
            CHECK(x.sign() == dec_sign(x));
            ++checked;
        }
    }
    CHECK(checked == 1000);
}

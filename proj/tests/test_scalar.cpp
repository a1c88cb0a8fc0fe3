#include "support.hpp"

#include "waring/bigapprox.hpp"
#include "waring/quadratic.hpp"

#include <doctest.h>

using namespace waring;
using testing::rat;

namespace {

QuadExt quad(const Rational& a, const Rational& b, long m) { return QuadExt(a, b, Integer(m)); }

template <class F, class Gen>
void check_field_axioms(Gen gen, int trials) {
    for (int i = 0; i < trials; ++i) {
        F a = gen();
        F b = gen();
        F c = gen();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == F(0));
        if (!a.is_zero()) CHECK(a * (F(1) / a) == F(1));
    }
}

}  // namespace

TEST_SUITE("scalar") {

TEST_CASE("conjugate product of a quadratic element") {
    QuadExt x = quad(rat(1, 2), rat(1, 3), 2);
    QuadExt y = quad(rat(1, 2), rat(-1, 3), 2);
    CHECK(x * y == QuadExt(rat(1, 36)));
}

TEST_CASE("square of sqrt(3)") {
    QuadExt s = quad(0, 1, 3);
    CHECK(s * s == QuadExt(rat(3)));
}

TEST_CASE("difference of squares in the (2,3) tower") {
    TowerScalar a = make_tower(0, 1, 1, 0, 2, 3);
    TowerScalar b = make_tower(0, 1, -1, 0, 2, 3);
    CHECK(a * b == TowerScalar(Rational(-1)));
}

TEST_CASE("conjugation") {
    TowerScalar s = make_tower(0, 1, 1, 0, 2, 3);
    CHECK(conjugate(s) == make_tower(0, 1, -1, 0, 2, 3));
    CHECK(conjugate(QuadExt(rat(5))) == QuadExt(rat(5)));
    CHECK(conjugate(quad(1, 1, 5)) == quad(1, -1, 5));
    QuadExt x = quad(rat(2, 7), rat(-3), 5);
    CHECK(conjugate(conjugate(x)) == x);
    CHECK((conjugate(x) * x).b().is_zero());
}

TEST_CASE("square test over Q") {
    auto r81 = is_square_in_Q(rat(81));
    REQUIRE(std::holds_alternative<SquareRoot>(r81));
    CHECK(abs(std::get<SquareRoot>(r81).root) == rat(9));
    auto r12 = is_square_in_Q(rat(12));
    REQUIRE(std::holds_alternative<NotSquare>(r12));
    CHECK(std::get<NotSquare>(r12).square_free_part == 3);
    auto r1 = is_square_in_Q(rat(1));
    REQUIRE(std::holds_alternative<SquareRoot>(r1));
    CHECK(abs(std::get<SquareRoot>(r1).root) == rat(1));
    auto rneg = is_square_in_Q(rat(-27, 4));
    REQUIRE(std::holds_alternative<NotSquare>(rneg));
    CHECK(std::get<NotSquare>(rneg).negative);
    CHECK(std::get<NotSquare>(rneg).square_free_part == -3);
}

TEST_CASE("radicands are reduced to square-free form") {
    QuadExt x = quad(0, 1, 12);  // sqrt(12) = 2 sqrt(3)
    CHECK(x == quad(0, 2, 3));
    CHECK(QuadExt(rat(0), rat(1), Integer(9)) == QuadExt(rat(3)));
}

TEST_CASE("mismatched radicands are rejected") {
    CHECK_THROWS_AS(quad(0, 1, 2) + quad(0, 1, 3), ArithmeticError);
    CHECK_THROWS_AS(rat(1) / rat(0), ArithmeticError);
}

TEST_CASE("text rendering") {
    CHECK(rat(-3, 6).to_string() == "-1/2");
    CHECK(to_string(quad(1, 2, 3)) == "1 + 2*sqrt(3)");
    CHECK(to_string(quad(rat(1, 2), rat(-1, 6), -3)) == "1/2 - 1/6*sqrt(-3)");
    CHECK(to_string(make_tower(1, 0, 0, 1, 2, 3)) == "1 + sqrt(6)");
}

TEST_CASE("field axioms on random triples") {
    testing::Rng rng(11);
    check_field_axioms<Rational>([&] { return rng.rational(50, 20); }, 1000);
    check_field_axioms<QuadExt>([&] { return quad(rng.rational(30, 9), rng.rational(30, 9), 5); }, 1000);
    check_field_axioms<TowerScalar>(
        [&] {
            return make_tower(rng.rational(9, 5), rng.rational(9, 5), rng.rational(9, 5), rng.rational(9, 5), 2, 3);
        },
        1000);
}

TEST_CASE("norm is multiplicative") {
    testing::Rng rng(12);
    for (int i = 0; i < 500; ++i) {
        long m = rng.integer(0, 1) ? -7 : 6;
        QuadExt x = quad(rng.rational(40, 9), rng.rational(40, 9), m);
        QuadExt y = quad(rng.rational(40, 9), rng.rational(40, 9), m);
        CHECK((x * y).norm() == x.norm() * y.norm());
    }
}

TEST_CASE("interval arithmetic encloses exact tower values") {
    testing::Rng rng(13);
    const mpfr_prec_t prec = 128;
    for (int i = 0; i < 100; ++i) {
        auto gen = [&] {
            return make_tower(rng.rational(20, 7), rng.rational(20, 7), rng.rational(20, 7), rng.rational(20, 7), 2, 3);
        };
        TowerScalar x = gen();
        TowerScalar y = gen();
        if (y.is_zero()) continue;
        TowerScalar exact = (x * x - y) / y + x;
        BigApprox ax = embed_real(x, prec);
        BigApprox ay = embed_real(y, prec);
        BigApprox mirrored = (ax * ax - ay) / ay + ax;
        BigApprox reference = embed_real(exact, 1024);
        CHECK(mirrored.encloses(reference));
    }
}

TEST_CASE("complex approximations round-trip through text") {
    ComplexApprox z = embed(quad(rat(1, 3), rat(2), -3), 256);
    ComplexApprox back = parse_complex_approx(z.to_string(85), 256);
    Mpfr err = (back - z).abs_upper();
    CHECK(err.to_double() < 1e-70);
}

}  // TEST_SUITE

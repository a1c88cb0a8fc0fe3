#include "support.hpp"

#include "waring/decompose.hpp"

#include <doctest.h>

using namespace waring;
using testing::form;
using testing::Q;
using testing::rat;

namespace {

TowerScalar T(const Rational& x) { return TowerScalar(x); }

Decomposition rational_decomposition(int d, const std::vector<std::array<long, 3>>& s) {
    Decomposition dec;
    dec.degree = d;
    for (const auto& [l, a, b] : s) dec.summands.push_back({T(rat(l)), T(rat(a)), T(rat(b))});
    return dec;
}

}  // namespace

TEST_SUITE("decompose") {

TEST_CASE("mixed tower decomposition") {
    auto f = testing::Q2(testing::kMixedQuintic);
    auto h = convert_form<QuadExt>(Q("3*x^3 - 3*x^2*y - x*y^2 + y^3"));
    Decomposition d = extract_decomposition(f, h);
    REQUIRE(d.exact);
    CHECK(d.length() == 3);
    CHECK(d.domain() == "Q(sqrt(2), sqrt(3))");
    const TowerScalar s2 = make_tower(0, 1, 0, 0, 2, 3);
    const TowerScalar s3 = make_tower(0, 0, 1, 0, 2, 3);
    // expected summands keyed by direction (1, beta)
    std::vector<std::pair<TowerScalar, TowerScalar>> expected = {
        {T(rat(1)), T(rat(1))}, {-s3, s2 + s3}, {s3, s2 - s3}};
    for (const auto& [beta, lambda] : expected) {
        bool found = false;
        for (const auto& s : d.summands) {
            if (s.alpha == T(rat(1)) && s.beta == beta) {
                CHECK(s.lambda == lambda);
                found = true;
            }
        }
        CHECK(found);
    }
    CHECK(verify_decomposition(d, f).kind == VerifyResult::Kind::exact_match);
}

TEST_CASE("sum of two pure powers") {
    for (int d = 2; d <= 7; ++d) {
        auto f = Q("x^" + std::to_string(d) + " + y^" + std::to_string(d));
        Decomposition dec = extract_decomposition(f, Q("x*y"));
        REQUIRE(dec.exact);
        REQUIRE(dec.length() == 2);
        CHECK(dec.domain() == "Q");
        for (const auto& s : dec.summands) CHECK(s.lambda == T(rat(1)));
        CHECK(verify_decomposition(dec, f).kind == VerifyResult::Kind::exact_match);
    }
}

TEST_CASE("cube-root directions fall back to numeric mode") {
    auto f = Q(testing::kCubeRootSeptic);
    auto h = Q("y^3 - 2*x^3");
    ExtractOptions strict;
    strict.allow_numeric = false;
    CHECK_THROWS_AS(extract_decomposition(f, h, strict), std::invalid_argument);
    Decomposition d = extract_decomposition(f, h);
    CHECK_FALSE(d.exact);
    REQUIRE(d.residual);
    CHECK(d.residual->to_double() < 1e-40);
    CHECK(d.length() == 3);
    for (const auto& s : d.numeric_summands) {
        // lambda = 1, beta^3 = 2 for every summand
        CHECK((s.lambda - ComplexApprox(rat(1), 256)).abs_upper().to_double() < 1e-40);
        ComplexApprox cube = s.beta * s.beta * s.beta;
        CHECK((cube - ComplexApprox(rat(2), 256)).abs_upper().to_double() < 1e-40);
    }
    auto v = verify_decomposition(d, f);
    CHECK(v.kind == VerifyResult::Kind::numeric);
}

TEST_CASE("numeric residual shrinks with precision") {
    auto f = Q(testing::kCubeRootSeptic);
    auto h = Q("y^3 - 2*x^3");
    double prev = 1.0;
    for (long prec : {128L, 256L, 512L}) {
        ExtractOptions o;
        o.precision = prec;
        auto d = extract_decomposition(f, h, o);
        REQUIRE(d.residual);
        double r = d.residual->to_double();
        CHECK(r < prev);
        prev = r;
    }
    // the cyclic quintic's cubic has three real irrational roots
    auto g = Q(testing::kCyclicQuintic);
    auto hg = Q("x^3 - 3*x*y^2 + y^3");
    double prev2 = 1.0;
    for (long prec : {128L, 256L, 512L}) {
        ExtractOptions o;
        o.precision = prec;
        auto d = extract_decomposition(g, hg, o);
        REQUIRE(d.residual);
        CHECK(d.residual->to_double() < prev2);
        prev2 = d.residual->to_double();
    }
}

TEST_CASE("extraction rejects bad Sylvester forms") {
    auto f = Q("x^4 + y^4");
    CHECK_THROWS_AS(extract_decomposition(f, Q("x^2 + y^2")), std::invalid_argument);
    CHECK_THROWS_AS(extract_decomposition(Q("x^2*y^2*(x+y)"), Q("x^2*y")), std::invalid_argument);
}

TEST_CASE("verification") {
    auto dec = rational_decomposition(3, {{1, 1, 0}, {1, 0, 1}});
    CHECK(verify_decomposition(dec, Q("x^3 + y^3")).kind == VerifyResult::Kind::exact_match);
    dec.summands[0].lambda = T(rat(2));
    auto v = verify_decomposition(dec, Q("x^3 + y^3"));
    CHECK(v.kind == VerifyResult::Kind::mismatch);
    REQUIRE(v.diff.size() == 4);
    CHECK(v.diff[0] != "0");
    CHECK(v.diff[1] == "0");
    CHECK(v.diff[3] == "0");

    auto dup = rational_decomposition(3, {{1, 1, 1}, {1, 2, 2}});
    CHECK_FALSE(verify_decomposition(dup, Q("9*(x+y)^3")).honest);

    Decomposition over2;
    over2.degree = 2;
    over2.inner_radicand = 2;
    CHECK_THROWS_AS(verify_decomposition(over2, testing::Q2("x^2 + sqrt(3)*y^2")), std::invalid_argument);
}

TEST_CASE("f_lambda generator") {
    CHECK(gen_flambda(2, rat(1)) == Q("x^4 + 6*x^2*y^2 + y^4"));
    CHECK(gen_flambda(2, rat(1, 2)) == Q("x^4 + 3*x^2*y^2 + y^4"));
    CHECK(gen_flambda(3, rat(1)) == Q("x^6 + 20*x^3*y^3 + y^6"));
    CHECK(gen_flambda(3, rat(1, 2)).coeff(3) == Rational(testing::oracle::choose(6, 3)) * rat(1, 2));
}

TEST_CASE("f_lambda identity") {
    auto a = flambda_identity_check(2, rat(1));
    CHECK(a.verified);
    CHECK(a.exact);
    CHECK(a.correction.is_zero());
    auto b = flambda_identity_check(2, rat(1, 4));
    CHECK(b.verified);
    CHECK(b.exact);
    CHECK(b.correction == rat(15, 16));
    auto c = flambda_identity_check(3, rat(8));
    CHECK(c.verified);
    CHECK(c.exact);
    auto n = flambda_identity_check(2, rat(1, 2));
    CHECK(n.verified);
    CHECK_FALSE(n.exact);
    REQUIRE(n.residual);
    CHECK(n.residual->to_double() < 1e-30);
    testing::Rng rng(51);
    for (int i = 0; i < 20; ++i) {
        int k = static_cast<int>(rng.integer(2, 6));
        CHECK(flambda_identity_check(k, rng.nonzero_rational(30, 11)).verified);
    }
}

TEST_CASE("p_d family") {
    auto p3 = gen_pd(3, rat(2));
    CHECK(p3.form == Q("x^3 + 6*x*y^2"));
    REQUIRE(p3.decomposition.length() == 2);
    for (const auto& s : p3.decomposition.summands) {
        CHECK(s.lambda == T(rat(1, 2)));
        CHECK(s.alpha == T(rat(1)));
        CHECK(s.beta * s.beta == T(rat(2)));
    }
    CHECK(gen_pd(4, rat(3)).form == Q("x^4 + 18*x^2*y^2 + 9*y^4"));
    for (int d = 3; d <= 8; ++d) {
        for (long g : {2L, 3L, 5L}) {
            auto p = gen_pd(d, rat(g));
            CHECK_FALSE(p.gamma_is_square);
            CHECK(verify_decomposition(p.decomposition, p.form).kind == VerifyResult::Kind::exact_match);
            CHECK(complex_rank(p.form).rank == 2);
        }
    }
    CHECK(gen_pd(5, rat(4)).gamma_is_square);
    CHECK_THROWS_AS(gen_pd(2, rat(2)), std::invalid_argument);
}

TEST_CASE("round trip from random honest decompositions") {
    testing::Rng rng(52);
    int done = 0;
    while (done < 80) {
        int d = static_cast<int>(rng.integer(3, 8));
        int r = static_cast<int>(rng.integer(1, (d + 1) / 2));
        std::vector<std::array<mpq_class, 3>> s;
        std::vector<std::pair<long, long>> dirs;
        while (static_cast<int>(s.size()) < r) {
            long a = rng.integer(-4, 4), b = rng.integer(-4, 4);
            if (a == 0 && b == 0) continue;
            bool clash = false;
            for (auto [a2, b2] : dirs) clash = clash || a * b2 == a2 * b;
            if (clash) continue;
            dirs.push_back({a, b});
            s.push_back({mpq_class(rng.nonzero(-9, 9), rng.integer(1, 5)), mpq_class(a), mpq_class(b)});
        }
        auto f = testing::oracle::to_form(testing::oracle::expand(d, s));
        auto cr = complex_rank(f);
        CHECK(cr.rank <= r);
        REQUIRE(cr.certificate.witness);
        auto dec = extract_decomposition(f, *cr.certificate.witness);
        CHECK(dec.length() <= static_cast<std::size_t>(r));
        auto v = verify_decomposition(dec, f);
        if (dec.exact) {
            CHECK(v.kind == VerifyResult::Kind::exact_match);
            CHECK(v.honest);
        } else {
            CHECK(v.kind == VerifyResult::Kind::numeric);
        }
        ++done;
    }
}

TEST_CASE("tower selection") {
    auto t = choose_tower({Integer(1), Integer(2), Integer(6)}, 0);
    REQUIRE(t);
    const Integer m1(static_cast<long>(t->first)), m2(static_cast<long>(t->second));
    const std::set<Integer> field{Integer(1), m1, m2, square_free_part(m1 * m2)};
    for (long r : {1L, 2L, 6L}) CHECK(field.count(Integer(r)) == 1);
    CHECK_FALSE(choose_tower({Integer(2), Integer(3), Integer(5)}, 0));
    auto u = choose_tower({Integer(3)}, 2);
    REQUIRE(u);
    CHECK(u->first == 2);
    CHECK(u->second == 3);
}

}  // TEST_SUITE

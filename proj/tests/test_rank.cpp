#include "support.hpp"

#include "waring/rank.hpp"

#include <doctest.h>

using namespace waring;
using testing::form;
using testing::Q;
using testing::rat;

namespace {

BinaryForm<Rational> random_linear(testing::Rng& rng) {
    return BinaryForm<Rational>::linear(rat(rng.integer(-6, 6)), rat(rng.nonzero(-6, 6)));
}

// Distinct projective points among the given linear forms.
bool pairwise_distinct(const std::vector<BinaryForm<Rational>>& ls) {
    for (std::size_t i = 0; i < ls.size(); ++i) {
        for (std::size_t j = i + 1; j < ls.size(); ++j) {
            if (ls[i].coeff(0) * ls[j].coeff(1) == ls[i].coeff(1) * ls[j].coeff(0)) return false;
        }
    }
    return true;
}

std::vector<BinaryForm<Rational>> distinct_linears(testing::Rng& rng, int n) {
    while (true) {
        std::vector<BinaryForm<Rational>> ls;
        for (int i = 0; i < n; ++i) ls.push_back(random_linear(rng));
        if (pairwise_distinct(ls)) return ls;
    }
}

void check_kernel_shape(int k, int j, const Rational& lambda) {
    auto f = flambda_form(k, lambda);
    auto basis = kernel(build_catalecticant(f, k + j)).basis;
    REQUIRE_FALSE(basis.empty());
    for (const auto& h : basis) {
        for (int i = j + 1; i <= k - 1; ++i) CHECK(h.coeff(i).is_zero());
        CHECK(h.coeff(0) == -lambda * h.coeff(k));
        CHECK(h.coeff(k + j) == -lambda * h.coeff(j));
    }
}

}  // namespace

TEST_SUITE("rank") {

TEST_CASE("complex rank examples") {
    auto a = complex_rank(Q("x^4 + 4*x^2*y^2 + y^4"));
    CHECK(a.rank == 3);
    CHECK(complex_rank(Q("x^3*y")).rank == 4);
    CHECK(complex_rank(Q("x^4 + y^4")).rank == 2);
    auto e = complex_rank(Q(testing::kCyclicQuintic));
    CHECK(e.rank == 3);
    REQUIRE(e.certificate.witness);
    CHECK(*e.certificate.witness == Q("x^3 - 3*x*y^2 + y^3"));
    CHECK(e.certificate.exact());
    CHECK(e.certificate.claim == RankClaim::complex_rank);
}

TEST_CASE("quartic table") {
    CHECK(complex_rank(Q("x^4")).rank == 1);
    CHECK(complex_rank(Q("x^3*y")).rank == 4);
    CHECK(complex_rank(Q("x^2*y^2")).rank == 3);
    CHECK(complex_rank(Q("x^2*y*(x+y)")).rank == 3);
    CHECK(complex_rank(Q("8*x^3*y + 36*x^2*y^2 + 36*x*y^3")).rank == 2);
    CHECK(complex_rank(Q("4*x^3*y + 6*x^2*y^2 + 4*x*y^3")).rank == 3);
}

TEST_CASE("complex rank certificates recheck") {
    testing::Rng rng(41);
    for (int i = 0; i < 60; ++i) {
        auto f = rng.form(static_cast<int>(rng.integer(2, 8)), 9);
        if (f.is_zero()) continue;
        auto r = complex_rank(f);
        CHECK(recheck_certificate(f, r.certificate));
        REQUIRE(r.certificate.witness);
        CHECK(r.certificate.witness->degree() == r.rank);
        CHECK(is_square_free(*r.certificate.witness));
        CHECK(apply_diffop(*r.certificate.witness, f).is_zero());
    }
    CHECK_THROWS_AS(complex_rank(BinaryForm<Rational>::zero(3)), std::invalid_argument);
}

TEST_CASE("multiplicity lower bound") {
    CHECK(multiplicity_lower_bound(Q("x^2*y^2")) == 3);
    CHECK(multiplicity_lower_bound(Q("x^3*(x+y)*(x-y)")) == 4);
    CHECK(multiplicity_lower_bound(Q("(x^2+y^2)^2")) == 3);
    CHECK(multiplicity_lower_bound(Q("(x+2*y)^5")) == 1);
}

TEST_CASE("real rank examples") {
    auto a = real_rank(Q("x*y*(x-y)*(x+y)"));
    CHECK(a.exact());
    CHECK(a.lo == 4);
    auto b = real_rank(Q("x^3*(x^2+y^2)"));
    CHECK(b.exact());
    CHECK(b.lo == 4);
    auto c = real_rank(Q("(x^2+y^2)^2"));
    CHECK(c.exact());
    CHECK(c.lo == 3);
    auto d = real_rank(Q("x^4 + 3*x^2*y^2 + y^4"));
    CHECK(d.exact());
    CHECK((d.lo == 2 || d.lo == 3));
    CHECK_THROWS_AS(real_rank(Q("(x-y)^4")), std::invalid_argument);
    CHECK_THROWS_AS(real_rank(testing::Q2("x^2 + sqrt(-1)*y^2")), std::invalid_argument);
}

TEST_CASE("real witnesses are real-rooted and apolar") {
    testing::Rng rng(42);
    for (int i = 0; i < 40; ++i) {
        auto f = rng.form(static_cast<int>(rng.integer(3, 6)), 9);
        if (f.is_zero() || is_power_of_linear(f)) continue;
        auto c = real_rank(f);
        CHECK(recheck_certificate(f, c));
        if (c.witness) {
            CHECK(real_root_count(*c.witness, true) == c.witness->degree());
            CHECK(c.witness_real_roots == c.witness->degree());
            CHECK(apply_diffop(*c.witness, f).is_zero());
        }
        CHECK(c.lo >= complex_rank(f).rank);
        CHECK(c.hi <= f.degree());
    }
}

TEST_CASE("small-rank classification") {
    auto c51 = classify_small_rank(Q(testing::kCyclicQuintic));
    CHECK(c51.kind == SmallRankKind::rank3);
    REQUIRE(c51.rank3);
    CHECK(c51.rank3->kind == Rank3Classification::Case::case1_cyclic);
    CHECK(c51.rank3->u == rat(81));

    auto c52 = classify_small_rank(Q(testing::kCubeRootSeptic));
    REQUIRE(c52.rank3);
    CHECK(c52.rank3->kind == Rank3Classification::Case::case2_generic);
    // disc(y^3 - 2x^3) / lead^4 with the x^3 coefficient as lead
    namespace o = testing::oracle;
    CHECK(c52.rank3->u == Rational(o::cubic_discriminant(-2, 0, 0, 1) / mpq_class(16)));
    CHECK(c52.rank3->u < rat(0));

    auto c53 = classify_small_rank(testing::Q2(testing::kMixedQuintic));
    REQUIRE(c53.rank3);
    CHECK(c53.rank3->kind == Rank3Classification::Case::case3_mixed);
    auto sq = is_square_in_Q(c53.rank3->u);
    REQUIRE(std::holds_alternative<NotSquare>(sq));
    CHECK(std::get<NotSquare>(sq).square_free_part == 3);

    auto pd = classify_small_rank(Q("x^5 + 20*x^3*y^2 + 20*x*y^4"));
    CHECK(pd.kind == SmallRankKind::rank2);
    REQUIRE(pd.u);
    auto sq2 = is_square_in_Q(*pd.u);
    REQUIRE(std::holds_alternative<NotSquare>(sq2));
    CHECK(std::get<NotSquare>(sq2).square_free_part == 2);

    CHECK(classify_small_rank(Q("(2*x - y)^6")).kind == SmallRankKind::rank1);
    CHECK(classify_small_rank(Q("x^3*y")).kind == SmallRankKind::other);
}

TEST_CASE("rank-3 cases follow the root count and discriminant") {
    testing::Rng rng(43);
    for (int i = 0; i < 40; ++i) {
        // f = sum of three fifth powers with rational directions: splits over K
        std::vector<std::array<mpq_class, 3>> s;
        auto ls = distinct_linears(rng, 3);
        for (const auto& l : ls) s.push_back({mpq_class(rng.nonzero(-5, 5)), l.coeff(0).raw(), l.coeff(1).raw()});
        auto f = testing::oracle::to_form(testing::oracle::expand(5, s));
        auto c = classify_small_rank(f);
        if (c.kind != SmallRankKind::rank3) continue;
        CHECK(c.rank3->kind == Rank3Classification::Case::splits_over_K);
        CHECK(c.rank3->rational_roots == 3);
        CHECK_FALSE(c.rank3->non_unique);
    }
    auto low = classify_small_rank(Q("(x^2+y^2)^2"));
    REQUIRE(low.rank3);
    CHECK(low.rank3->non_unique);
}

TEST_CASE("full rank test") {
    CHECK(full_rank_test(Q("x^3*y")).complex_full);
    CHECK(full_rank_test(Q("x^3*y")).real_full);
    auto h = full_rank_test(Q("x*y*(x-y)*(x+y)"));
    CHECK_FALSE(h.complex_full);
    CHECK(h.real_full);
    CHECK(full_rank_test(Q("x^4 + y^4")).label() == "neither");
    CHECK_THROWS_AS(full_rank_test(Q("x*y")), std::invalid_argument);
}

TEST_CASE("f_lambda bracket and kernel shape") {
    auto b = flambda_real_bracket(2, rat(1, 2));
    CHECK(b.lo == 2);
    CHECK(b.hi == 3);
    CHECK(b.structure_ok);
    check_kernel_shape(4, 1, rat(3, 7));
    check_kernel_shape(5, 2, rat(-2, 5));
    for (int k = 2; k <= 5; ++k) {
        auto br = flambda_real_bracket(k, rat(5, 3));
        CHECK(br.structure_ok);
        CHECK(br.lo == 2 * k - 2);
        CHECK(br.hi == 2 * k - 1);
        for (const auto& level : br.levels) {
            CHECK(level.shape_ok);
            if (level.min_gap >= 0) CHECK(level.min_gap >= level.required_gap);
        }
    }
    CHECK_THROWS_AS(flambda_real_bracket(2, rat(0)), std::invalid_argument);
    CHECK_THROWS_AS(flambda_real_bracket(1, rat(1)), std::invalid_argument);
}

TEST_CASE("hyperbolic members of the family are flagged") {
    auto b = flambda_real_bracket(2, rat(-1, 3));
    CHECK(b.hyperbolic);
    CHECK(b.lo == 4);
    CHECK(b.hi == 4);
    CHECK_FALSE(b.notes.empty());
}

TEST_CASE("sandwich bounds") {
    testing::Rng rng(44);
    for (int i = 0; i < 150; ++i) {
        auto f = rng.form(static_cast<int>(rng.integer(1, 9)), 9);
        if (rng.integer(0, 2) == 0) f = f * power(random_linear(rng), static_cast<int>(rng.integer(2, 4)));
        if (f.is_zero()) continue;
        int r = complex_rank(f).rank;
        CHECK(multiplicity_lower_bound(f) <= r);
        CHECK(r <= std::max(1, f.degree()));
    }
}

TEST_CASE("one repeated factor of multiplicity d-2") {
    testing::Rng rng(45);
    for (int d = 3; d <= 10; ++d) {
        for (int i = 0; i < 3; ++i) {
            auto ls = distinct_linears(rng, 3);
            auto f = power(ls[0], d - 2) * ls[1] * ls[2];
            CHECK(complex_rank(f).rank == d - 1);
        }
    }
}

TEST_CASE("hyperbolic and non-hyperbolic real ranks") {
    testing::Rng rng(46);
    for (int i = 0; i < 15; ++i) {
        int d = static_cast<int>(rng.integer(3, 6));
        auto ls = distinct_linears(rng, d);
        BinaryForm<Rational> f = form({1});
        for (const auto& l : ls) f = f * l;
        auto c = real_rank(f);
        CHECK(c.exact());
        CHECK(c.lo == d);
        CHECK(c.lo >= complex_rank(f).rank);
    }
    for (int i = 0; i < 15; ++i) {
        int d = static_cast<int>(rng.integer(3, 6));
        auto f = rng.form(d - 2, 5) * Q("x^2 + x*y + 2*y^2");
        if (f.is_zero() || is_power_of_linear(f)) continue;
        auto c = real_rank(f);
        CHECK(c.hi <= d - 1);
        CHECK(c.lo >= complex_rank(f).rank);
    }
}

TEST_CASE("random split square-free quartics have rank 2 or 3") {
    testing::Rng rng(47);
    for (int i = 0; i < 100; ++i) {
        auto ls = distinct_linears(rng, 4);
        auto f = ls[0] * ls[1] * ls[2] * ls[3];
        int r = complex_rank(f).rank;
        CHECK((r == 2 || r == 3));
    }
}

TEST_CASE("rank is invariant under unimodular substitution") {
    testing::Rng rng(48);
    int done = 0;
    while (done < 50) {
        long a = rng.integer(-3, 3), b = rng.integer(-3, 3), c = rng.integer(-3, 3), d = rng.integer(-3, 3);
        if (a * d - b * c != 1 && a * d - b * c != -1) continue;
        auto f = rng.form(static_cast<int>(rng.integer(2, 7)), 6);
        if (f.is_zero()) continue;
        auto g = substitute(f, rat(a), rat(b), rat(c), rat(d));
        CHECK(complex_rank(g).rank == complex_rank(f).rank);
        ++done;
    }
}

TEST_CASE("f_lambda complex rank") {
    testing::Rng rng(49);
    for (int k = 2; k <= 6; ++k) {
        CHECK(complex_rank(flambda_form(k, rat(1))).rank == k);
        CHECK(complex_rank(flambda_form(k, rat(-1))).rank == k);
        for (int i = 0; i < 4; ++i) {
            Rational lambda = rng.nonzero_rational(20, 9);
            if (abs(lambda) == rat(1)) continue;
            CHECK(complex_rank(flambda_form(k, lambda)).rank == k + 1);
        }
    }
}

}  // TEST_SUITE

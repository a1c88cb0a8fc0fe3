#ifndef WARING_TESTS_SUPPORT_HPP
#define WARING_TESTS_SUPPORT_HPP

// Shared fixtures and independent oracles. Nothing here calls into the
// library's algorithms; oracles work on raw mpq_class vectors.

#include "waring/apolarity.hpp"
#include "waring/binform.hpp"
#include "waring/parse.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace testing {

using waring::BinaryForm;
using waring::Integer;
using waring::QuadExt;
using waring::Rational;

inline BinaryForm<Rational> Q(const std::string& text) { return std::get<BinaryForm<Rational>>(waring::parse_form(text)); }
inline BinaryForm<QuadExt> Q2(const std::string& text) { return std::get<BinaryForm<QuadExt>>(waring::parse_form(text)); }

inline Rational rat(long p, long q = 1) { return Rational(Integer(p), Integer(q)); }

inline BinaryForm<Rational> form(std::vector<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.push_back(rat(x));
    return BinaryForm<Rational>(static_cast<int>(v.size()) - 1, v);
}

inline const char* kCyclicQuintic = "-15*x^5 + 90*x^4*y - 30*x^3*y^2 + 60*x^2*y^3 + 3*y^5";
inline const char* kCubeRootSeptic = "3*x^7 + 210*x^4*y^3 + 84*x*y^6";
inline const char* kMixedQuintic =
    "(1+2*sqrt(2))*x^5 - 25*x^4*y + (60*sqrt(2)+10)*x^3*y^2 - 170*x^2*y^3 + (90*sqrt(2)+5)*x*y^4 - 53*y^5";

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
    long nonzero(long lo, long hi) {
        long v = 0;
        while (v == 0) v = integer(lo, hi);
        return v;
    }
    Rational rational(long num_bound, long den_bound) { return rat(integer(-num_bound, num_bound), integer(1, den_bound)); }
    Rational nonzero_rational(long num_bound, long den_bound) { return rat(nonzero(-num_bound, num_bound), integer(1, den_bound)); }
    BinaryForm<Rational> form(int d, long bound) {
        std::vector<Rational> c;
        for (int i = 0; i <= d; ++i) c.push_back(rat(integer(-bound, bound)));
        if (c.front().is_zero() && c.back().is_zero()) c.front() = rat(1);
        return BinaryForm<Rational>(d, c);
    }
    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

namespace oracle {

using Vec = std::vector<mpq_class>;

inline mpq_class q(const Rational& x) { return x.raw(); }

inline Vec coeffs(const BinaryForm<Rational>& f) {
    Vec v;
    for (const Rational& c : f.coeffs()) v.push_back(q(c));
    return v;
}

inline mpz_class choose(long n, long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// Plain coefficients of sum lambda (alpha x + beta y)^d by the binomial theorem.
inline Vec expand(int d, const std::vector<std::array<mpq_class, 3>>& summands) {
    Vec out(static_cast<std::size_t>(d) + 1, 0);
    for (const auto& s : summands) {
        for (int i = 0; i <= d; ++i) {
            mpq_class term = s[0] * mpq_class(choose(d, i));
            for (int e = 0; e < d - i; ++e) term *= s[1];
            for (int e = 0; e < i; ++e) term *= s[2];
            out[static_cast<std::size_t>(i)] += term;
        }
    }
    return out;
}

inline Vec multiply(const Vec& a, const Vec& b) {
    Vec out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

inline BinaryForm<Rational> to_form(const Vec& v) {
    std::vector<Rational> c;
    for (const mpq_class& x : v) c.push_back(Rational(x));
    return BinaryForm<Rational>(static_cast<int>(v.size()) - 1, c);
}

// Rank by plain Gaussian elimination.
inline int matrix_rank(std::vector<Vec> m) {
    int rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
        const Vec& p = m[static_cast<std::size_t>(rank)];
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
            mpq_class factor = m[r][c] / p[c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * p[k];
        }
        ++rank;
    }
    return rank;
}

// x^(r-t) y^t applied as a differential operator to sum c_i x^(d-i) y^i.
inline Vec diffop_monomial(int r, int t, const Vec& f) {
    const int d = static_cast<int>(f.size()) - 1;
    Vec out(static_cast<std::size_t>(d - r) + 1, 0);
    for (int i = 0; i <= d; ++i) {
        const int ex = d - i;
        const int ey = i;
        if (ex < r - t || ey < t) continue;
        mpq_class c = f[static_cast<std::size_t>(i)];
        for (int k = 0; k < r - t; ++k) c *= ex - k;
        for (int k = 0; k < t; ++k) c *= ey - k;
        out[static_cast<std::size_t>(i - t)] += c;
    }
    return out;
}

// Dimension of the degree-r forms annihilating f, from the operator matrix.
inline int apolar_dim(const BinaryForm<Rational>& f, int r) {
    Vec c = coeffs(f);
    const int d = f.degree();
    std::vector<Vec> m(static_cast<std::size_t>(d - r) + 1, Vec(static_cast<std::size_t>(r) + 1, 0));
    for (int t = 0; t <= r; ++t) {
        Vec col = diffop_monomial(r, t, c);
        for (std::size_t s = 0; s < col.size(); ++s) m[s][static_cast<std::size_t>(t)] = col[s];
    }
    return (r + 1) - matrix_rank(m);
}

// b^2 c^2 - 4 a c^3 - 4 b^3 d - 27 a^2 d^2 + 18 a b c d for a x^3 + b x^2 + c x + d.
inline mpq_class cubic_discriminant(const mpq_class& a, const mpq_class& b, const mpq_class& c, const mpq_class& d) {
    return b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d;
}

inline mpq_class eval_dehom(const Vec& f, const mpq_class& t) {
    // f(t, 1) = sum c_i t^(d-i)
    mpq_class acc = 0;
    for (const mpq_class& c : f) acc = acc * t + c;
    return acc;
}

// Real projective roots with multiplicity, assuming all finite roots are
// simple rationals with denominator at most den_bound: scan a grid fine
// enough to separate them within the Fujiwara root bound.
inline int grid_root_count(const Vec& f, long den_bound) {
    std::size_t lead = 0;
    while (lead < f.size() && f[lead] == 0) ++lead;
    int at_infinity = static_cast<int>(lead);
    std::size_t last = f.size() - 1;
    while (f[last] == 0) --last;
    Vec p(f.begin() + static_cast<long>(lead), f.end());
    const int n = static_cast<int>(p.size()) - 1;
    double bound = 0;
    for (int i = 1; i <= n; ++i) bound = std::max(bound, std::pow(std::abs(mpq_class(p[static_cast<std::size_t>(i)] / p[0]).get_d()), 1.0 / i));
    const long span = static_cast<long>(std::ceil(2 * bound)) + 1;
    const long steps_per_unit = 2 * den_bound * den_bound;
    int count = 0;
    int prev = 0;
    for (long k = -span * steps_per_unit; k <= span * steps_per_unit; ++k) {
        mpq_class t(k, steps_per_unit);
        t.canonicalize();
        int s = sgn(eval_dehom(p, t));
        if (s == 0) {
            ++count;
            prev = 0;
            continue;
        }
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count + at_infinity;
}

}  // namespace oracle
}  // namespace testing

#endif  // WARING_TESTS_SUPPORT_HPP

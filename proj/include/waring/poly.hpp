#ifndef WARING_POLY_HPP
#define WARING_POLY_HPP

#include "waring/quadratic.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace waring {

/// Exact field operations every scalar domain provides.
template <class F>
concept ExactField = requires(F a, F b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    F(Rational(0));
};

/// Univariate polynomial, coefficients in ascending powers; the zero
/// polynomial is the empty vector and no stored leading coefficient is zero.
template <class F>
using Poly = std::vector<F>;

namespace poly {

template <class F>
void trim(Poly<F>& p) {
    while (!p.empty() && p.back().is_zero()) {
        p.pop_back();
    }
}

template <class F>
long degree(const Poly<F>& p) {
    return static_cast<long>(p.size()) - 1;
}

template <class F>
const F& leading(const Poly<F>& p) {
    return p.back();
}

template <class F>
Poly<F> constant(const F& c) {
    Poly<F> p{c};
    trim(p);
    return p;
}

template <class F>
Poly<F> add(const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r(std::max(a.size(), b.size()), F(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

template <class F>
Poly<F> sub(const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r(std::max(a.size(), b.size()), F(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

template <class F>
Poly<F> mul(const Poly<F>& a, const Poly<F>& b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    Poly<F> r(a.size() + b.size() - 1, F(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    trim(r);
    return r;
}

template <class F>
Poly<F> scale(Poly<F> p, const F& c) {
    for (F& x : p) x *= c;
    trim(p);
    return p;
}

template <class F>
Poly<F> pow(const Poly<F>& p, unsigned e) {
    Poly<F> r = constant(F(1));
    for (unsigned i = 0; i < e; ++i) r = mul(r, p);
    return r;
}

/// a = q*b + r with deg r < deg b.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(Poly<F> a, const Poly<F>& b) {
    if (b.empty()) {
        throw ArithmeticError("polynomial division by zero");
    }
    trim(a);
    if (a.size() < b.size()) {
        return {Poly<F>{}, a};
    }
    Poly<F> q(a.size() - b.size() + 1, F(0));
    F inv_lc = F(1) / b.back();
    for (std::size_t shift = a.size() - b.size() + 1; shift-- > 0;) {
        F c = a[shift + b.size() - 1] * inv_lc;
        q[shift] = c;
        if (!c.is_zero()) {
            for (std::size_t j = 0; j < b.size(); ++j) {
                a[shift + j] -= c * b[j];
            }
        }
    }
    a.resize(b.size() - 1);
    trim(a);
    trim(q);
    return {q, a};
}

template <class F>
Poly<F> rem(const Poly<F>& a, const Poly<F>& b) {
    return divmod(a, b).second;
}

/// Quotient of an exact division; throws if b does not divide a.
template <class F>
Poly<F> exact_div(const Poly<F>& a, const Poly<F>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.empty()) {
        throw ArithmeticError("inexact polynomial division");
    }
    return q;
}

template <class F>
bool divides(const Poly<F>& b, const Poly<F>& a) {
    return rem(a, b).empty();
}

template <class F>
Poly<F> derivative(const Poly<F>& p) {
    if (p.size() <= 1) {
        return {};
    }
    Poly<F> r(p.size() - 1, F(0));
    for (std::size_t i = 1; i < p.size(); ++i) {
        r[i - 1] = p[i] * F(Rational(static_cast<long>(i)));
    }
    trim(r);
    return r;
}

template <class F>
Poly<F> monic(Poly<F> p) {
    trim(p);
    if (p.empty()) return p;
    F inv = F(1) / p.back();
    for (F& x : p) x *= inv;
    return p;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly<F> r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a));
}

template <class F, class X>
F eval(const Poly<F>& p, const X& x) {
    F acc(0);
    F fx(x);
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * fx + p[i];
    }
    return acc;
}

/// Yun's algorithm: p = lc(p) * prod parts[j].first^parts[j].second with
/// every part monic, square-free and the parts pairwise coprime.
template <class F>
std::vector<std::pair<Poly<F>, int>> yun(const Poly<F>& p) {
    std::vector<std::pair<Poly<F>, int>> out;
    if (degree(p) < 1) {
        return out;
    }
    Poly<F> dp = derivative(p);
    Poly<F> a0 = gcd(p, dp);
    Poly<F> b = exact_div(p, a0);
    Poly<F> c = exact_div(dp, a0);
    Poly<F> d = sub(c, derivative(b));
    int i = 1;
    while (degree(b) > 0) {
        Poly<F> a = gcd(b, d);
        if (degree(a) > 0) {
            out.emplace_back(monic(a), i);
        }
        b = exact_div(b, a);
        c = exact_div(d, a);
        d = sub(c, derivative(b));
        ++i;
    }
    return out;
}

template <class F>
bool is_square_free(const Poly<F>& p) {
    return degree(gcd(p, derivative(p))) <= 0;
}

// ---- real roots (requires an ordered embedding: sign(F)) ------------------

inline void positive_normalize(Poly<Rational>& p) {
    if (p.empty()) return;
    Integer den = 1;
    Integer num = 0;
    for (const Rational& c : p) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.numerator().get_mpz_t());
    }
    Rational s(den, num);
    for (Rational& c : p) c *= s;
}

/// Scales by a positive constant so that the leading coefficient has
/// absolute value one; leaves signs intact.
template <class F>
void positive_normalize(Poly<F>& p) {
    if (p.empty()) return;
    F lc = p.back();
    if (sign(lc) < 0) lc = -lc;
    F inv = F(1) / lc;
    for (F& c : p) c *= inv;
}

/// Sturm chain p, p', -rem(...), with positive rescaling of every member.
template <class F>
std::vector<Poly<F>> sturm_sequence(Poly<F> p) {
    trim(p);
    std::vector<Poly<F>> seq;
    if (p.empty()) return seq;
    positive_normalize(p);
    seq.push_back(p);
    Poly<F> q = derivative(p);
    positive_normalize(q);
    if (q.empty()) return seq;
    seq.push_back(q);
    while (true) {
        Poly<F> r = rem(seq[seq.size() - 2], seq.back());
        if (r.empty()) break;
        for (F& c : r) c = -c;
        positive_normalize(r);
        seq.push_back(std::move(r));
    }
    return seq;
}

inline int count_variations(const std::vector<int>& signs) {
    int v = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

template <class F>
int variations_at(const std::vector<Poly<F>>& seq, const Rational& x) {
    std::vector<int> s;
    s.reserve(seq.size());
    for (const auto& p : seq) s.push_back(sign(eval(p, F(x))));
    return count_variations(s);
}

/// Variations at +infinity (dir = +1) or -infinity (dir = -1).
template <class F>
int variations_at_infinity(const std::vector<Poly<F>>& seq, int dir) {
    std::vector<int> s;
    s.reserve(seq.size());
    for (const auto& p : seq) {
        int lc = sign(p.back());
        s.push_back((dir < 0 && degree(p) % 2 == 1) ? -lc : lc);
    }
    return count_variations(s);
}

/// Number of distinct real roots.
template <class F>
int count_real_roots(const Poly<F>& p) {
    if (degree(p) < 1) return 0;
    auto seq = sturm_sequence(p);
    return variations_at_infinity(seq, -1) - variations_at_infinity(seq, +1);
}

/// Distinct real roots in the half-open interval (a, b].
template <class F>
int count_roots_in(const std::vector<Poly<F>>& seq, const Rational& a, const Rational& b) {
    return variations_at(seq, a) - variations_at(seq, b);
}

/// Rational r with |root| < r for every complex root (Cauchy).
template <class F>
Rational root_bound(const Poly<F>& p) {
    Rational m(0);
    F lc = p.back();
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        Rational c = abs_upper(F(p[i] / lc));
        if (c > m) m = c;
    }
    return m + Rational(1);
}

/// An open interval (lo, hi) with rational, non-root endpoints that contains
/// exactly one real root.
struct IsolatingInterval {
    Rational lo;
    Rational hi;
};

namespace detail {

template <class F>
void bisect(const Poly<F>& p, const std::vector<Poly<F>>& seq, const Rational& a,
            const Rational& b, int n, std::vector<IsolatingInterval>& out) {
    if (n == 0) return;
    if (n == 1) {
        out.push_back({a, b});
        return;
    }
    // Split at the midpoint unless it is a root, in which case nudge.
    static const int kTries[] = {4, 3, 5, 2, 6, 1, 7};
    Rational mid;
    for (int k : kTries) {
        mid = a + (b - a) * Rational(k) / Rational(8);
        if (!eval(p, F(mid)).is_zero()) break;
    }
    int left = count_roots_in(seq, a, mid);
    bisect(p, seq, a, mid, left, out);
    bisect(p, seq, mid, b, n - left, out);
}

}  // namespace detail

/// Isolating intervals for the real roots of p, sorted increasingly.
/// p must be square-free.
template <class F>
std::vector<IsolatingInterval> isolate_real_roots(const Poly<F>& p) {
    std::vector<IsolatingInterval> out;
    if (degree(p) < 1) return out;
    auto seq = sturm_sequence(p);
    Rational bound = root_bound(p);
    int n = count_roots_in(seq, -bound, bound);
    detail::bisect(p, seq, -bound, bound, n, out);
    return out;
}

/// Shrinks an isolating interval until its width is at most `width`.
template <class F>
IsolatingInterval refine(const Poly<F>& p, IsolatingInterval iv, const Rational& width) {
    int s_lo = sign(eval(p, F(iv.lo)));
    while (iv.hi - iv.lo > width) {
        Rational mid = (iv.lo + iv.hi) / Rational(2);
        int s = sign(eval(p, F(mid)));
        if (s == 0) {
            return {mid - width / Rational(4), mid + width / Rational(4)};
        }
        if (s == s_lo) {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
    }
    return iv;
}

/// One rational point in each open interval cut out by the real roots of
/// p (p square-free and nonconstant, otherwise the single point 0).
template <class F>
std::vector<Rational> sample_points_between_roots(const Poly<F>& p) {
    auto ivs = isolate_real_roots(p);
    std::vector<Rational> pts;
    if (ivs.empty()) {
        pts.emplace_back(0);
        return pts;
    }
    pts.push_back(ivs.front().lo - Rational(1));
    for (std::size_t i = 0; i + 1 < ivs.size(); ++i) {
        pts.push_back(ivs[i].hi);
    }
    pts.push_back(ivs.back().hi + Rational(1));
    return pts;
}

// ---- linear algebra helpers -----------------------------------------------

template <class F>
F determinant(std::vector<std::vector<F>> m) {
    std::size_t n = m.size();
    F det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return F(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        F inv = F(1) / m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            F factor = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) {
                m[r][c] -= factor * m[col][c];
            }
        }
    }
    return det;
}

/// Resultant of two coefficient lists given in descending order with their
/// formal degrees (leading zeros allowed); for binary forms this is the
/// homogeneous resultant.
template <class F>
F sylvester_resultant(const std::vector<F>& a_desc, const std::vector<F>& b_desc) {
    std::size_t m = a_desc.size() - 1;
    std::size_t n = b_desc.size() - 1;
    std::size_t size = m + n;
    if (size == 0) return F(1);
    std::vector<std::vector<F>> s(size, std::vector<F>(size, F(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = a_desc[j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = b_desc[j];
    return determinant(std::move(s));
}

/// Newton interpolation through (xs[i], ys[i]).
template <class F>
Poly<F> interpolate(const std::vector<Rational>& xs, const std::vector<F>& ys) {
    std::size_t n = xs.size();
    std::vector<F> coef = ys;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = n - 1; i >= j; --i) {
            coef[i] = (coef[i] - coef[i - 1]) / F(xs[i] - xs[i - j]);
            if (i == j) break;
        }
    }
    Poly<F> result;
    for (std::size_t k = n; k-- > 0;) {
        // result = result * (x - xs[k]) + coef[k]
        result = mul(result, Poly<F>{F(-xs[k]), F(1)});
        result = add(result, constant(coef[k]));
    }
    return result;
}

}  // namespace poly
}  // namespace waring

#endif  // WARING_POLY_HPP

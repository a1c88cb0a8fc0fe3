#include "waring/factor.hpp"

#include <stdexcept>

namespace waring {

namespace {

Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.numerator().get_mpz_t(), q.denominator().get_mpz_t());
    return r;
}

BinaryForm<Rational> one_form() { return BinaryForm<Rational>(0, {Rational(1)}); }

}  // namespace

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
    if (hi < lo) return simplest_rational_between(hi, lo);
    Integer fl = floor_of(lo);
    if (Rational(fl) == lo) return lo;
    if (Rational(Integer(fl + 1)) <= hi) return Rational(Integer(fl + 1));
    Rational frac_lo = lo - Rational(fl);
    Rational frac_hi = hi - Rational(fl);
    return Rational(fl) + Rational(1) / simplest_rational_between(Rational(1) / frac_hi, Rational(1) / frac_lo);
}

std::vector<Rational> rational_roots(const Poly<Rational>& p_in) {
    std::vector<Rational> out;
    Poly<Rational> p = p_in;
    poly::trim(p);
    if (poly::degree(p) < 1) return out;
    for (const auto& [part, mult] : poly::yun(p)) {
        Poly<Rational> q = part;
        poly::positive_normalize(q);  // primitive integer coefficients
        Integer lead = abs(q.back().numerator());
        // Two distinct rationals with denominators <= lead differ by at
        // least 1/lead^2; isolate below that width and test the simplest.
        Rational width(Integer(1), Integer(2 * lead * lead));
        for (poly::IsolatingInterval iv : poly::isolate_real_roots(q)) {
            iv = poly::refine(q, iv, width);
            Rational cand = simplest_rational_between(iv.lo, iv.hi);
            if (poly::eval(q, cand).is_zero()) out.push_back(cand);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int FactorizationShape::rational_root_multiplicity() const {
    int n = 0;
    for (const auto& [form, m] : linear_factors) n += m;
    return n;
}

BinaryForm<Rational> FactorizationShape::reconstruct() const {
    BinaryForm<Rational> r = unfactored_remainder;
    for (const auto& [form, m] : linear_factors) r = r * power(form, m);
    for (const auto& [form, m] : quadratic_factors) r = r * power(form, m);
    return r * scalar;
}

FactorizationShape rational_and_quadratic_factor(const BinaryForm<Rational>& f) {
    if (f.is_zero()) throw std::invalid_argument("factorization of the zero form");
    FactorizationShape shape;
    shape.unfactored_remainder = one_form();
    int m = f.y_multiplicity();
    if (m > 0) {
        shape.linear_factors.emplace_back(BinaryForm<Rational>::linear(0, 1), m);
    }
    for (const auto& [part, mult] : poly::yun(f.dehomogenize())) {
        Poly<Rational> rest = part;
        for (const Rational& r : rational_roots(part)) {
            // root x = a/b of f(x, 1) is the projective point (a : b)
            BinaryForm<Rational> lin = BinaryForm<Rational>::linear(Rational(r.denominator()), Rational(Integer(-r.numerator())));
            shape.linear_factors.emplace_back(lin, mult);
            rest = poly::exact_div(rest, Poly<Rational>{-r, Rational(1)});
        }
        long deg = poly::degree(rest);
        if (deg == 2) {
            poly::positive_normalize(rest);
            shape.quadratic_factors.emplace_back(BinaryForm<Rational>::homogenize(rest, 0), mult);
        } else if (deg > 2) {
            auto form = BinaryForm<Rational>::homogenize(rest, 0);
            shape.unfactored_remainder = shape.unfactored_remainder * power(form, mult);
        }
    }
    shape.scalar = Rational(1);
    BinaryForm<Rational> product = shape.reconstruct();
    for (int i = 0; i <= f.degree(); ++i) {
        if (!product.coeff(i).is_zero()) {
            shape.scalar = f.coeff(i) / product.coeff(i);
            break;
        }
    }
    return shape;
}

QuadraticSplit split_quadratic(const BinaryForm<Rational>& q) {
    if (q.degree() != 2) throw std::invalid_argument("split_quadratic needs a quadratic form");
    const Rational& A = q.coeff(0);
    const Rational& B = q.coeff(1);
    const Rational& C = q.coeff(2);
    Rational disc = B * B - Rational(4) * A * C;
    if (disc.is_zero()) throw std::invalid_argument("quadratic has a double root");
    Integer num = disc.numerator() * disc.denominator();
    Integer m = square_free_part(num);
    // sqrt(disc) = sqrt(num) / den = t sqrt(m) / den
    Integer t;
    exact_sqrt(Integer(num / m), t);
    Rational root_coeff(t, disc.denominator());
    QuadraticSplit s;
    s.radicand = m;
    if (!C.is_zero()) {
        // q(1, t) = A + B t + C t^2 = 0
        QuadExt sq(Rational(0), root_coeff, m);
        QuadExt t1 = (QuadExt(-B) + sq) / QuadExt(Rational(2) * C);
        QuadExt t2 = (QuadExt(-B) - sq) / QuadExt(Rational(2) * C);
        s.alpha = {QuadExt(1), QuadExt(1)};
        s.beta = {t1, t2};
    } else {
        // q = x (A x + B y): roots (0 : 1) and (B : -A); only reached for
        // reducible input.
        s.alpha = {QuadExt(0), QuadExt(1)};
        s.beta = {QuadExt(1), QuadExt(-A / B)};
    }
    return s;
}

}  // namespace waring

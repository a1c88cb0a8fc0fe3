#include "waring/rational.hpp"

#include <limits>

namespace waring {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw ArithmeticError("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw ArithmeticError("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& x, unsigned e) {
    Integer n;
    Integer d;
    mpz_pow_ui(n.get_mpz_t(), x.numerator().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), x.denominator().get_mpz_t(), e);
    return Rational(n, d);
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

bool exact_sqrt(const Integer& n, Integer& root) {
    if (n < 0) {
        return false;
    }
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) {
        return false;
    }
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return true;
}

Integer square_free_part(const Integer& n) {
    if (n == 0) {
        return 0;
    }
    Integer rest = abs(n);
    Integer result = 1;
    // Trial division up to the cube root; what remains has at most two prime
    // factors, so it is either p, p^2 or p*q.
    // NOTE: the divisor search is capped, so for inputs with two large prime
    // factors beyond the cap the result can carry a square factor.
    constexpr unsigned long kTrialLimit = 2000000;
    Integer p = 2;
    while (p <= kTrialLimit && p * p * p <= rest) {
        int e = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()) != 0) {
            rest /= p;
            ++e;
        }
        if (e % 2 == 1) {
            result *= p;
        }
        p += (p == 2) ? 1 : 2;
    }
    Integer r;
    if (!exact_sqrt(rest, r)) {
        result *= rest;
    }
    return n < 0 ? Integer(-result) : result;
}

SquareTest is_square_in_Q(const Rational& x) {
    if (x.sign() >= 0) {
        Integer rn;
        Integer rd;
        if (exact_sqrt(x.numerator(), rn) && exact_sqrt(x.denominator(), rd)) {
            return SquareRoot{Rational(rn, rd)};
        }
    }
    Integer prod = x.numerator() * x.denominator();
    return NotSquare{square_free_part(prod), x.sign() < 0};
}

bool exact_root(const Rational& x, unsigned k, Rational& root) {
    if (k == 0) {
        return false;
    }
    bool neg = x.sign() < 0;
    if (neg && k % 2 == 0) {
        return false;
    }
    Integer an = abs(x.numerator());
    Integer rn;
    Integer rd;
    if (mpz_root(rn.get_mpz_t(), an.get_mpz_t(), k) == 0) {
        return false;
    }
    if (mpz_root(rd.get_mpz_t(), x.denominator().get_mpz_t(), k) == 0) {
        return false;
    }
    root = Rational(neg ? Integer(-rn) : rn, rd);
    return true;
}

std::int64_t to_int64(const Integer& n) {
    if (!n.fits_slong_p()) {
        throw ArithmeticError("radicand out of machine range: " + n.get_str());
    }
    static_assert(sizeof(long) == sizeof(std::int64_t));
    return n.get_si();
}

}  // namespace waring

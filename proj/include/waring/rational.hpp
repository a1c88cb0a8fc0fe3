#ifndef WARING_RATIONAL_HPP
#define WARING_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace waring {

using Integer = mpz_class;

/// Thrown on arithmetic that has no exact result (division by zero,
/// radicand mismatch, sign of a non-real number).
class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exact rational number in canonical form: gcd(num, den) = 1, den > 0.
class Rational {
public:
    Rational() = default;
    Rational(int v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    double to_double() const { return value_.get_d(); }

    /// `p` or `p/q`.
    std::string to_string() const;

private:
    mpq_class value_;
};

Rational abs(const Rational& x);
Rational pow(const Rational& x, unsigned e);
inline std::string to_string(const Rational& x) { return x.to_string(); }

/// C(n, k) as an exact integer; zero outside 0 <= k <= n.
Integer binomial(long n, long k);

/// Largest square-free divisor class of |n|: returns s with |n| = t^2 * s and
/// s square-free, keeping the sign of n. square_free_part(0) == 0.
Integer square_free_part(const Integer& n);

/// Square root of a perfect square, else nullopt-like via bool.
bool exact_sqrt(const Integer& n, Integer& root);

struct SquareRoot {
    Rational root;  // root * root == x
};
struct NotSquare {
    Integer square_free_part;  // sqrt(x) lies in Q(sqrt(square_free_part))
    bool negative = false;
};
using SquareTest = std::variant<SquareRoot, NotSquare>;

/// Decides whether x is the square of a rational number.
SquareTest is_square_in_Q(const Rational& x);

/// k-th root of x when it is rational (odd k admits negative x).
bool exact_root(const Rational& x, unsigned k, Rational& root);

/// Narrowing to a machine radicand; throws if out of range.
std::int64_t to_int64(const Integer& n);

}  // namespace waring

#endif  // WARING_RATIONAL_HPP

#ifndef WARING_BIGAPPROX_HPP
#define WARING_BIGAPPROX_HPP

#include "waring/quadratic.hpp"

#include <mpfr.h>

#include <string>

namespace waring {

inline constexpr long kDefaultPrecisionBits = 256;

/// Owning handle for an mpfr_t.
class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t prec = kDefaultPrecisionBits);
    Mpfr(const Mpfr& o);
    Mpfr(Mpfr&& o) noexcept;
    Mpfr& operator=(const Mpfr& o);
    Mpfr& operator=(Mpfr&& o) noexcept;
    ~Mpfr();

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    /// Scientific notation with `digits` significant digits.
    std::string to_string(int digits = 30) const;

private:
    mpfr_t value_;
};

/// A real ball: the true value lies within mid +- rad. Every operation
/// rounds the midpoint to nearest and widens the radius upward to cover both
/// the input radii and the rounding error.
class BigApprox {
public:
    explicit BigApprox(mpfr_prec_t prec = kDefaultPrecisionBits);
    BigApprox(const Rational& q, mpfr_prec_t prec);

    /// Ball around a computed value; `rounded` adds one rounding error to the
    /// radius (for correctly rounded library results).
    static BigApprox from_value(const Mpfr& v, bool rounded);

    /// sqrt(q) for q >= 0.
    static BigApprox sqrt_of(const Rational& q, mpfr_prec_t prec);

    const Mpfr& mid() const { return mid_; }
    const Mpfr& rad() const { return rad_; }
    mpfr_prec_t precision() const { return mid_.precision(); }

    /// Mutable access for iterative solvers that manage their own error.
    Mpfr& mid_mut() { return mid_; }
    void clear_radius();
    /// Adds `extra` (>= 0) to the radius.
    void widen(const Mpfr& extra);

    BigApprox& operator+=(const BigApprox& o);
    BigApprox& operator-=(const BigApprox& o);
    BigApprox& operator*=(const BigApprox& o);
    BigApprox& operator/=(const BigApprox& o);
    friend BigApprox operator+(BigApprox a, const BigApprox& b) { return a += b; }
    friend BigApprox operator-(BigApprox a, const BigApprox& b) { return a -= b; }
    friend BigApprox operator*(BigApprox a, const BigApprox& b) { return a *= b; }
    friend BigApprox operator/(BigApprox a, const BigApprox& b) { return a /= b; }
    BigApprox operator-() const;

    /// Upper bound on |value|.
    Mpfr abs_upper() const;
    /// True when the ball [mid - rad, mid + rad] contains q.
    bool contains(const Rational& q) const;
    /// True when `inner` lies entirely inside this ball.
    bool encloses(const BigApprox& inner) const;
    bool contains_zero() const;

private:
    void add_rounding_error();

    Mpfr mid_;
    Mpfr rad_;
};

/// Complex ball as a pair of real balls.
class ComplexApprox {
public:
    explicit ComplexApprox(mpfr_prec_t prec = kDefaultPrecisionBits) : re_(prec), im_(prec) {}
    ComplexApprox(BigApprox re, BigApprox im) : re_(std::move(re)), im_(std::move(im)) {}
    ComplexApprox(const Rational& q, mpfr_prec_t prec) : re_(q, prec), im_(prec) {}

    const BigApprox& re() const { return re_; }
    const BigApprox& im() const { return im_; }
    BigApprox& re() { return re_; }
    BigApprox& im() { return im_; }
    mpfr_prec_t precision() const { return re_.precision(); }

    ComplexApprox& operator+=(const ComplexApprox& o);
    ComplexApprox& operator-=(const ComplexApprox& o);
    ComplexApprox& operator*=(const ComplexApprox& o);
    ComplexApprox& operator/=(const ComplexApprox& o);
    friend ComplexApprox operator+(ComplexApprox a, const ComplexApprox& b) { return a += b; }
    friend ComplexApprox operator-(ComplexApprox a, const ComplexApprox& b) { return a -= b; }
    friend ComplexApprox operator*(ComplexApprox a, const ComplexApprox& b) { return a *= b; }
    friend ComplexApprox operator/(ComplexApprox a, const ComplexApprox& b) { return a /= b; }
    ComplexApprox operator-() const { return {-re_, -im_}; }

    /// Upper bound on the modulus.
    Mpfr abs_upper() const;
    /// Modulus of the midpoint, for iteration control.
    Mpfr abs_mid() const;
    void clear_radius();

    /// `re + im*I` with `digits` significant digits.
    std::string to_string(int digits = 40) const;

private:
    BigApprox re_;
    BigApprox im_;
};

/// sqrt(m) for an integer m of either sign.
ComplexApprox sqrt_approx(const Integer& m, mpfr_prec_t prec);

/// Complex enclosure of an exact scalar under the embedding sqrt(m) =
/// positive real root (or i*sqrt(|m|) for m < 0).
ComplexApprox embed(const Rational& x, mpfr_prec_t prec);
ComplexApprox embed(const QuadExt& x, mpfr_prec_t prec);
ComplexApprox embed(const TowerScalar& x, mpfr_prec_t prec);

/// Real enclosure; throws ArithmeticError for non-real scalars.
BigApprox embed_real(const TowerScalar& x, mpfr_prec_t prec);

/// Parses a decimal or `a + b*I` string produced by ComplexApprox::to_string.
/// The resulting ball has radius zero.
ComplexApprox parse_complex_approx(const std::string& text, mpfr_prec_t prec);

}  // namespace waring

#endif  // WARING_BIGAPPROX_HPP

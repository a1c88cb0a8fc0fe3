#ifndef WARING_FACTOR_HPP
#define WARING_FACTOR_HPP

#include "waring/binform.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace waring {

/// f = scalar * prod linear^m * prod quadratic^n * unfactored_remainder.
///
/// Linear factors are primitive integer forms (b x - a y) for the rational
/// projective roots (a : b); the root (1 : 0) appears as y. Quadratic factors
/// are Q-irreducible; the remainder has no rational root and no isolated
/// quadratic part.
struct FactorizationShape {
    Rational scalar;
    std::vector<std::pair<BinaryForm<Rational>, int>> linear_factors;
    std::vector<std::pair<BinaryForm<Rational>, int>> quadratic_factors;
    BinaryForm<Rational> unfactored_remainder;

    /// Number of rational projective roots counted with multiplicity.
    int rational_root_multiplicity() const;
    BinaryForm<Rational> reconstruct() const;
};

FactorizationShape rational_and_quadratic_factor(const BinaryForm<Rational>& f);

/// Simplest (smallest denominator) rational in [lo, hi].
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

/// Distinct rational roots of a univariate polynomial with rational
/// coefficients, increasing.
std::vector<Rational> rational_roots(const Poly<Rational>& p);

/// A Q-irreducible quadratic form q = A x^2 + B x y + C y^2 split over
/// Q(sqrt(m)), m the square-free part of B^2 - 4AC.
struct QuadraticSplit {
    Integer radicand;
    /// The two projective roots (alpha : beta), first coordinate normalized
    /// to 1 when possible.
    std::pair<QuadExt, QuadExt> alpha;
    std::pair<QuadExt, QuadExt> beta;
};

QuadraticSplit split_quadratic(const BinaryForm<Rational>& q);

}  // namespace waring

#endif  // WARING_FACTOR_HPP

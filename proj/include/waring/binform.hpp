#ifndef WARING_BINFORM_HPP
#define WARING_BINFORM_HPP

#include "waring/poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace waring {

/// Homogeneous f(x, y) = sum_i c_i x^(d-i) y^i of declared degree d.
///
/// Leading zeros are allowed (f may be divisible by y); the declared degree
/// is never inferred from the coefficients.
template <class F>
class BinaryForm {
public:
    BinaryForm() : coeffs_{F(0)} {}
    BinaryForm(int degree, std::vector<F> coeffs);

    static BinaryForm zero(int degree) { return BinaryForm(degree, std::vector<F>(degree + 1, F(0))); }
    /// alpha*x + beta*y
    static BinaryForm linear(const F& alpha, const F& beta) { return BinaryForm(1, {alpha, beta}); }
    /// f(x, 1) = p(x), times y^y_power.
    static BinaryForm homogenize(const Poly<F>& p, int y_power);

    int degree() const { return degree_; }
    const F& coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    const std::vector<F>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    /// Largest m with y^m | f, i.e. the multiplicity of the root (1 : 0).
    int y_multiplicity() const;
    /// f(x, 1) as a univariate polynomial in ascending powers of x.
    Poly<F> dehomogenize() const;

    BinaryForm& operator+=(const BinaryForm& o);
    BinaryForm& operator-=(const BinaryForm& o);
    BinaryForm& operator*=(const F& s);
    friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
    friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
    friend BinaryForm operator*(BinaryForm a, const F& s) { return a *= s; }
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) { return multiply(a, b); }
    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const BinaryForm& a, const BinaryForm& b) { return !(a == b); }

    static BinaryForm multiply(const BinaryForm& a, const BinaryForm& b);

    F evaluate(const F& x, const F& y) const;

private:
    int degree_ = 0;
    std::vector<F> coeffs_;
};

/// Binomial-normalized coefficients: f = sum C(d,i) a_i x^(d-i) y^i.
template <class F>
struct BinomialView {
    int degree = 0;
    std::vector<F> a;
};

template <class F>
BinomialView<F> binomial_view(const BinaryForm<F>& f);
template <class F>
BinaryForm<F> from_binomial(const BinomialView<F>& v);

template <class F>
BinaryForm<F> power(const BinaryForm<F>& f, int e);

/// f(a x + b y, c x + d y).
template <class F>
BinaryForm<F> substitute(const BinaryForm<F>& f, const F& a, const F& b, const F& c, const F& d);

template <class F>
BinaryForm<F> derivative_x(const BinaryForm<F>& f);
template <class F>
BinaryForm<F> derivative_y(const BinaryForm<F>& f);

/// Monic gcd (dehomogenized part monic) times the common power of y.
template <class F>
BinaryForm<F> gcd_forms(const BinaryForm<F>& f, const BinaryForm<F>& g);

/// True when g divides f; on success `quotient` receives f / g.
template <class F>
bool divides(const BinaryForm<F>& g, const BinaryForm<F>& f, BinaryForm<F>* quotient = nullptr);

template <class F>
struct SquareFreeDecomposition {
    F scalar;
    /// (part, multiplicity), multiplicities strictly increasing.
    std::vector<std::pair<BinaryForm<F>, int>> parts;
};

/// f = scalar * prod part^multiplicity, parts square-free and coprime.
template <class F>
SquareFreeDecomposition<F> square_free_decompose(const BinaryForm<F>& f);

/// No repeated projective root (degree 0 and 1 forms are square-free).
template <class F>
bool is_square_free(const BinaryForm<F>& f);

/// Number of distinct projective roots over C.
template <class F>
int distinct_root_count(const BinaryForm<F>& f);

/// True for c * l^d with l linear (a single projective root).
template <class F>
bool is_power_of_linear(const BinaryForm<F>& f);

/// Real projective roots under the real embedding, the root (1 : 0)
/// included; weighted by multiplicity when requested.
template <class F>
int real_root_count(const BinaryForm<F>& f, bool with_multiplicity);

template <class F>
bool is_hyperbolic(const BinaryForm<F>& f);

/// Homogeneous resultant of the two coefficient lists.
template <class F>
F resultant(const BinaryForm<F>& f, const BinaryForm<F>& g);

/// Discriminant normalized so that x^3 + p x + q gives -4p^3 - 27q^2 and
/// a x^2 + b x y + c y^2 gives b^2 - 4ac; zero iff f has a repeated root.
template <class F>
F discriminant(const BinaryForm<F>& f);

/// Descartes gap bound on the number of non-real roots: every run of L
/// vanishing interior coefficients contributes 2*floor(L/2). Zero when an
/// end coefficient vanishes.
template <class F>
int descartes_gap_bound(const BinaryForm<F>& f);

/// Scales f so that its last nonzero coefficient is 1; rational-valued
/// forms are then made primitive over Z with that coefficient positive.
template <class F>
BinaryForm<F> canonical_projective(const BinaryForm<F>& f);

/// Renders f in the grammar accepted by the parser.
template <class F>
std::string to_string(const BinaryForm<F>& f);

/// True when every coefficient is rational.
template <class F>
bool has_rational_coefficients(const BinaryForm<F>& f);

template <class F>
BinaryForm<Rational> to_rational_form(const BinaryForm<F>& f);

/// Coefficientwise embedding into a larger scalar domain.
template <class To, class From>
BinaryForm<To> convert_form(const BinaryForm<From>& f) {
    std::vector<To> c;
    c.reserve(f.coeffs().size());
    for (const From& x : f.coeffs()) c.push_back(To(x));
    return BinaryForm<To>(f.degree(), std::move(c));
}

}  // namespace waring

#endif  // WARING_BINFORM_HPP

#include "waring/binform.hpp"

#include <stdexcept>

namespace waring {

template <class F>
BinaryForm<F>::BinaryForm(int degree, std::vector<F> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree < 0 || coeffs_.size() != static_cast<std::size_t>(degree) + 1) {
        throw std::invalid_argument("binary form of degree " + std::to_string(degree) + " needs " +
                                    std::to_string(degree + 1) + " coefficients");
    }
}

template <class F>
BinaryForm<F> BinaryForm<F>::homogenize(const Poly<F>& p, int y_power) {
    int dp = static_cast<int>(poly::degree(p));
    if (dp < 0) {
        return zero(y_power);
    }
    int d = dp + y_power;
    std::vector<F> c(static_cast<std::size_t>(d) + 1, F(0));
    for (int k = 0; k <= dp; ++k) {
        c[static_cast<std::size_t>(d - k)] = p[static_cast<std::size_t>(k)];
    }
    return BinaryForm(d, std::move(c));
}

template <class F>
bool BinaryForm<F>::is_zero() const {
    for (const F& c : coeffs_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

template <class F>
int BinaryForm<F>::y_multiplicity() const {
    int m = 0;
    while (m <= degree_ && coeffs_[static_cast<std::size_t>(m)].is_zero()) ++m;
    return m;
}

template <class F>
Poly<F> BinaryForm<F>::dehomogenize() const {
    Poly<F> p(coeffs_.size(), F(0));
    for (int k = 0; k <= degree_; ++k) {
        p[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(degree_ - k)];
    }
    poly::trim(p);
    return p;
}

template <class F>
BinaryForm<F>& BinaryForm<F>::operator+=(const BinaryForm& o) {
    if (o.degree_ != degree_) throw std::invalid_argument("adding forms of different degree");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

template <class F>
BinaryForm<F>& BinaryForm<F>::operator-=(const BinaryForm& o) {
    if (o.degree_ != degree_) throw std::invalid_argument("subtracting forms of different degree");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

template <class F>
BinaryForm<F>& BinaryForm<F>::operator*=(const F& s) {
    for (F& c : coeffs_) c *= s;
    return *this;
}

template <class F>
BinaryForm<F> BinaryForm<F>::multiply(const BinaryForm& a, const BinaryForm& b) {
    BinaryForm r = zero(a.degree_ + b.degree_);
    for (int i = 0; i <= a.degree_; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; j <= b.degree_; ++j) {
            r.coeffs_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
    }
    return r;
}

template <class F>
F BinaryForm<F>::evaluate(const F& x, const F& y) const {
    F acc(0);
    F ypow(1);
    std::vector<F> xpow(coeffs_.size(), F(1));
    for (std::size_t k = 1; k < xpow.size(); ++k) xpow[k] = xpow[k - 1] * x;
    for (int i = 0; i <= degree_; ++i) {
        acc += coeffs_[static_cast<std::size_t>(i)] * xpow[static_cast<std::size_t>(degree_ - i)] * ypow;
        ypow *= y;
    }
    return acc;
}

template <class F>
BinomialView<F> binomial_view(const BinaryForm<F>& f) {
    BinomialView<F> v;
    v.degree = f.degree();
    for (int i = 0; i <= f.degree(); ++i) {
        v.a.push_back(f.coeff(i) / F(Rational(binomial(f.degree(), i))));
    }
    return v;
}

template <class F>
BinaryForm<F> from_binomial(const BinomialView<F>& v) {
    std::vector<F> c;
    for (int i = 0; i <= v.degree; ++i) {
        c.push_back(v.a[static_cast<std::size_t>(i)] * F(Rational(binomial(v.degree, i))));
    }
    return BinaryForm<F>(v.degree, std::move(c));
}

template <class F>
BinaryForm<F> power(const BinaryForm<F>& f, int e) {
    BinaryForm<F> r(0, {F(1)});
    for (int i = 0; i < e; ++i) r = r * f;
    return r;
}

template <class F>
BinaryForm<F> substitute(const BinaryForm<F>& f, const F& a, const F& b, const F& c, const F& d) {
    int n = f.degree();
    auto l1 = BinaryForm<F>::linear(a, b);
    auto l2 = BinaryForm<F>::linear(c, d);
    std::vector<BinaryForm<F>> p1{BinaryForm<F>(0, {F(1)})};
    std::vector<BinaryForm<F>> p2{BinaryForm<F>(0, {F(1)})};
    for (int k = 1; k <= n; ++k) {
        p1.push_back(p1.back() * l1);
        p2.push_back(p2.back() * l2);
    }
    BinaryForm<F> r = BinaryForm<F>::zero(n);
    for (int i = 0; i <= n; ++i) {
        if (f.coeff(i).is_zero()) continue;
        r += (p1[static_cast<std::size_t>(n - i)] * p2[static_cast<std::size_t>(i)]) * f.coeff(i);
    }
    return r;
}

template <class F>
BinaryForm<F> derivative_x(const BinaryForm<F>& f) {
    int d = f.degree();
    if (d == 0) return BinaryForm<F>::zero(0);
    std::vector<F> c;
    for (int i = 0; i < d; ++i) c.push_back(f.coeff(i) * F(Rational(d - i)));
    return BinaryForm<F>(d - 1, std::move(c));
}

template <class F>
BinaryForm<F> derivative_y(const BinaryForm<F>& f) {
    int d = f.degree();
    if (d == 0) return BinaryForm<F>::zero(0);
    std::vector<F> c;
    for (int i = 1; i <= d; ++i) c.push_back(f.coeff(i) * F(Rational(i)));
    return BinaryForm<F>(d - 1, std::move(c));
}

template <class F>
BinaryForm<F> gcd_forms(const BinaryForm<F>& f, const BinaryForm<F>& g) {
    if (f.is_zero() && g.is_zero()) {
        throw std::invalid_argument("gcd of two zero forms");
    }
    if (f.is_zero()) return canonical_projective(g);
    if (g.is_zero()) return canonical_projective(f);
    int m = std::min(f.y_multiplicity(), g.y_multiplicity());
    Poly<F> p = poly::gcd(f.dehomogenize(), g.dehomogenize());
    return BinaryForm<F>::homogenize(p, m);
}

template <class F>
bool divides(const BinaryForm<F>& g, const BinaryForm<F>& f, BinaryForm<F>* quotient) {
    if (g.is_zero()) return false;
    if (f.is_zero()) {
        if (quotient != nullptr && f.degree() >= g.degree()) *quotient = BinaryForm<F>::zero(f.degree() - g.degree());
        return f.degree() >= g.degree();
    }
    if (g.degree() > f.degree() || g.y_multiplicity() > f.y_multiplicity()) return false;
    auto [q, r] = poly::divmod(f.dehomogenize(), g.dehomogenize());
    if (!r.empty()) return false;
    if (quotient != nullptr) {
        int y_power = (f.degree() - g.degree()) - static_cast<int>(poly::degree(q));
        *quotient = BinaryForm<F>::homogenize(q, y_power);
    }
    return true;
}

template <class F>
SquareFreeDecomposition<F> square_free_decompose(const BinaryForm<F>& f) {
    if (f.is_zero()) throw std::invalid_argument("square-free decomposition of the zero form");
    SquareFreeDecomposition<F> out;
    int m = f.y_multiplicity();
    Poly<F> p = f.dehomogenize();
    out.scalar = poly::leading(p);
    bool merged_y = (m == 0);
    for (auto& [part, mult] : poly::yun(p)) {
        BinaryForm<F> form = BinaryForm<F>::homogenize(part, 0);
        if (!merged_y && mult > m) {
            out.parts.emplace_back(BinaryForm<F>::linear(F(0), F(1)), m);
            merged_y = true;
        }
        if (!merged_y && mult == m) {
            form = form * BinaryForm<F>::linear(F(0), F(1));
            merged_y = true;
        }
        out.parts.emplace_back(std::move(form), mult);
    }
    if (!merged_y) {
        out.parts.emplace_back(BinaryForm<F>::linear(F(0), F(1)), m);
    }
    return out;
}

template <class F>
bool is_square_free(const BinaryForm<F>& f) {
    if (f.is_zero()) return false;
    if (f.y_multiplicity() >= 2) return false;
    return poly::is_square_free(f.dehomogenize());
}

template <class F>
int distinct_root_count(const BinaryForm<F>& f) {
    int n = 0;
    for (const auto& [part, mult] : square_free_decompose(f).parts) n += part.degree();
    return n;
}

template <class F>
bool is_power_of_linear(const BinaryForm<F>& f) {
    if (f.is_zero() || f.degree() == 0) return false;
    return distinct_root_count(f) == 1;
}

template <class F>
int real_root_count(const BinaryForm<F>& f, bool with_multiplicity) {
    if (f.is_zero()) throw std::invalid_argument("real roots of the zero form");
    int m = f.y_multiplicity();
    int count = with_multiplicity ? m : (m > 0 ? 1 : 0);
    for (const auto& [part, mult] : poly::yun(f.dehomogenize())) {
        int n = poly::count_real_roots(part);
        count += with_multiplicity ? n * mult : n;
    }
    return count;
}

template <class F>
bool is_hyperbolic(const BinaryForm<F>& f) {
    return real_root_count(f, true) == f.degree();
}

template <class F>
F resultant(const BinaryForm<F>& f, const BinaryForm<F>& g) {
    return poly::sylvester_resultant(f.coeffs(), g.coeffs());
}

template <class F>
F discriminant(const BinaryForm<F>& f) {
    int n = f.degree();
    if (n < 2) throw std::invalid_argument("discriminant needs degree >= 2");
    if (f.is_zero()) return F(0);
    // The discriminant is invariant under y -> y + t x, which moves the root
    // (1 : t) to (1 : 0); pick t with f(1, t) != 0 so the x^n coefficient is
    // nonzero.
    BinaryForm<F> g = f;
    for (long t = 1; g.coeff(0).is_zero(); ++t) {
        g = substitute(f, F(1), F(0), F(Rational(t)), F(1));
    }
    std::vector<F> p = g.coeffs();
    std::vector<F> dp;
    for (int i = 0; i < n; ++i) dp.push_back(p[static_cast<std::size_t>(i)] * F(Rational(n - i)));
    F res = poly::sylvester_resultant(p, dp);
    F disc = res / p[0];
    if ((n * (n - 1) / 2) % 2 == 1) disc = -disc;
    return disc;
}

template <class F>
int descartes_gap_bound(const BinaryForm<F>& f) {
    int d = f.degree();
    if (d < 2 || f.coeff(0).is_zero() || f.coeff(d).is_zero()) return 0;
    int total = 0;
    int run = 0;
    for (int i = 1; i < d; ++i) {
        if (f.coeff(i).is_zero()) {
            ++run;
        } else {
            total += 2 * (run / 2);
            run = 0;
        }
    }
    total += 2 * (run / 2);
    return total;
}

template <class F>
BinaryForm<F> canonical_projective(const BinaryForm<F>& f) {
    if (f.is_zero()) return f;
    int last = f.degree();
    while (f.coeff(last).is_zero()) --last;
    F inv = F(1) / f.coeff(last);
    BinaryForm<F> g = f * inv;
    if (!has_rational_coefficients(g)) return g;
    Integer den = 1;
    Integer num = 0;
    for (const F& c : g.coeffs()) {
        Rational q = rational_value(c);
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.denominator().get_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.numerator().get_mpz_t());
    }
    return g * F(Rational(den, num));
}

template <class F>
bool has_rational_coefficients(const BinaryForm<F>& f) {
    for (const F& c : f.coeffs()) {
        if (!is_rational(c)) return false;
    }
    return true;
}

template <class F>
BinaryForm<Rational> to_rational_form(const BinaryForm<F>& f) {
    std::vector<Rational> c;
    for (const F& x : f.coeffs()) c.push_back(rational_value(x));
    return BinaryForm<Rational>(f.degree(), std::move(c));
}

namespace {

std::string monomial(int xe, int ye) {
    std::string out;
    if (xe > 0) out += xe == 1 ? "x" : "x^" + std::to_string(xe);
    if (ye > 0) {
        if (!out.empty()) out += "*";
        out += ye == 1 ? "y" : "y^" + std::to_string(ye);
    }
    return out;
}

// Coefficient text without its leading sign, plus the sign itself.
template <class F>
std::pair<bool, std::string> coefficient_text(const F& c) {
    if (is_rational(c)) {
        Rational q = rational_value(c);
        return {q.sign() < 0, abs(q).to_string()};
    }
    std::vector<RadicalTerm> terms = radical_terms(c);
    bool negative = !terms.empty() && terms.front().coeff.sign() < 0;
    if (negative) {
        for (RadicalTerm& t : terms) t.coeff = -t.coeff;
    }
    return {negative, "(" + render_radical_terms(terms) + ")"};
}

}  // namespace

template <class F>
std::string to_string(const BinaryForm<F>& f) {
    std::string out;
    int d = f.degree();
    for (int i = 0; i <= d; ++i) {
        const F& c = f.coeff(i);
        if (c.is_zero()) continue;
        auto [negative, text] = coefficient_text(c);
        std::string mono = monomial(d - i, i);
        std::string term;
        if (mono.empty()) {
            term = text;
        } else if (text == "1") {
            term = mono;
        } else {
            term = text + "*" + mono;
        }
        if (out.empty()) {
            out = negative ? "-" + term : term;
        } else {
            out += negative ? " - " : " + ";
            out += term;
        }
    }
    return out.empty() ? "0" : out;
}

#define WARING_INSTANTIATE_BINFORM(F)                                                              \
    template class BinaryForm<F>;                                                                  \
    template BinomialView<F> binomial_view(const BinaryForm<F>&);                                  \
    template BinaryForm<F> from_binomial(const BinomialView<F>&);                                  \
    template BinaryForm<F> power(const BinaryForm<F>&, int);                                       \
    template BinaryForm<F> substitute(const BinaryForm<F>&, const F&, const F&, const F&, const F&); \
    template BinaryForm<F> derivative_x(const BinaryForm<F>&);                                     \
    template BinaryForm<F> derivative_y(const BinaryForm<F>&);                                     \
    template BinaryForm<F> gcd_forms(const BinaryForm<F>&, const BinaryForm<F>&);                  \
    template bool divides(const BinaryForm<F>&, const BinaryForm<F>&, BinaryForm<F>*);             \
    template SquareFreeDecomposition<F> square_free_decompose(const BinaryForm<F>&);               \
    template bool is_square_free(const BinaryForm<F>&);                                            \
    template int distinct_root_count(const BinaryForm<F>&);                                        \
    template bool is_power_of_linear(const BinaryForm<F>&);                                        \
    template int real_root_count(const BinaryForm<F>&, bool);                                      \
    template bool is_hyperbolic(const BinaryForm<F>&);                                             \
    template F resultant(const BinaryForm<F>&, const BinaryForm<F>&);                              \
    template F discriminant(const BinaryForm<F>&);                                                 \
    template int descartes_gap_bound(const BinaryForm<F>&);                                        \
    template BinaryForm<F> canonical_projective(const BinaryForm<F>&);                             \
    template std::string to_string(const BinaryForm<F>&);                                          \
    template bool has_rational_coefficients(const BinaryForm<F>&);                                 \
    template BinaryForm<Rational> to_rational_form(const BinaryForm<F>&);

WARING_INSTANTIATE_BINFORM(Rational)
WARING_INSTANTIATE_BINFORM(QuadExt)

// Tower forms only need the algebra used by exact verification.
template class BinaryForm<TowerScalar>;
template BinaryForm<TowerScalar> power(const BinaryForm<TowerScalar>&, int);
template std::string to_string(const BinaryForm<TowerScalar>&);
template BinomialView<TowerScalar> binomial_view(const BinaryForm<TowerScalar>&);

}  // namespace waring

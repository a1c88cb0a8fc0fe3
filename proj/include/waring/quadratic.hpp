#ifndef WARING_QUADRATIC_HPP
#define WARING_QUADRATIC_HPP

#include "waring/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace waring {

// A rational multiple of sqrt(radical); the radical is a plain integer
// product, normalized only when rendering.
struct RadicalTerm {
    Rational coeff;
    Integer radical;
};

// Helpers shared by every scalar domain so generic code can query them
// uniformly; the Quadratic overloads live below.
inline int sign(const Rational& x) { return x.sign(); }
inline bool is_rational(const Rational&) { return true; }
inline Rational rational_value(const Rational& x) { return x; }
inline Rational abs_upper(const Rational& x) { return abs(x); }
inline std::int64_t radicand_of(const Rational&) { return 0; }
inline std::vector<RadicalTerm> radical_terms(const Rational& x) {
    if (x.is_zero()) {
        return {};
    }
    return {RadicalTerm{x, 1}};
}

/// Renders sum of c*sqrt(r) with every radical reduced to square-free form.
std::string render_radical_terms(const std::vector<RadicalTerm>& terms);

/// a + b*sqrt(m) with a, b in Base.
///
/// The radicand is a square-free integer fixed per element. Radicand 0 marks
/// an element that lies in Base (b == 0) and is not yet bound to any
/// extension; it combines freely with elements of any radicand. Combining two
/// bound elements with different radicands throws ArithmeticError.
template <class Base>
class Quadratic {
public:
    Quadratic() : a_(0), b_(0) {}
    Quadratic(int v) : a_(v), b_(0) {}  // NOLINT(google-explicit-constructor)
    Quadratic(const Rational& v) : a_(v), b_(0) {}  // NOLINT(google-explicit-constructor)
    template <class B = Base, class = std::enable_if_t<!std::is_same_v<B, Rational>>>
    Quadratic(const Base& v) : a_(v), b_(0) {}  // NOLINT(google-explicit-constructor)

    /// a + b*sqrt(m); m is reduced to its square-free part, with square
    /// factors moved into b. A radicand that is a square folds into Base.
    Quadratic(Base a, Base b, const Integer& m) : a_(std::move(a)), b_(std::move(b)) {
        if (m == 0) {
            throw ArithmeticError("radicand must be nonzero");
        }
        Integer s = square_free_part(m);
        Integer t;
        exact_sqrt(Integer(m / s), t);
        b_ *= Base(Rational(t));
        if (s == 1) {
            a_ += b_;
            b_ = Base(0);
            return;
        }
        fold_into_base(s);
    }

    const Base& a() const { return a_; }
    const Base& b() const { return b_; }
    std::int64_t radicand() const { return m_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    Quadratic& operator+=(const Quadratic& o) {
        m_ = join(m_, o.m_);
        a_ += o.a_;
        b_ += o.b_;
        unbind_if_trivial();
        return *this;
    }
    Quadratic& operator-=(const Quadratic& o) {
        m_ = join(m_, o.m_);
        a_ -= o.a_;
        b_ -= o.b_;
        unbind_if_trivial();
        return *this;
    }
    Quadratic& operator*=(const Quadratic& o) {
        std::int64_t m = join(m_, o.m_);
        Base na = a_ * o.a_;
        if (m != 0) {
            na += Base(Rational(m)) * b_ * o.b_;
        }
        Base nb = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(na);
        b_ = std::move(nb);
        m_ = m;
        unbind_if_trivial();
        return *this;
    }
    Quadratic& operator/=(const Quadratic& o) { return *this *= o.inverse(); }

    friend Quadratic operator+(Quadratic x, const Quadratic& y) { return x += y; }
    friend Quadratic operator-(Quadratic x, const Quadratic& y) { return x -= y; }
    friend Quadratic operator*(Quadratic x, const Quadratic& y) { return x *= y; }
    friend Quadratic operator/(Quadratic x, const Quadratic& y) { return x /= y; }
    Quadratic operator-() const {
        Quadratic r = *this;
        r.a_ = -a_;
        r.b_ = -b_;
        return r;
    }

    friend bool operator==(const Quadratic& x, const Quadratic& y) {
        if (x.m_ != 0 && y.m_ != 0 && x.m_ != y.m_) {
            throw ArithmeticError("radicand mismatch: " + std::to_string(x.m_) + " vs " +
                                  std::to_string(y.m_));
        }
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const Quadratic& x, const Quadratic& y) { return !(x == y); }

    /// a^2 - m*b^2, the norm down to Base.
    Base norm() const {
        if (m_ == 0) {
            return a_ * a_;
        }
        return a_ * a_ - Base(Rational(m_)) * b_ * b_;
    }

    Quadratic conjugate() const {
        Quadratic r = *this;
        r.b_ = -b_;
        return r;
    }

    Quadratic inverse() const {
        if (is_zero()) {
            throw ArithmeticError("division by zero");
        }
        Base n = norm();
        if (n.is_zero()) {
            throw ArithmeticError("zero divisor: radicand is a square in the base field");
        }
        Quadratic r = conjugate();
        r.a_ /= n;
        r.b_ /= n;
        return r;
    }

private:
    static std::int64_t join(std::int64_t x, std::int64_t y) {
        if (x == 0) {
            return y;
        }
        if (y == 0 || x == y) {
            return x;
        }
        throw ArithmeticError("radicand mismatch: " + std::to_string(x) + " vs " +
                              std::to_string(y));
    }

    void unbind_if_trivial() {
        if (b_.is_zero()) {
            m_ = 0;
        }
    }

    // When Base is itself an extension by sqrt(s), sqrt(s) already lies in
    // Base and the element collapses.
    void fold_into_base(const Integer& s) {
        if constexpr (!std::is_same_v<Base, Rational>) {
            std::int64_t base_m = radicand_of(a_) != 0 ? radicand_of(a_) : radicand_of(b_);
            if (base_m != 0 && Integer(base_m) == s) {
                a_ += b_ * Base(Rational(0), Rational(1), s);
                b_ = Base(0);
                m_ = 0;
                return;
            }
        }
        m_ = to_int64(s);
        unbind_if_trivial();
    }

    Base a_;
    Base b_;
    std::int64_t m_ = 0;
};

using QuadExt = Quadratic<Rational>;

/// c00 + c10*sqrt(m1) + c01*sqrt(m2) + c11*sqrt(m1)*sqrt(m2); the inner
/// field carries m1, the outer extension m2.
using TowerScalar = Quadratic<QuadExt>;

TowerScalar make_tower(const Rational& c00, const Rational& c10, const Rational& c01,
                       const Rational& c11, std::int64_t m1, std::int64_t m2);

template <class Base>
std::int64_t radicand_of(const Quadratic<Base>& x) {
    return x.radicand();
}

template <class Base>
bool is_rational(const Quadratic<Base>& x) {
    return x.b().is_zero() && is_rational(x.a());
}

template <class Base>
Rational rational_value(const Quadratic<Base>& x) {
    if (!x.b().is_zero()) {
        throw ArithmeticError("scalar is not rational");
    }
    return rational_value(x.a());
}

template <class Base>
Quadratic<Base> conjugate(const Quadratic<Base>& x) {
    return x.conjugate();
}

/// Sign under the real embedding sqrt(m) > 0.
template <class Base>
int sign(const Quadratic<Base>& x) {
    int sa = sign(x.a());
    int sb = sign(x.b());
    if (sb == 0) {
        return sa;
    }
    if (x.radicand() < 0) {
        throw ArithmeticError("sign of a non-real scalar");
    }
    if (sa == 0 || sa == sb) {
        return sb;
    }
    // Opposite signs: the larger of a^2 and m*b^2 wins.
    int n = sign(x.norm());
    return n > 0 ? sa : sb;
}

template <class Base>
Rational abs_upper(const Quadratic<Base>& x) {
    Rational r = abs_upper(x.a());
    if (!x.b().is_zero()) {
        Integer root;
        Integer m = abs(Integer(x.radicand()));
        mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
        r += abs_upper(x.b()) * Rational(Integer(root + 1));
    }
    return r;
}

template <class Base>
std::vector<RadicalTerm> radical_terms(const Quadratic<Base>& x) {
    std::vector<RadicalTerm> out = radical_terms(x.a());
    for (RadicalTerm t : radical_terms(x.b())) {
        // sqrt(r)*sqrt(m) = -sqrt(r*m) when both are negative.
        if (t.radical < 0 && x.radicand() < 0) {
            t.coeff = -t.coeff;
        }
        t.radical *= x.radicand();
        out.push_back(std::move(t));
    }
    return out;
}

template <class Base>
std::string to_string(const Quadratic<Base>& x) {
    return render_radical_terms(radical_terms(x));
}

}  // namespace waring

#endif  // WARING_QUADRATIC_HPP

#include "waring/parse.hpp"

#include <cctype>
#include <utility>

namespace waring {

ParseError::ParseError(std::size_t position, const std::string& what)
    : std::invalid_argument("position " + std::to_string(position) + ": " + what), position_(position) {}

namespace {

constexpr int kMaxExponent = 1000;

void add_into(RadicalSum& acc, const Integer& radical, const Rational& c) {
    if (c.is_zero()) return;
    Rational& slot = acc[radical];
    slot += c;
    if (slot.is_zero()) acc.erase(radical);
}

RadicalSum radical_mul(const RadicalSum& a, const RadicalSum& b) {
    RadicalSum out;
    for (const auto& [ra, ca] : a) {
        for (const auto& [rb, cb] : b) {
            Rational c = ca * cb;
            if (ra < 0 && rb < 0) c = -c;  // sqrt(-p) sqrt(-q) = -sqrt(pq)
            Integer prod = ra * rb;
            Integer s = square_free_part(prod);
            Integer t;
            exact_sqrt(Integer(prod / s), t);
            add_into(out, s, c * Rational(t));
        }
    }
    return out;
}

using Monomial = std::pair<int, int>;  // (x exponent, y exponent)
using PolyExpr = std::map<Monomial, RadicalSum>;

PolyExpr constant_expr(const RadicalSum& c) {
    PolyExpr p;
    if (!c.empty()) p[{0, 0}] = c;
    return p;
}

void add_expr(PolyExpr& acc, const PolyExpr& o, bool negate) {
    for (const auto& [mono, coeff] : o) {
        RadicalSum& slot = acc[mono];
        for (const auto& [r, c] : coeff) add_into(slot, r, negate ? -c : c);
        if (slot.empty()) acc.erase(mono);
    }
}

PolyExpr mul_expr(const PolyExpr& a, const PolyExpr& b) {
    PolyExpr out;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            PolyExpr term;
            RadicalSum prod = radical_mul(ca, cb);
            if (prod.empty()) continue;
            term[{ma.first + mb.first, ma.second + mb.second}] = prod;
            add_expr(out, term, false);
        }
    }
    return out;
}

class Parser {
public:
    Parser(std::string_view text, bool allow_variables) : text_(text), allow_variables_(allow_variables) {}

    PolyExpr parse_all() {
        PolyExpr e = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool at_factor_start() {
        skip_ws();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) != 0 || c == '(' || c == 'x' || c == 'y' || c == 's';
    }

    PolyExpr expression() {
        PolyExpr acc;
        bool negate = false;
        if (accept('-')) {
            negate = true;
        } else {
            accept('+');
        }
        add_expr(acc, term(), negate);
        while (true) {
            if (accept('+')) {
                add_expr(acc, term(), false);
            } else if (accept('-')) {
                add_expr(acc, term(), true);
            } else {
                break;
            }
        }
        return acc;
    }

    PolyExpr term() {
        if (!at_factor_start()) fail("expected a number, sqrt, x, y or '('");
        PolyExpr acc = factor();
        while (true) {
            if (accept('*')) {
                acc = mul_expr(acc, factor());
            } else if (peek('/')) {
                ++pos_;
                skip_ws();
                Integer d = integer();
                if (d == 0) fail("division by zero");
                acc = mul_expr(acc, constant_expr(RadicalSum{{1, Rational(Integer(1), d)}}));
            } else if (at_factor_start()) {
                acc = mul_expr(acc, factor());
            } else {
                break;
            }
        }
        return acc;
    }

    Integer integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
        if (start == pos_) fail("expected an integer");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    int exponent() {
        std::size_t at = pos_;
        Integer e = integer();
        if (e > kMaxExponent) {
            pos_ = at;
            fail("exponent too large");
        }
        return static_cast<int>(e.get_si());
    }

    PolyExpr factor() {
        skip_ws();
        PolyExpr base;
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            base = constant_expr(RadicalSum{{1, Rational(integer())}});
        } else if (c == '(') {
            ++pos_;
            base = expression();
            expect(')');
        } else if (c == 'x' || c == 'y') {
            if (!allow_variables_) fail("variables are not allowed in a scalar");
            ++pos_;
            base[c == 'x' ? Monomial{1, 0} : Monomial{0, 1}] = RadicalSum{{1, Rational(1)}};
        } else if (text_.substr(pos_, 4) == "sqrt") {
            pos_ += 4;
            expect('(');
            bool negative = accept('-');
            skip_ws();
            std::size_t at = pos_;
            Integer n = integer();
            if (accept('/')) {
                pos_ = at;
                fail("unsupported radical: sqrt of a non-integer");
            }
            expect(')');
            if (negative) n = -n;
            if (n == 0) {
                base = PolyExpr{};
            } else {
                Integer s = square_free_part(n);
                Integer t;
                exact_sqrt(Integer(n / s), t);
                base = constant_expr(RadicalSum{{s, Rational(t)}});
            }
        } else {
            fail("unexpected '" + std::string(1, c) + "'");
        }
        if (accept('^')) {
            int e = exponent();
            PolyExpr r = constant_expr(RadicalSum{{1, Rational(1)}});
            for (int i = 0; i < e; ++i) r = mul_expr(r, base);
            base = std::move(r);
        }
        return base;
    }

    std::string_view text_;
    bool allow_variables_;
    std::size_t pos_ = 0;
};

}  // namespace

AnyForm parse_form(std::string_view text) {
    PolyExpr expr = Parser(text, true).parse_all();
    int degree = -1;
    Integer radicand = 1;
    for (const auto& [mono, coeff] : expr) {
        int deg = mono.first + mono.second;
        if (degree >= 0 && deg != degree) {
            throw ParseError(0, "form is not homogeneous (degrees " + std::to_string(degree) + " and " +
                                    std::to_string(deg) + ")");
        }
        degree = deg;
        for (const auto& [r, c] : coeff) {
            if (r == 1) continue;
            if (radicand != 1 && radicand != r) {
                throw ParseError(0, "unsupported radical: both sqrt(" + radicand.get_str() + ") and sqrt(" +
                                        r.get_str() + ") appear");
            }
            radicand = r;
        }
    }
    if (degree < 0) degree = 0;  // the zero form
    std::vector<QuadExt> coeffs(static_cast<std::size_t>(degree) + 1, QuadExt(0));
    for (const auto& [mono, coeff] : expr) {
        QuadExt value(0);
        for (const auto& [r, c] : coeff) {
            value += r == 1 ? QuadExt(c) : QuadExt(Rational(0), c, r);
        }
        coeffs[static_cast<std::size_t>(mono.second)] = value;
    }
    BinaryForm<QuadExt> form(degree, std::move(coeffs));
    if (radicand == 1) return to_rational_form(form);
    return form;
}

RadicalSum parse_radical_sum(std::string_view text) {
    PolyExpr expr = Parser(text, false).parse_all();
    if (expr.empty()) return {};
    return expr.begin()->second;
}

RadicalSum radical_sum_of(const std::vector<RadicalTerm>& terms) {
    RadicalSum out;
    for (const RadicalTerm& t : terms) {
        if (t.coeff.is_zero() || t.radical == 0) continue;
        Integer s = square_free_part(t.radical);
        Integer root;
        exact_sqrt(Integer(t.radical / s), root);
        add_into(out, s, t.coeff * Rational(root));
    }
    return out;
}

TowerScalar to_tower(const RadicalSum& s, std::int64_t m1, std::int64_t m2) {
    TowerScalar out(0);
    for (const auto& [r, c] : s) {
        if (r == 1) {
            out += TowerScalar(c);
        } else if (m1 != 0 && r == m1) {
            out += TowerScalar(QuadExt(Rational(0), c, r));
        } else if (m2 != 0 && r == m2) {
            out += TowerScalar(QuadExt(0), QuadExt(c), r);
        } else if (m1 != 0 && m2 != 0 && r == square_free_part(Integer(m1) * Integer(m2))) {
            // sqrt(r) = sqrt(m1) sqrt(m2) / t (sign flips when both are negative)
            Integer prod = Integer(m1) * Integer(m2);
            Integer t;
            exact_sqrt(Integer(prod / r), t);
            Rational k = c / Rational(t);
            if (m1 < 0 && m2 < 0) k = -k;
            out += TowerScalar(QuadExt(0), QuadExt(Rational(0), k, m1), m2);
        } else {
            throw ArithmeticError("radical sqrt(" + r.get_str() + ") is outside Q(sqrt(" + std::to_string(m1) +
                                  "), sqrt(" + std::to_string(m2) + "))");
        }
    }
    return out;
}

std::string form_to_string(const AnyForm& f) {
    return std::visit([](const auto& g) { return to_string(g); }, f);
}

int form_degree(const AnyForm& f) {
    return std::visit([](const auto& g) { return g.degree(); }, f);
}

}  // namespace waring

#include "waring/quadratic.hpp"

#include <algorithm>

namespace waring {

namespace {

struct RadicalOrder {
    bool operator()(const Integer& x, const Integer& y) const {
        if (x == 1 || y == 1) {
            return x == 1 && y != 1;
        }
        Integer ax = abs(x);
        Integer ay = abs(y);
        if (ax != ay) {
            return ax < ay;
        }
        return x > y;
    }
};

}  // namespace

std::string render_radical_terms(const std::vector<RadicalTerm>& terms) {
    std::map<Integer, Rational, RadicalOrder> collected;
    for (const RadicalTerm& t : terms) {
        Integer s = square_free_part(t.radical);
        Integer sq;
        exact_sqrt(Integer(t.radical / s), sq);
        collected[s] += t.coeff * Rational(sq);
    }
    std::string out;
    for (const auto& [radical, coeff] : collected) {
        if (coeff.is_zero()) {
            continue;
        }
        bool negative = coeff.sign() < 0;
        Rational mag = abs(coeff);
        std::string body;
        if (radical == 1) {
            body = mag.to_string();
        } else if (mag == Rational(1)) {
            body = "sqrt(" + radical.get_str() + ")";
        } else {
            body = mag.to_string() + "*sqrt(" + radical.get_str() + ")";
        }
        if (out.empty()) {
            out = negative ? "-" + body : body;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
    }
    return out.empty() ? "0" : out;
}

TowerScalar make_tower(const Rational& c00, const Rational& c10, const Rational& c01,
                       const Rational& c11, std::int64_t m1, std::int64_t m2) {
    if (m1 == m2) {
        throw ArithmeticError("tower radicands must differ");
    }
    QuadExt inner_a(c00, c10, m1);
    QuadExt inner_b(c01, c11, m1);
    return TowerScalar(inner_a, inner_b, m2);
}

}  // namespace waring

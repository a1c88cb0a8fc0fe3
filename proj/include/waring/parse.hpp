#ifndef WARING_PARSE_HPP
#define WARING_PARSE_HPP

#include "waring/binform.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace waring {

/// Malformed input; `position` is the 0-based offset of the offending
/// character.
class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t position, const std::string& what);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A form over Q, or over Q(sqrt(m)) when a radical survives.
using AnyForm = std::variant<BinaryForm<Rational>, BinaryForm<QuadExt>>;

/// Parses a homogeneous polynomial in x and y.
///
/// Accepts sums of products of integers, rationals `p/q`, `sqrt(n)`,
/// `x^k`, `y^k` and parenthesized subexpressions (optionally raised to a
/// power); `*` between factors is optional. At most one square-free radicand
/// may appear.
AnyForm parse_form(std::string_view text);

/// Sum of rational multiples of square roots, keyed by square-free radical
/// (1 for the rational part).
using RadicalSum = std::map<Integer, Rational>;

/// Parses a scalar expression such as `1/2 - 3*sqrt(2) + sqrt(6)`.
RadicalSum parse_radical_sum(std::string_view text);

/// Exact scalar as a radical sum with square-free radicals.
RadicalSum radical_sum_of(const std::vector<RadicalTerm>& terms);
template <class F>
RadicalSum radical_sum_of(const F& x) {
    return radical_sum_of(radical_terms(x));
}

/// Maps a radical sum into Q(sqrt(m1), sqrt(m2)); throws if a radical is
/// outside {1, m1, m2, m1*m2}.
TowerScalar to_tower(const RadicalSum& s, std::int64_t m1, std::int64_t m2);

std::string form_to_string(const AnyForm& f);
int form_degree(const AnyForm& f);

}  // namespace waring

#endif  // WARING_PARSE_HPP

#ifndef WARING_DECOMPOSE_HPP
#define WARING_DECOMPOSE_HPP

#include "waring/bigapprox.hpp"
#include "waring/parse.hpp"
#include "waring/rank.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace waring {

struct ExactSummand {
    TowerScalar lambda;
    TowerScalar alpha;
    TowerScalar beta;
};

struct NumericSummand {
    ComplexApprox lambda;
    ComplexApprox alpha;
    ComplexApprox beta;
};

/// f = sum lambda_j (alpha_j x + beta_j y)^d, either exactly over
/// Q(sqrt(inner), sqrt(outer)) (0 = absent) or as complex floating values.
struct Decomposition {
    int degree = 0;
    bool exact = true;
    std::int64_t inner_radicand = 0;
    std::int64_t outer_radicand = 0;
    std::vector<ExactSummand> summands;
    std::vector<NumericSummand> numeric_summands;
    /// Numeric mode: upper bound on the largest coefficient error.
    std::optional<Mpfr> residual;

    std::size_t length() const { return exact ? summands.size() : numeric_summands.size(); }
    std::string domain() const;
};

struct ExtractOptions {
    bool allow_numeric = true;
    long precision = kDefaultPrecisionBits;
};

/// Power-sum representation read off an apolar square-free form h. Exact when
/// h is rational and splits over at most one quadratic field beyond the
/// field of f; numeric otherwise (std::invalid_argument if not allowed).
template <class F>
Decomposition extract_decomposition(const BinaryForm<F>& f, const BinaryForm<F>& h,
                                    const ExtractOptions& opts = {});

struct VerifyResult {
    enum class Kind { exact_match, mismatch, numeric };
    Kind kind = Kind::mismatch;
    /// Coefficientwise expansion minus f (mismatch only).
    std::vector<std::string> diff;
    std::optional<Mpfr> residual;
    bool honest = true;
};

std::string to_string(VerifyResult::Kind k);

/// Throws std::invalid_argument when the decomposition's field does not
/// contain the coefficients of f.
template <class F>
VerifyResult verify_decomposition(const Decomposition& dec, const BinaryForm<F>& f);

/// Q(sqrt(inner), sqrt(outer)) containing every radical in `radicals`,
/// preferring `inner` as given when nonzero.
std::optional<std::pair<std::int64_t, std::int64_t>> choose_tower(const std::set<Integer>& radicals,
                                                                   std::int64_t inner);

/// Lifts an exact scalar into Q(sqrt(inner), sqrt(outer)); throws
/// ArithmeticError when it does not fit.
template <class F>
TowerScalar lift_to_tower(const F& x, std::int64_t inner, std::int64_t outer) {
    return to_tower(radical_sum_of(x), inner, outer);
}

BinaryForm<Rational> gen_flambda(int k, const Rational& lambda);

struct FlambdaIdentity {
    bool verified = false;
    bool exact = false;
    /// Coefficient of the y^(2k) correction term, 1 - lambda^2.
    Rational correction;
    std::optional<Mpfr> residual;
};

/// Checks x^(2k) + C(2k,k) l x^k y^k + y^(2k)
///   = (1 - l^2) y^(2k) + (1/k) sum_i (x + l^(1/k) zeta_k^i y)^(2k).
FlambdaIdentity flambda_identity_check(int k, const Rational& lambda, long precision = kDefaultPrecisionBits);

struct PdFamily {
    BinaryForm<Rational> form;
    Decomposition decomposition;
    bool gamma_is_square = false;
};

/// sum_i C(d,2i) gamma^i x^(d-2i) y^(2i) with its two-term representation.
PdFamily gen_pd(int d, const Rational& gamma);

}  // namespace waring

#endif  // WARING_DECOMPOSE_HPP

#ifndef WARING_RANK_HPP
#define WARING_RANK_HPP

#include "waring/apolarity.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace waring {

/// One re-checkable fact behind a rank claim.
struct RankEvidence {
    enum class Kind {
        kernel_empty,        // apolar space at r is zero
        no_square_free,      // every apolar form of degree r has a repeated root
        no_real_witness,     // no square-free real-rooted apolar form of degree r
        multiplicity_bound,  // max root multiplicity + 1
        tau_bound,           // number of real roots with multiplicity
        complex_rank_bound,  // real rank >= complex rank
        gap_bound,           // vanishing coefficient runs force non-real roots
        hyperbolic,          // all roots real: real rank is the degree
        upper_bound,         // non-hyperbolic: real rank <= d - 1
    };
    Kind kind;
    int r = 0;           // degree the record refers to (0 if none)
    int value = 0;       // bound value where applicable
    std::string method;  // "dim 0", "grid", "ideal multiple", "pencil", ...
};

std::string to_string(RankEvidence::Kind k);

enum class RankClaim { complex_rank, real_rank, real_rank_in };

std::string to_string(RankClaim c);

template <class F>
struct RankCertificate {
    RankClaim claim = RankClaim::complex_rank;
    int lo = 0;
    int hi = 0;
    std::optional<BinaryForm<F>> witness;
    /// Real roots of the witness counted by Sturm sequence (real claims).
    int witness_real_roots = 0;
    std::vector<RankEvidence> evidence;
    std::vector<std::string> notes;

    bool exact() const { return lo == hi; }
};

template <class F>
struct ComplexRankResult {
    int rank = 0;
    RankCertificate<F> certificate;
};

/// Smallest r with a square-free apolar form of degree r.
template <class F>
ComplexRankResult<F> complex_rank(const BinaryForm<F>& f);

/// 1 for d-th powers, otherwise the largest root multiplicity plus one.
template <class F>
int multiplicity_lower_bound(const BinaryForm<F>& f);

struct RealRankBudget {
    int samples = 400;
    std::uint64_t seed = 0x5eed;
};

/// Certified real rank or bracket. F must embed in the reals; throws
/// std::invalid_argument for d-th powers and non-real coefficient fields.
template <class F>
RankCertificate<F> real_rank(const BinaryForm<F>& f, const RealRankBudget& budget = {});

struct Rank3Classification {
    enum class Case { case1_cyclic, case2_generic, case3_mixed, splits_over_K, not_rank_3 };
    Case kind = Case::not_rank_3;
    /// Discriminant of the cubic apolar form after dividing by its leading
    /// coefficient.
    Rational u;
    std::string field_description;
    int rational_roots = 0;
    /// Degree below 5: other length-3 representations may exist.
    bool non_unique = false;
    BinaryForm<Rational> sylvester_form;
};

std::string to_string(Rank3Classification::Case c);

enum class SmallRankKind { rank1, rank2, rank3, other };

std::string to_string(SmallRankKind k);

template <class F>
struct SmallRankClass {
    SmallRankKind kind = SmallRankKind::other;
    int rank = 0;
    /// rank2: discriminant of the quadratic apolar form.
    std::optional<F> u;
    std::optional<Rank3Classification> rank3;
    ComplexRankResult<F> complex;
};

/// Rank-3 cases are decided over the coefficient field K of f (Q or
/// Q(sqrt(m))); they need a cubic apolar form with rational coefficients and
/// throw std::invalid_argument otherwise.
template <class F>
SmallRankClass<F> classify_small_rank(const BinaryForm<F>& f);

struct FullRankReport {
    bool complex_full = false;
    bool real_full = false;

    std::string label() const { return complex_full ? "complex_full" : real_full ? "real_full" : "neither"; }
};

template <class F>
FullRankReport full_rank_test(const BinaryForm<F>& f);

struct FlambdaLevelCheck {
    int j = 0;
    int kernel_dim = 0;
    bool shape_ok = true;
    /// Smallest Descartes gap bound over sampled members with nonzero end
    /// coefficients (-1 if none sampled).
    int min_gap = -1;
    int required_gap = 0;
};

struct FlambdaBracket {
    int lo = 0;
    int hi = 0;
    bool hyperbolic = false;
    bool structure_ok = true;
    std::vector<FlambdaLevelCheck> levels;
    std::vector<std::string> notes;
};

/// x^(2k) + C(2k,k) lambda x^k y^k + y^(2k).
BinaryForm<Rational> flambda_form(int k, const Rational& lambda);

/// Real-rank bracket for the family above, cross-checking the kernel
/// structure at r = k..2k-1.
FlambdaBracket flambda_real_bracket(int k, const Rational& lambda);

/// Recomputes every kernel record and the witness of a certificate.
template <class F>
bool recheck_certificate(const BinaryForm<F>& f, const RankCertificate<F>& cert);

}  // namespace waring

#endif  // WARING_RANK_HPP

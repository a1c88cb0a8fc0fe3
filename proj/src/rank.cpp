#include "waring/rank.hpp"

#include "waring/factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace waring {

std::string to_string(RankEvidence::Kind k) {
    switch (k) {
        case RankEvidence::Kind::kernel_empty: return "kernel_empty_at";
        case RankEvidence::Kind::no_square_free: return "no_square_free_at";
        case RankEvidence::Kind::no_real_witness: return "no_real_witness_at";
        case RankEvidence::Kind::multiplicity_bound: return "multiplicity_bound";
        case RankEvidence::Kind::tau_bound: return "tau_bound";
        case RankEvidence::Kind::complex_rank_bound: return "complex_rank_bound";
        case RankEvidence::Kind::gap_bound: return "gap_bound";
        case RankEvidence::Kind::hyperbolic: return "hyperbolic";
        case RankEvidence::Kind::upper_bound: return "upper_bound";
    }
    return "unknown";
}

std::string to_string(RankClaim c) {
    switch (c) {
        case RankClaim::complex_rank: return "complex_rank";
        case RankClaim::real_rank: return "real_rank";
        case RankClaim::real_rank_in: return "real_rank_in";
    }
    return "unknown";
}

std::string to_string(Rank3Classification::Case c) {
    switch (c) {
        case Rank3Classification::Case::case1_cyclic: return "case1_cyclic";
        case Rank3Classification::Case::case2_generic: return "case2_generic";
        case Rank3Classification::Case::case3_mixed: return "case3_mixed";
        case Rank3Classification::Case::splits_over_K: return "splits_over_K";
        case Rank3Classification::Case::not_rank_3: return "not_rank_3";
    }
    return "unknown";
}

std::string to_string(SmallRankKind k) {
    switch (k) {
        case SmallRankKind::rank1: return "rank1";
        case SmallRankKind::rank2: return "rank2";
        case SmallRankKind::rank3: return "rank3";
        case SmallRankKind::other: return "other";
    }
    return "unknown";
}

namespace {

using Kind = RankEvidence::Kind;

template <class F>
BinaryForm<F> combine(const std::vector<BinaryForm<F>>& basis, const std::vector<long>& s) {
    BinaryForm<F> h = BinaryForm<F>::zero(basis.front().degree());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (s[i] != 0) h += basis[i] * F(Rational(s[i]));
    }
    return h;
}

// Advances an odometer over {1..top}^n; false after the last point.
bool next_point(std::vector<long>& s, long top) {
    for (std::size_t i = s.size(); i-- > 0;) {
        if (s[i] < top) {
            ++s[i];
            return true;
        }
        s[i] = 1;
    }
    return false;
}

template <class F>
bool real_rooted_square_free(const BinaryForm<F>& h) {
    return !h.is_zero() && is_square_free(h) && real_root_count(h, false) == h.degree();
}

template <class F>
bool embeds_in_reals(const BinaryForm<F>& f) {
    for (const F& c : f.coeffs()) {
        if (radicand_of(c) < 0) return false;
    }
    return true;
}

template <class F>
std::int64_t field_radicand(const BinaryForm<F>& f) {
    for (const F& c : f.coeffs()) {
        if (radicand_of(c) != 0) return radicand_of(c);
    }
    return 0;
}

// Kernel at r equals g1 times all forms of degree r - e1.
template <class F>
bool is_ideal_multiple(const KernelBasis<F>& kb, const BinaryForm<F>& g1) {
    if (kb.dim() != kb.r - g1.degree() + 1) return false;
    return std::all_of(kb.basis.begin(), kb.basis.end(), [&](const BinaryForm<F>& b) { return divides(g1, b); });
}

template <class F>
std::optional<BinaryForm<F>> grid_square_free(const KernelBasis<F>& kb) {
    if (kb.dim() == 1) {
        if (is_square_free(kb.basis.front())) return kb.basis.front();
        return std::nullopt;
    }
    // The discriminant of sum s_i b_i has degree <= 2r-2 in each s_i, so
    // 2r-1 values per coordinate decide whether it vanishes identically.
    const long top = 2L * kb.r - 1;
    std::vector<long> s(static_cast<std::size_t>(kb.dim()), 1);
    do {
        BinaryForm<F> h = combine(kb.basis, s);
        if (!h.is_zero() && is_square_free(h)) return canonical_projective(h);
    } while (next_point(s, top));
    return std::nullopt;
}

enum class RealSearch { found, none, unknown };

template <class F>
struct RealSearchResult {
    RealSearch outcome = RealSearch::unknown;
    std::optional<BinaryForm<F>> witness;
    std::string method;
    int gap = 0;
    int dim = 0;
};

template <class F>
RealSearchResult<F> search_real_witness(const BinaryForm<F>& f, int r, int samples, std::mt19937_64& rng) {
    KernelBasis<F> kb = apolar_space(f, r);
    RealSearchResult<F> res;
    res.dim = kb.dim();
    if (kb.dim() == 0) {
        res.outcome = RealSearch::none;
        res.method = "dim 0";
        return res;
    }
    if (kb.dim() == 1) {
        const BinaryForm<F>& h = kb.basis.front();
        if (real_rooted_square_free(h)) {
            res.outcome = RealSearch::found;
            res.witness = h;
            return res;
        }
        res.outcome = RealSearch::none;
        res.gap = descartes_gap_bound(h);
        res.method = !is_square_free(h) ? "single, repeated root" : res.gap > 0 ? "single, coefficient gap" : "single, non-real roots";
        return res;
    }
    if (kb.dim() == 2) {
        // Pencil s*b0 + b1 plus the member b0 at s = infinity. Real-root
        // counts are constant between consecutive real zeros of D(s).
        const BinaryForm<F>& b0 = kb.basis[0];
        const BinaryForm<F>& b1 = kb.basis[1];
        res.method = "pencil";
        if (real_rooted_square_free(b0)) {
            res.outcome = RealSearch::found;
            res.witness = b0;
            return res;
        }
        std::vector<Rational> xs;
        std::vector<F> ys;
        for (int i = 0; i <= 2 * r - 2; ++i) {
            xs.emplace_back(i);
            ys.push_back(discriminant(b0 * F(Rational(i)) + b1));
        }
        Poly<F> disc = poly::interpolate(xs, ys);
        poly::trim(disc);
        if (!disc.empty()) {
            Poly<F> sf = disc;
            if (poly::degree(disc) > 0) sf = poly::exact_div(disc, poly::gcd(disc, poly::derivative(disc)));
            std::vector<Rational> pts = poly::degree(sf) > 0 ? poly::sample_points_between_roots(sf) : std::vector<Rational>{Rational(0)};
            for (const Rational& s : pts) {
                BinaryForm<F> h = b0 * F(s) + b1;
                if (real_rooted_square_free(h)) {
                    res.outcome = RealSearch::found;
                    res.witness = canonical_projective(h);
                    return res;
                }
            }
        }
        res.outcome = RealSearch::none;
        return res;
    }
    std::uniform_int_distribution<long> coeff(-12, 12);
    std::vector<long> s(static_cast<std::size_t>(kb.dim()));
    for (int i = 0; i < samples; ++i) {
        for (long& v : s) v = coeff(rng);
        BinaryForm<F> h = combine(kb.basis, s);
        if (real_rooted_square_free(h)) {
            res.outcome = RealSearch::found;
            res.witness = canonical_projective(h);
            return res;
        }
    }
    res.outcome = RealSearch::unknown;
    res.method = "sampled " + std::to_string(samples);
    return res;
}

}  // namespace

template <class F>
ComplexRankResult<F> complex_rank(const BinaryForm<F>& f) {
    if (f.is_zero()) throw std::invalid_argument("complex rank of the zero form");
    ComplexRankResult<F> out;
    RankCertificate<F>& cert = out.certificate;
    cert.claim = RankClaim::complex_rank;
    const int d = f.degree();
    if (d == 0) {
        out.rank = cert.lo = cert.hi = 1;
        cert.notes.push_back("constant form");
        return out;
    }
    std::optional<BinaryForm<F>> g1;
    bool seen_nonzero = false;
    for (int r = 1; r <= d; ++r) {
        KernelBasis<F> kb = apolar_space(f, r);
        if (kb.dim() == 0) {
            cert.evidence.push_back({Kind::kernel_empty, r, 0, "dim 0"});
            continue;
        }
        if (!seen_nonzero) {
            seen_nonzero = true;
            if (kb.dim() == 1) g1 = kb.basis.front();
        }
        if (g1 && !is_square_free(*g1) && is_ideal_multiple(kb, *g1)) {
            cert.evidence.push_back({Kind::no_square_free, r, kb.dim(), "ideal multiple"});
            continue;
        }
        if (auto h = grid_square_free(kb)) {
            out.rank = cert.lo = cert.hi = r;
            cert.witness = *h;
            return out;
        }
        cert.evidence.push_back({Kind::no_square_free, r, kb.dim(), kb.dim() == 1 ? "single" : "grid"});
    }
    throw std::logic_error("no square-free apolar form up to the degree");
}

template <class F>
int multiplicity_lower_bound(const BinaryForm<F>& f) {
    if (f.is_zero() || is_power_of_linear(f)) return 1;
    int m = 0;
    for (const auto& [part, mult] : square_free_decompose(f).parts) m = std::max(m, mult);
    return m + 1;
}

template <class F>
RankCertificate<F> real_rank(const BinaryForm<F>& f, const RealRankBudget& budget) {
    if (f.is_zero()) throw std::invalid_argument("real rank of the zero form");
    if (!embeds_in_reals(f)) throw std::invalid_argument("real rank needs real coefficients");
    if (is_power_of_linear(f)) throw std::invalid_argument("real rank of a d-th power is not bracketed here");
    const int d = f.degree();
    RankCertificate<F> cert;
    const int tau = real_root_count(f, true);
    const int mult = multiplicity_lower_bound(f);
    ComplexRankResult<F> cr = complex_rank(f);
    cert.evidence.push_back({Kind::tau_bound, 0, tau, "sturm"});
    cert.evidence.push_back({Kind::multiplicity_bound, 0, mult, "square-free decomposition"});
    cert.evidence.push_back({Kind::complex_rank_bound, cr.rank, cr.rank, "sylvester"});
    for (const RankEvidence& e : cr.certificate.evidence) cert.evidence.push_back(e);

    const bool hyper = is_hyperbolic(f);
    const int lb = std::max({tau, mult, cr.rank});
    const int ub = (hyper || d <= 2) ? d : d - 1;
    cert.evidence.push_back({hyper ? Kind::hyperbolic : Kind::upper_bound, 0, ub, hyper ? "all roots real" : "not hyperbolic"});
    if (lb > ub) throw std::logic_error("real-rank lower bound exceeds upper bound");

    int lo = lb;
    int hi = ub;
    bool undecided = false;
    std::mt19937_64 rng(budget.seed);
    for (int r = lb; r <= ub; ++r) {
        if (lb == ub && apolar_space(f, r).dim() > 2) break;  // sandwich already exact
        RealSearchResult<F> sr = search_real_witness(f, r, budget.samples, rng);
        if (sr.outcome == RealSearch::found) {
            hi = r;
            cert.witness = sr.witness;
            cert.witness_real_roots = real_root_count(*sr.witness, false);
            break;
        }
        if (sr.outcome == RealSearch::none) {
            if (sr.gap > 0) cert.evidence.push_back({Kind::gap_bound, r, sr.gap, "descartes"});
            cert.evidence.push_back({Kind::no_real_witness, r, sr.dim, sr.method});
            if (!undecided) lo = r + 1;
        } else {
            undecided = true;
            cert.notes.push_back("bracket only: kernel dim " + std::to_string(sr.dim) + " at r=" + std::to_string(r));
        }
    }
    if (lo > hi) throw std::logic_error("real-rank search excluded every admissible length");
    cert.lo = lo;
    cert.hi = hi;
    cert.claim = lo == hi ? RankClaim::real_rank : RankClaim::real_rank_in;
    if (lo == hi && !cert.witness) cert.notes.push_back("exact by matching bounds");
    return cert;
}

namespace {

std::string field_text(const std::vector<std::string>& gens) {
    if (gens.empty()) return "Q";
    std::string s = "Q(";
    for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + gens[i];
    return s + ")";
}

Integer square_free_of(const Rational& q) { return square_free_part(Integer(q.numerator() * q.denominator())); }

Rank3Classification classify_cubic(const BinaryForm<Rational>& h, std::int64_t m1, int d) {
    Rank3Classification c;
    c.sylvester_form = h;
    c.non_unique = d < 5;
    FactorizationShape shape = rational_and_quadratic_factor(h);
    int roots_in_k = static_cast<int>(shape.linear_factors.size());
    for (const auto& [q, mult] : shape.quadratic_factors) {
        Rational disc = q.coeff(1) * q.coeff(1) - Rational(4) * q.coeff(0) * q.coeff(2);
        if (m1 != 0 && square_free_of(disc) == m1) roots_in_k += 2;
    }
    const Rational& lead = !h.coeff(0).is_zero() ? h.coeff(0) : h.coeff(3);
    c.u = discriminant(h) / pow(lead, 4);
    c.rational_roots = roots_in_k;
    std::vector<std::string> gens;
    if (m1 != 0) gens.push_back("sqrt(" + std::to_string(m1) + ")");
    const Integer usf = square_free_of(c.u);
    const bool u_square_in_k = usf == 1 || (m1 != 0 && usf == m1);
    if (roots_in_k == 3) {
        c.kind = Rank3Classification::Case::splits_over_K;
    } else if (roots_in_k == 1) {
        c.kind = Rank3Classification::Case::case3_mixed;
        gens.push_back("sqrt(" + usf.get_str() + ")");
    } else if (roots_in_k == 0) {
        gens.push_back("gamma");
        if (u_square_in_k) {
            c.kind = Rank3Classification::Case::case1_cyclic;
        } else {
            c.kind = Rank3Classification::Case::case2_generic;
            gens.push_back("sqrt(" + usf.get_str() + ")");
        }
    } else {
        throw std::logic_error("cubic with exactly two roots in the coefficient field");
    }
    c.field_description = field_text(gens);
    return c;
}

}  // namespace

template <class F>
SmallRankClass<F> classify_small_rank(const BinaryForm<F>& f) {
    SmallRankClass<F> out;
    out.complex = complex_rank(f);
    out.rank = out.complex.rank;
    if (out.rank == 1) {
        out.kind = SmallRankKind::rank1;
    } else if (out.rank == 2) {
        out.kind = SmallRankKind::rank2;
        out.u = discriminant(*out.complex.certificate.witness);
    } else if (out.rank == 3) {
        const BinaryForm<F>& h = *out.complex.certificate.witness;
        if (!has_rational_coefficients(h)) {
            throw std::invalid_argument("rank-3 classification needs a rational cubic apolar form");
        }
        out.kind = SmallRankKind::rank3;
        out.rank3 = classify_cubic(to_rational_form(h), field_radicand(f), f.degree());
    } else {
        out.kind = SmallRankKind::other;
    }
    return out;
}

template <class F>
FullRankReport full_rank_test(const BinaryForm<F>& f) {
    const int d = f.degree();
    if (d < 3) throw std::invalid_argument("full rank test needs degree >= 3");
    FullRankReport rep;
    const auto parts = square_free_decompose(f).parts;
    rep.complex_full = parts.size() == 2 && parts[0].first.degree() == 1 && parts[0].second == 1 &&
                       parts[1].first.degree() == 1 && parts[1].second == d - 1;
    rep.real_full = is_hyperbolic(f) && !is_power_of_linear(f);
    return rep;
}

BinaryForm<Rational> flambda_form(int k, const Rational& lambda) {
    if (k < 1) throw std::invalid_argument("f_lambda needs k >= 1");
    std::vector<Rational> c(static_cast<std::size_t>(2 * k + 1), Rational(0));
    c[0] = Rational(1);
    c[static_cast<std::size_t>(k)] += Rational(binomial(2 * k, k)) * lambda;
    c[static_cast<std::size_t>(2 * k)] += Rational(1);
    return BinaryForm<Rational>(2 * k, std::move(c));
}

FlambdaBracket flambda_real_bracket(int k, const Rational& lambda) {
    if (k < 2) throw std::invalid_argument("f_lambda bracket needs k >= 2");
    if (lambda.is_zero()) throw std::invalid_argument("lambda = 0 gives x^(2k) + y^(2k), outside the family");
    const BinaryForm<Rational> f = flambda_form(k, lambda);
    FlambdaBracket out;
    out.lo = 2 * k - 2;
    out.hi = 2 * k - 1;
    std::mt19937_64 rng(0xf1a3bdaULL + static_cast<std::uint64_t>(k));
    std::uniform_int_distribution<long> coeff(-9, 9);
    for (int j = 0; j < k; ++j) {
        const int r = k + j;
        KernelBasis<Rational> kb = apolar_space(f, r);
        FlambdaLevelCheck lvl;
        lvl.j = j;
        lvl.kernel_dim = kb.dim();
        lvl.required_gap = 2 * ((k - j - 1) / 2);
        for (const BinaryForm<Rational>& h : kb.basis) {
            bool ok = h.coeff(0) == -lambda * h.coeff(k) && h.coeff(k + j) == -lambda * h.coeff(j);
            for (int i = j + 1; i <= k - 1; ++i) ok = ok && h.coeff(i).is_zero();
            lvl.shape_ok = lvl.shape_ok && ok;
        }
        if (kb.dim() > 0) {
            std::vector<long> s(static_cast<std::size_t>(kb.dim()));
            for (int sample = 0; sample < 16; ++sample) {
                for (long& v : s) v = coeff(rng);
                BinaryForm<Rational> h = combine(kb.basis, s);
                if (h.is_zero() || h.coeff(0).is_zero() || h.coeff(r).is_zero()) continue;
                int gap = descartes_gap_bound(h);
                lvl.min_gap = lvl.min_gap < 0 ? gap : std::min(lvl.min_gap, gap);
            }
        }
        if (!lvl.shape_ok || (lvl.min_gap >= 0 && lvl.min_gap < lvl.required_gap)) out.structure_ok = false;
        out.levels.push_back(lvl);
    }
    if (is_hyperbolic(f)) {
        out.hyperbolic = true;
        out.lo = out.hi = 2 * k;
        out.notes.push_back("f_lambda is hyperbolic here, so its real rank is the degree " + std::to_string(2 * k));
    }
    return out;
}

template <class F>
bool recheck_certificate(const BinaryForm<F>& f, const RankCertificate<F>& cert) {
    if (cert.witness) {
        const BinaryForm<F>& h = *cert.witness;
        if (!apply_diffop(h, f).is_zero() || !is_square_free(h)) return false;
        if (h.degree() != cert.hi) return false;
        if (cert.claim != RankClaim::complex_rank && real_root_count(h, false) != h.degree()) return false;
    }
    std::optional<BinaryForm<F>> g1;
    for (const RankEvidence& e : cert.evidence) {
        switch (e.kind) {
            case Kind::kernel_empty:
                if (apolar_space(f, e.r).dim() != 0) return false;
                break;
            case Kind::no_square_free: {
                KernelBasis<F> kb = apolar_space(f, e.r);
                if (e.method == "ideal multiple") {
                    int e1 = 1;
                    while (apolar_space(f, e1).dim() == 0) ++e1;
                    KernelBasis<F> low = apolar_space(f, e1);
                    if (low.dim() != 1 || is_square_free(low.basis.front()) || !is_ideal_multiple(kb, low.basis.front())) return false;
                } else if (grid_square_free(kb)) {
                    return false;
                }
                break;
            }
            case Kind::no_real_witness: {
                std::mt19937_64 rng(0);
                if (search_real_witness(f, e.r, 0, rng).outcome != RealSearch::none) return false;
                break;
            }
            case Kind::tau_bound:
                if (real_root_count(f, true) != e.value) return false;
                break;
            case Kind::multiplicity_bound:
                if (multiplicity_lower_bound(f) != e.value) return false;
                break;
            case Kind::hyperbolic:
                if (!is_hyperbolic(f)) return false;
                break;
            case Kind::upper_bound:
                if (is_hyperbolic(f) && f.degree() > 2) return false;
                break;
            case Kind::complex_rank_bound:
            case Kind::gap_bound:
                break;
        }
    }
    return true;
}

#define WARING_INSTANTIATE_RANK(F)                                                         \
    template ComplexRankResult<F> complex_rank(const BinaryForm<F>&);                      \
    template int multiplicity_lower_bound(const BinaryForm<F>&);                           \
    template RankCertificate<F> real_rank(const BinaryForm<F>&, const RealRankBudget&);    \
    template SmallRankClass<F> classify_small_rank(const BinaryForm<F>&);                  \
    template FullRankReport full_rank_test(const BinaryForm<F>&);                          \
    template bool recheck_certificate(const BinaryForm<F>&, const RankCertificate<F>&);

WARING_INSTANTIATE_RANK(Rational)
WARING_INSTANTIATE_RANK(QuadExt)

}  // namespace waring

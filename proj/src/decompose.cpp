#include "waring/decompose.hpp"

#include "waring/factor.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace waring {

std::string Decomposition::domain() const {
    if (!exact) return "C (numeric)";
    std::vector<std::string> gens;
    if (inner_radicand != 0) gens.push_back("sqrt(" + std::to_string(inner_radicand) + ")");
    if (outer_radicand != 0) gens.push_back("sqrt(" + std::to_string(outer_radicand) + ")");
    if (gens.empty()) return "Q";
    std::string s = "Q(" + gens[0];
    if (gens.size() > 1) s += ", " + gens[1];
    return s + ")";
}

std::string to_string(VerifyResult::Kind k) {
    switch (k) {
        case VerifyResult::Kind::exact_match: return "exact_match";
        case VerifyResult::Kind::mismatch: return "mismatch";
        case VerifyResult::Kind::numeric: return "numeric";
    }
    return "unknown";
}

std::optional<std::pair<std::int64_t, std::int64_t>> choose_tower(const std::set<Integer>& radicals,
                                                                   std::int64_t inner) {
    std::vector<Integer> rs;
    for (const Integer& r : radicals) {
        if (r != 1 && r != 0) rs.push_back(r);
    }
    std::vector<Integer> firsts;
    if (inner != 0) {
        firsts.emplace_back(static_cast<long>(inner));
    } else {
        firsts = rs;
        if (firsts.empty()) return std::make_pair(std::int64_t{0}, std::int64_t{0});
    }
    for (const Integer& a : firsts) {
        std::vector<Integer> seconds{Integer(0)};
        for (const Integer& r : rs) {
            seconds.push_back(r);
            seconds.push_back(square_free_part(Integer(a * r)));
        }
        for (const Integer& b : seconds) {
            if (b == a || b == 1) continue;
            Integer ab = b == 0 ? Integer(0) : square_free_part(Integer(a * b));
            bool fits = std::all_of(rs.begin(), rs.end(), [&](const Integer& r) { return r == a || (b != 0 && (r == b || r == ab)); });
            if (fits) return std::make_pair(to_int64(a), b == 0 ? std::int64_t{0} : to_int64(b));
        }
    }
    return std::nullopt;
}

namespace {

template <class F>
std::int64_t field_radicand_of(const BinaryForm<F>& f) {
    for (const F& c : f.coeffs()) {
        if (radicand_of(c) != 0) return radicand_of(c);
    }
    return 0;
}

template <class T>
T ipow(const T& x, int e) {
    T r(1);
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

ComplexApprox cpow(const ComplexApprox& x, int e, mpfr_prec_t prec) {
    ComplexApprox r(Rational(1), prec);
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

std::pair<TowerScalar, TowerScalar> normalize_direction(const TowerScalar& a, const TowerScalar& b) {
    if (!a.is_zero()) return {TowerScalar(1), b / a};
    return {TowerScalar(0), TowerScalar(1)};
}

// Solves sum_k lambda_k alpha_k^(d-i) beta_k^i = a_i over all rows i and
// checks every row.
std::vector<TowerScalar> solve_weights(const std::vector<std::pair<TowerScalar, TowerScalar>>& dirs,
                                       const std::vector<TowerScalar>& a) {
    const std::size_t rows = a.size();
    const std::size_t n = dirs.size();
    const int d = static_cast<int>(rows) - 1;
    std::vector<std::vector<TowerScalar>> m(rows, std::vector<TowerScalar>(n + 1, TowerScalar(0)));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            m[i][k] = ipow(dirs[k].first, d - static_cast<int>(i)) * ipow(dirs[k].second, static_cast<int>(i));
        }
        m[i][n] = a[i];
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = row;
        while (sel < rows && m[sel][col].is_zero()) ++sel;
        if (sel == rows) throw std::logic_error("power-moment system is singular");
        std::swap(m[row], m[sel]);
        TowerScalar inv = TowerScalar(1) / m[row][col];
        for (std::size_t j = col; j <= n; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            TowerScalar factor = m[i][col];
            for (std::size_t j = col; j <= n; ++j) m[i][j] -= factor * m[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < rows; ++i) {
        if (!m[i][n].is_zero()) throw std::logic_error("power-moment system is inconsistent");
    }
    std::vector<TowerScalar> lambda(n, TowerScalar(0));
    for (std::size_t i = 0; i < n; ++i) lambda[pivot_col[i]] = m[i][n];
    return lambda;
}

template <class F>
std::optional<Decomposition> extract_exact(const BinaryForm<F>& f, const BinaryForm<F>& h) {
    if (!has_rational_coefficients(h)) return std::nullopt;
    FactorizationShape shape = rational_and_quadratic_factor(to_rational_form(h));
    if (shape.unfactored_remainder.degree() > 0) return std::nullopt;
    std::int64_t inner = field_radicand_of(f);
    std::int64_t outer = 0;
    std::vector<QuadraticSplit> splits;
    for (const auto& [q, mult] : shape.quadratic_factors) {
        QuadraticSplit sp = split_quadratic(q);
        std::int64_t s = to_int64(sp.radicand);
        if (s != inner) {
            if (inner == 0) {
                inner = s;
            } else if (outer == 0 || outer == s) {
                outer = s;
            } else {
                return std::nullopt;
            }
        }
        splits.push_back(sp);
    }
    std::vector<std::pair<TowerScalar, TowerScalar>> dirs;
    for (const auto& [lin, mult] : shape.linear_factors) {
        // c0 x + c1 y vanishes at (c1 : -c0)
        dirs.push_back(normalize_direction(TowerScalar(lin.coeff(1)), TowerScalar(-lin.coeff(0))));
    }
    for (const QuadraticSplit& sp : splits) {
        dirs.push_back(normalize_direction(lift_to_tower(sp.alpha.first, inner, outer),
                                           lift_to_tower(sp.beta.first, inner, outer)));
        dirs.push_back(normalize_direction(lift_to_tower(sp.alpha.second, inner, outer),
                                           lift_to_tower(sp.beta.second, inner, outer)));
    }
    const int d = f.degree();
    std::vector<TowerScalar> a;
    for (int i = 0; i <= d; ++i) {
        a.push_back(lift_to_tower(f.coeff(i), inner, outer) / TowerScalar(Rational(binomial(d, i))));
    }
    std::vector<TowerScalar> lambda = solve_weights(dirs, a);
    Decomposition dec;
    dec.degree = d;
    dec.exact = true;
    dec.inner_radicand = inner;
    dec.outer_radicand = outer;
    for (std::size_t k = 0; k < dirs.size(); ++k) {
        if (lambda[k].is_zero()) continue;
        dec.summands.push_back({lambda[k], dirs[k].first, dirs[k].second});
    }
    return dec;
}

bool mpfr_less(const Mpfr& a, const Mpfr& b) { return mpfr_cmp(a.get(), b.get()) < 0; }

// Durand-Kerner on a monic polynomial given by ascending coefficients.
std::vector<ComplexApprox> polynomial_roots(std::vector<ComplexApprox> c, mpfr_prec_t prec) {
    const std::size_t n = c.size() - 1;
    ComplexApprox lead = c.back();
    for (ComplexApprox& x : c) {
        x /= lead;
        x.clear_radius();
    }
    auto eval = [&](const ComplexApprox& z) {
        ComplexApprox acc = c[n];
        for (std::size_t i = n; i-- > 0;) {
            acc = acc * z + c[i];
            acc.clear_radius();
        }
        return acc;
    };
    std::vector<ComplexApprox> z;
    ComplexApprox seed(BigApprox(Rational(2, 5), prec), BigApprox(Rational(9, 10), prec));
    ComplexApprox cur(Rational(1), prec);
    for (std::size_t k = 0; k < n; ++k) {
        z.push_back(cur);
        cur *= seed;
        cur.clear_radius();
    }
    Mpfr tol(prec);
    mpfr_set_ui_2exp(tol.get(), 1, -(prec - 16), MPFR_RNDN);
    for (int iter = 0; iter < 5000; ++iter) {
        Mpfr worst(prec);
        mpfr_set_zero(worst.get(), 1);
        for (std::size_t k = 0; k < n; ++k) {
            ComplexApprox den(Rational(1), prec);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                den *= z[k] - z[j];
                den.clear_radius();
            }
            ComplexApprox step = eval(z[k]) / den;
            step.clear_radius();
            z[k] -= step;
            z[k].clear_radius();
            Mpfr s = step.abs_mid();
            if (mpfr_less(worst, s)) worst = s;
        }
        if (mpfr_less(worst, tol)) break;
    }
    return z;
}

std::vector<ComplexApprox> solve_complex(std::vector<std::vector<ComplexApprox>> m, std::size_t n) {
    const std::size_t rows = m.size();
    std::vector<std::size_t> pivot_rows;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = col;
        Mpfr best_abs = m[col][col].abs_mid();
        for (std::size_t i = col + 1; i < rows; ++i) {
            Mpfr v = m[i][col].abs_mid();
            if (mpfr_less(best_abs, v)) {
                best = i;
                best_abs = v;
            }
        }
        if (mpfr_zero_p(best_abs.get())) throw std::logic_error("numeric power-moment system is singular");
        std::swap(m[col], m[best]);
        for (std::size_t i = col + 1; i < rows; ++i) {
            ComplexApprox factor = m[i][col] / m[col][col];
            for (std::size_t j = col; j <= n; ++j) {
                m[i][j] -= factor * m[col][j];
                m[i][j].clear_radius();
            }
        }
    }
    std::vector<ComplexApprox> x(n, ComplexApprox(m[0][0].precision()));
    for (std::size_t i = n; i-- > 0;) {
        ComplexApprox acc = m[i][n];
        for (std::size_t j = i + 1; j < n; ++j) acc -= m[i][j] * x[j];
        x[i] = acc / m[i][i];
        x[i].clear_radius();
    }
    return x;
}

template <class F>
Mpfr numeric_residual(const std::vector<NumericSummand>& terms, const BinaryForm<F>& f, mpfr_prec_t prec) {
    const int d = f.degree();
    Mpfr worst(prec);
    mpfr_set_zero(worst.get(), 1);
    for (int i = 0; i <= d; ++i) {
        ComplexApprox acc(prec);
        for (const NumericSummand& t : terms) {
            acc += t.lambda * cpow(t.alpha, d - i, prec) * cpow(t.beta, i, prec);
        }
        acc *= ComplexApprox(Rational(binomial(d, i)), prec);
        acc -= embed(f.coeff(i), prec);
        Mpfr e = acc.abs_upper();
        if (mpfr_less(worst, e)) worst = e;
    }
    return worst;
}

template <class F>
Decomposition extract_numeric(const BinaryForm<F>& f, const BinaryForm<F>& h, mpfr_prec_t prec) {
    const int r = h.degree();
    const mpfr_prec_t work = prec + 32;
    int top = r;
    while (top > 0 && h.coeff(top).is_zero()) --top;
    std::vector<std::pair<ComplexApprox, ComplexApprox>> dirs;
    if (top > 0) {
        std::vector<ComplexApprox> c;
        for (int t = 0; t <= top; ++t) {
            ComplexApprox v = embed(h.coeff(t), work);
            v.clear_radius();
            c.push_back(v);
        }
        for (ComplexApprox& z : polynomial_roots(c, work)) dirs.emplace_back(ComplexApprox(Rational(1), work), z);
    }
    if (top < r) dirs.emplace_back(ComplexApprox(work), ComplexApprox(Rational(1), work));
    const int d = f.degree();
    const std::size_t n = dirs.size();
    std::vector<std::vector<ComplexApprox>> m;
    for (int i = 0; i <= d; ++i) {
        std::vector<ComplexApprox> row;
        for (const auto& [al, be] : dirs) {
            ComplexApprox v = cpow(al, d - i, work) * cpow(be, i, work);
            v.clear_radius();
            row.push_back(v);
        }
        ComplexApprox rhs = embed(f.coeff(i), work) / ComplexApprox(Rational(binomial(d, i)), work);
        rhs.clear_radius();
        row.push_back(rhs);
        m.push_back(std::move(row));
    }
    std::vector<ComplexApprox> lambda = solve_complex(std::move(m), n);
    Decomposition dec;
    dec.degree = d;
    dec.exact = false;
    for (std::size_t k = 0; k < n; ++k) dec.numeric_summands.push_back({lambda[k], dirs[k].first, dirs[k].second});
    dec.residual = numeric_residual(dec.numeric_summands, f, work);
    return dec;
}

}  // namespace

template <class F>
Decomposition extract_decomposition(const BinaryForm<F>& f, const BinaryForm<F>& h, const ExtractOptions& opts) {
    if (h.degree() > f.degree() || !apply_diffop(h, f).is_zero()) {
        throw std::invalid_argument("h is not apolar to f");
    }
    if (!is_square_free(h)) throw std::invalid_argument("h is not square-free");
    if (auto dec = extract_exact(f, h)) return *dec;
    if (!opts.allow_numeric) {
        throw std::invalid_argument("h does not split over a quadratic tower; numeric mode required");
    }
    return extract_numeric(f, h, opts.precision);
}

template <class F>
VerifyResult verify_decomposition(const Decomposition& dec, const BinaryForm<F>& f) {
    const int d = f.degree();
    if (dec.degree != d) throw std::invalid_argument("decomposition degree differs from the form degree");
    VerifyResult out;
    if (dec.exact) {
        std::vector<TowerScalar> target;
        try {
            for (const F& c : f.coeffs()) target.push_back(lift_to_tower(c, dec.inner_radicand, dec.outer_radicand));
        } catch (const ArithmeticError&) {
            throw std::invalid_argument("the decomposition's field " + dec.domain() + " does not contain f");
        }
        BinaryForm<TowerScalar> sum = BinaryForm<TowerScalar>::zero(d);
        for (const ExactSummand& s : dec.summands) {
            sum += power(BinaryForm<TowerScalar>::linear(s.alpha, s.beta), d) * s.lambda;
        }
        bool match = true;
        for (int i = 0; i <= d; ++i) {
            TowerScalar diff = sum.coeff(i) - target[static_cast<std::size_t>(i)];
            out.diff.push_back(to_string(diff));
            match = match && diff.is_zero();
        }
        out.kind = match ? VerifyResult::Kind::exact_match : VerifyResult::Kind::mismatch;
        if (match) out.diff.clear();
        for (std::size_t i = 0; i < dec.summands.size(); ++i) {
            const ExactSummand& a = dec.summands[i];
            if (a.lambda.is_zero()) out.honest = false;
            for (std::size_t j = i + 1; j < dec.summands.size(); ++j) {
                const ExactSummand& b = dec.summands[j];
                if ((a.alpha * b.beta - b.alpha * a.beta).is_zero()) out.honest = false;
            }
        }
        return out;
    }
    mpfr_prec_t prec = dec.numeric_summands.empty() ? kDefaultPrecisionBits : dec.numeric_summands.front().lambda.precision();
    out.kind = VerifyResult::Kind::numeric;
    out.residual = numeric_residual(dec.numeric_summands, f, prec);
    for (std::size_t i = 0; i < dec.numeric_summands.size(); ++i) {
        const NumericSummand& a = dec.numeric_summands[i];
        if (mpfr_zero_p(a.lambda.abs_mid().get())) out.honest = false;
        for (std::size_t j = i + 1; j < dec.numeric_summands.size(); ++j) {
            const NumericSummand& b = dec.numeric_summands[j];
            if (mpfr_zero_p((a.alpha * b.beta - b.alpha * a.beta).abs_mid().get())) out.honest = false;
        }
    }
    return out;
}

BinaryForm<Rational> gen_flambda(int k, const Rational& lambda) { return flambda_form(k, lambda); }

namespace {

// cos and sin of pi * num / den as balls; the radius covers the rounding of
// pi and of the library result.
ComplexApprox unit_root(long num, long den, mpfr_prec_t prec) {
    Mpfr angle(prec + 16);
    mpfr_const_pi(angle.get(), MPFR_RNDN);
    mpfr_mul_si(angle.get(), angle.get(), num, MPFR_RNDN);
    mpfr_div_si(angle.get(), angle.get(), den, MPFR_RNDN);
    Mpfr s(prec);
    Mpfr c(prec);
    mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
    Mpfr slack(prec);
    mpfr_set_ui_2exp(slack.get(), static_cast<unsigned long>(std::abs(num) + 8), -prec, MPFR_RNDU);
    BigApprox re = BigApprox::from_value(c, true);
    BigApprox im = BigApprox::from_value(s, true);
    re.widen(slack);
    im.widen(slack);
    return {re, im};
}

}  // namespace

FlambdaIdentity flambda_identity_check(int k, const Rational& lambda, long precision) {
    if (k < 2) throw std::invalid_argument("identity check needs k >= 2");
    if (lambda.is_zero()) throw std::invalid_argument("identity check needs lambda != 0");
    const BinaryForm<Rational> f = gen_flambda(k, lambda);
    const int d = 2 * k;
    FlambdaIdentity out;
    out.correction = Rational(1) - lambda * lambda;
    Rational mu;
    if (exact_root(lambda, static_cast<unsigned>(k), mu)) {
        // Summing zeta^(i j) over i gives k when k | j and 0 otherwise, so
        // only j = 0, k, 2k survive the average over i.
        std::vector<Rational> rhs(static_cast<std::size_t>(d + 1), Rational(0));
        for (int j = 0; j <= d; ++j) {
            if (j % k != 0) continue;
            rhs[static_cast<std::size_t>(j)] = Rational(binomial(d, j)) * pow(mu, static_cast<unsigned>(j));
        }
        rhs[static_cast<std::size_t>(d)] += out.correction;
        out.exact = true;
        out.verified = BinaryForm<Rational>(d, std::move(rhs)) == f;
        return out;
    }
    const mpfr_prec_t prec = precision;
    // principal k-th root of lambda
    Mpfr mag(prec);
    BigApprox abs_lambda(abs(lambda), prec);
    mpfr_rootn_ui(mag.get(), abs_lambda.mid().get(), static_cast<unsigned long>(k), MPFR_RNDN);
    BigApprox mu_abs = BigApprox::from_value(mag, true);
    // the rounded input moves the root by at most a relative 2^(1-prec)
    Mpfr input_err(prec);
    mpfr_mul_2si(input_err.get(), mag.get(), 1 - prec, MPFR_RNDU);
    mpfr_abs(input_err.get(), input_err.get(), MPFR_RNDU);
    mu_abs.widen(input_err);
    ComplexApprox mu_c(mu_abs, BigApprox(Rational(0), prec));
    if (lambda.sign() < 0) mu_c *= unit_root(1, k, prec);
    std::vector<ComplexApprox> rhs(static_cast<std::size_t>(d + 1), ComplexApprox(prec));
    for (int i = 0; i < k; ++i) {
        ComplexApprox step = mu_c * unit_root(2 * i, k, prec);
        for (int j = 0; j <= d; ++j) {
            rhs[static_cast<std::size_t>(j)] += ComplexApprox(Rational(binomial(d, j)), prec) * cpow(step, j, prec);
        }
    }
    Mpfr worst(prec);
    mpfr_set_zero(worst.get(), 1);
    bool consistent = true;
    for (int j = 0; j <= d; ++j) {
        ComplexApprox v = rhs[static_cast<std::size_t>(j)] / ComplexApprox(Rational(k), prec);
        if (j == d) v += ComplexApprox(out.correction, prec);
        v -= ComplexApprox(f.coeff(j), prec);
        consistent = consistent && v.re().contains_zero() && v.im().contains_zero();
        Mpfr e = v.abs_upper();
        if (mpfr_less(worst, e)) worst = e;
    }
    Mpfr tol(prec);
    mpfr_set_ui_2exp(tol.get(), 1, -(prec / 2), MPFR_RNDN);
    out.verified = consistent && mpfr_less(worst, tol);
    out.residual = worst;
    return out;
}

PdFamily gen_pd(int d, const Rational& gamma) {
    if (d < 3) throw std::invalid_argument("p_d needs d >= 3");
    if (gamma.is_zero()) throw std::invalid_argument("p_d needs gamma != 0");
    PdFamily out;
    std::vector<Rational> c(static_cast<std::size_t>(d + 1), Rational(0));
    for (int i = 0; 2 * i <= d; ++i) {
        c[static_cast<std::size_t>(2 * i)] = Rational(binomial(d, 2 * i)) * pow(gamma, static_cast<unsigned>(i));
    }
    out.form = BinaryForm<Rational>(d, std::move(c));
    // sqrt(p/q) = sqrt(p q) / q = t sqrt(s) / q
    Integer pq = gamma.numerator() * gamma.denominator();
    Integer s = square_free_part(pq);
    Integer t;
    exact_sqrt(Integer(pq / s), t);
    Rational coeff(t, gamma.denominator());
    out.gamma_is_square = s == 1;
    QuadExt root = s == 1 ? QuadExt(coeff) : QuadExt(Rational(0), coeff, s);
    Decomposition& dec = out.decomposition;
    dec.degree = d;
    dec.exact = true;
    dec.inner_radicand = s == 1 ? 0 : to_int64(s);
    const TowerScalar half(Rational(1, 2));
    dec.summands.push_back({half, TowerScalar(1), TowerScalar(root)});
    dec.summands.push_back({half, TowerScalar(1), TowerScalar(-root)});
    return out;
}

#define WARING_INSTANTIATE_DECOMPOSE(F)                                                                   \
    template Decomposition extract_decomposition(const BinaryForm<F>&, const BinaryForm<F>&, const ExtractOptions&); \
    template VerifyResult verify_decomposition(const Decomposition&, const BinaryForm<F>&);

WARING_INSTANTIATE_DECOMPOSE(Rational)
WARING_INSTANTIATE_DECOMPOSE(QuadExt)

}  // namespace waring

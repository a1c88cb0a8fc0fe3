#include "waring/apolarity.hpp"

#include <stdexcept>
#include <string>

namespace waring {

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
template <class F>
std::vector<int> row_reduce(std::vector<std::vector<F>>& m, int cols) {
    std::vector<int> pivots;
    int row = 0;
    const int rows = static_cast<int>(m.size());
    for (int col = 0; col < cols && row < rows; ++col) {
        int sel = -1;
        for (int i = row; i < rows; ++i) {
            if (!m[i][col].is_zero()) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        std::swap(m[row], m[sel]);
        F inv = F(1) / m[row][col];
        for (int j = col; j < cols; ++j) m[row][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            F factor = m[i][col];
            for (int j = col; j < cols; ++j) m[i][j] -= factor * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
KernelBasis<F> kernel_of_rows(std::vector<std::vector<F>> m, int r) {
    const int cols = r + 1;
    std::vector<int> pivots = row_reduce(m, cols);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    KernelBasis<F> out;
    out.r = r;
    // Pivots sit left of every free column they couple to, so the free
    // column is the last nonzero entry of its basis vector.
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<F> v(static_cast<std::size_t>(cols), F(0));
        v[static_cast<std::size_t>(free)] = F(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            v[static_cast<std::size_t>(pivots[i])] = -m[i][static_cast<std::size_t>(free)];
        }
        out.basis.push_back(canonical_projective(BinaryForm<F>(r, std::move(v))));
    }
    return out;
}

Integer falling(int n, int k) {
    Integer out = 1;
    for (int i = 0; i < k; ++i) out *= n - i;
    return out;
}

}  // namespace

template <class F>
Catalecticant<F> build_catalecticant(const BinaryForm<F>& f, int r) {
    const int d = f.degree();
    if (r < 1 || r > d) {
        throw std::invalid_argument("catalecticant size r=" + std::to_string(r) + " outside 1.." + std::to_string(d));
    }
    Catalecticant<F> c;
    c.r = r;
    c.source = binomial_view(f);
    c.matrix.assign(static_cast<std::size_t>(d - r + 1), std::vector<F>(static_cast<std::size_t>(r + 1), F(0)));
    for (int s = 0; s <= d - r; ++s) {
        for (int t = 0; t <= r; ++t) c.matrix[s][t] = c.source.a[static_cast<std::size_t>(s + t)];
    }
    return c;
}

template <class F>
KernelBasis<F> kernel(const Catalecticant<F>& c) {
    return kernel_of_rows(c.matrix, c.r);
}

template <class F>
KernelBasis<F> apolar_space(const BinaryForm<F>& f, int r) {
    if (r < 0 || r > f.degree() + 1) throw std::invalid_argument("apolar_space: degree out of range");
    if (r == 0 || r > f.degree()) {
        if (r == 0 && !f.is_zero()) return KernelBasis<F>{0, {}};
        return kernel_of_rows(std::vector<std::vector<F>>{}, r);
    }
    return kernel(build_catalecticant(f, r));
}

template <class F>
BinaryForm<F> apply_diffop(const BinaryForm<F>& h, const BinaryForm<F>& p) {
    const int k = h.degree();
    const int d = p.degree();
    if (k > d) throw std::invalid_argument("operator degree exceeds form degree");
    std::vector<F> c(static_cast<std::size_t>(d - k + 1), F(0));
    for (int t = 0; t <= k; ++t) {
        if (h.coeff(t).is_zero()) continue;
        // d^(k-t)/dx^(k-t) d^t/dy^t applied to x^(d-i) y^i
        for (int i = t; i <= d; ++i) {
            if (d - i < k - t || p.coeff(i).is_zero()) continue;
            Integer mult = falling(d - i, k - t) * falling(i, t);
            c[static_cast<std::size_t>(i - t)] += h.coeff(t) * p.coeff(i) * F(Rational(mult));
        }
    }
    return BinaryForm<F>(d - k, std::move(c));
}

template <class F>
ApolarPair<F> apolar_generators(const BinaryForm<F>& f) {
    if (f.is_zero()) throw std::invalid_argument("apolar generators of the zero form");
    const int d = f.degree();
    int e1 = 1;
    KernelBasis<F> low = apolar_space(f, e1);
    while (low.dim() == 0) low = apolar_space(f, ++e1);
    ApolarPair<F> pair{low.basis.front(), BinaryForm<F>::zero(0)};
    const int e2 = d + 2 - e1;
    bool found = false;
    for (const BinaryForm<F>& cand : apolar_space(f, e2).basis) {
        if (!divides(pair.g1, cand)) {
            pair.g2 = cand;
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("no second apolar generator in degree " + std::to_string(e2));
    if (resultant(pair.g1, pair.g2).is_zero()) throw std::logic_error("apolar generators share a root");
    return pair;
}

template <class F>
UniquenessReport<F> kernel_uniqueness_check(const BinaryForm<F>& f, int k) {
    if (2 * k >= f.degree() + 2) {
        throw std::invalid_argument("uniqueness check needs k < (d+2)/2, got k=" + std::to_string(k));
    }
    KernelBasis<F> kb = apolar_space(f, k);
    UniquenessReport<F> rep;
    rep.dim = kb.dim();
    if (kb.dim() == 0) {
        rep.kind = UniquenessReport<F>::Kind::empty;
    } else if (kb.dim() == 1) {
        rep.kind = UniquenessReport<F>::Kind::unique;
        rep.form = kb.basis.front();
    } else {
        rep.kind = UniquenessReport<F>::Kind::high_dim;
    }
    return rep;
}

#define WARING_INSTANTIATE_APOLARITY(F)                                            \
    template Catalecticant<F> build_catalecticant(const BinaryForm<F>&, int);      \
    template KernelBasis<F> kernel(const Catalecticant<F>&);                       \
    template KernelBasis<F> apolar_space(const BinaryForm<F>&, int);               \
    template BinaryForm<F> apply_diffop(const BinaryForm<F>&, const BinaryForm<F>&); \
    template ApolarPair<F> apolar_generators(const BinaryForm<F>&);                \
    template UniquenessReport<F> kernel_uniqueness_check(const BinaryForm<F>&, int);

WARING_INSTANTIATE_APOLARITY(Rational)
WARING_INSTANTIATE_APOLARITY(QuadExt)

}  // namespace waring

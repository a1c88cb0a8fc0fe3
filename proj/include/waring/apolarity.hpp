#ifndef WARING_APOLARITY_HPP
#define WARING_APOLARITY_HPP

#include "waring/binform.hpp"

#include <optional>
#include <vector>

namespace waring {

/// Hankel matrix of binomial-normalized coefficients: entry(s, t) = a_(s+t),
/// s = 0..d-r, t = 0..r. Its kernel holds the degree-r forms apolar to the
/// source form.
template <class F>
struct Catalecticant {
    int r = 0;
    BinomialView<F> source;
    std::vector<std::vector<F>> matrix;

    int rows() const { return static_cast<int>(matrix.size()); }
    int cols() const { return r + 1; }
    const F& entry(int s, int t) const { return source.a[static_cast<std::size_t>(s + t)]; }
};

/// Kernel vectors (c_0..c_r) read as forms sum c_t x^(r-t) y^t.
///
/// The basis is reduced echelon with respect to the highest y-power: each
/// element has last nonzero coefficient at a distinct position, the other
/// elements vanish there, and rational elements have primitive integer
/// coefficients with that entry positive.
template <class F>
struct KernelBasis {
    int r = 0;
    std::vector<BinaryForm<F>> basis;

    int dim() const { return static_cast<int>(basis.size()); }
};

template <class F>
struct ApolarPair {
    BinaryForm<F> g1;
    BinaryForm<F> g2;
};

template <class F>
struct UniquenessReport {
    enum class Kind { empty, unique, high_dim };
    Kind kind = Kind::empty;
    int dim = 0;
    std::optional<BinaryForm<F>> form;
};

/// Throws std::invalid_argument unless 1 <= r <= d.
template <class F>
Catalecticant<F> build_catalecticant(const BinaryForm<F>& f, int r);

template <class F>
KernelBasis<F> kernel(const Catalecticant<F>& c);

/// Degree-r forms apolar to f for 0 <= r <= d + 1 (all forms when r > d).
template <class F>
KernelBasis<F> apolar_space(const BinaryForm<F>& f, int r);

/// h(d/dx, d/dy) applied to p; throws std::invalid_argument if deg h > deg p.
template <class F>
BinaryForm<F> apply_diffop(const BinaryForm<F>& h, const BinaryForm<F>& p);

/// Generators of the apolar ideal of f != 0; throws std::logic_error if
/// the pair fails the complete-intersection checks.
template <class F>
ApolarPair<F> apolar_generators(const BinaryForm<F>& f);

/// Kernel at degree k < (d+2)/2; throws std::invalid_argument otherwise.
template <class F>
UniquenessReport<F> kernel_uniqueness_check(const BinaryForm<F>& f, int k);

}  // namespace waring

#endif  // WARING_APOLARITY_HPP

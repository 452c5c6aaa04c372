#pragma once

#include <vector>

#include "sv/exact.hpp"

namespace sv {

/// Default cap on the number of basis monomials materialized at once.
inline constexpr i64 kDefaultBasisCap = 1'000'000;

/// A product of k projective factors of dimensions n, embedded in multi-degree d.
struct Shape {
    std::vector<i64> n;
    std::vector<i64> d;

    Shape(std::vector<i64> n_, std::vector<i64> d_);

    i64 factors() const { return static_cast<i64>(n.size()); }

    bool operator==(const Shape&) const = default;
};

/// One basis monomial: exponent vector i has length n[i]+1 and entry-sum d[i].
struct Monomial {
    std::vector<std::vector<i64>> exponents;

    bool operator==(const Monomial&) const = default;
};

/// dim Sym_d of an (n+1)-dimensional space: binom(n+d, d).
Int dim_sym(i64 n, i64 d);

/// Dimension of the full tensor space, N = prod_i binom(n[i]+d[i], d[i]).
Int dim_space(const Shape& shape);

/// Same, over raw vectors; degree entries may be zero (factor contributes 1).
Int dim_space(const std::vector<i64>& n, const std::vector<i64>& d);

/// Dimension of the variety itself, D = sum_i n[i].
i64 dim_sum(const Shape& shape);

/// d! / prod(alpha_j!). Requires sum(alpha) == d.
Int multinomial(i64 d, const std::vector<i64>& alpha);

/// All exponent vectors of length n+1 summing to d, ordered so that the
/// concatenated global basis is lexicographic in the monomials: the list
/// starts at (d,0,...,0) and ends at (0,...,0,d).
std::vector<std::vector<i64>> factor_monomials(i64 n, i64 d);

/// Full monomial basis, factor 0 outermost. Throws CapacityError when
/// dim_space(shape) exceeds max_size.
std::vector<Monomial> basis(const Shape& shape, i64 max_size = kDefaultBasisCap);

/// Position of a monomial in basis(shape), computed by combinatorial ranking
/// without materializing the basis.
i64 monomial_index(const Shape& shape, const Monomial& m);

} // namespace sv

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sv/gf.hpp"
#include "sv/ms_tensor.hpp"

namespace sv {

/// Default cap on rows*cols of any matrix the verifier materializes.
inline constexpr i64 kDefaultMaxCells = 50'000'000;

/// A point of the variety over GF(p): one nonzero vector per factor,
/// vector i of length n[i]+1.
struct Point {
    std::vector<GfVector> factors;
};

/// A degree splitting e0 + e1 = d with supports containing the last factor
/// and at least one degree-one factor each.
struct Splitting {
    std::vector<i64> e0;
    std::vector<i64> e1;
    std::vector<std::size_t> support0; // indices with e0 != 0, ascending
    std::vector<std::size_t> support1;

    bool operator==(const Splitting&) const = default;
};

/// Validates the splitting invariants against the shape and fills supports.
/// Throws InvalidSplittingError.
Splitting make_splitting(const Shape& shape, std::vector<i64> e0);

/// Deterministic stream of uniform field elements (rejection sampling, so the
/// draw sequence depends only on the seed and the requested moduli).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint32_t below(std::uint32_t p);

private:
    std::mt19937_64 gen_;
};

/// Uniform random point; factor vectors are redrawn until nonzero.
Point random_point(const Shape& shape, const FieldSpec& field, Rng& rng);

/// Coordinates of the rank-one tensor at the point, length N(n,d).
/// The coordinate at basis monomial (a_0,...,a_{k-1}) is
/// prod_i multinomial(d[i], a_i) * prod_j u_{i,j}^{a_{i,j}}  (mod p).
GfVector rank_one_coords(const Point& point, const Shape& shape, const FieldSpec& field);

/// Coordinates over the basis of multi-degree e (entries may be zero);
/// used for flattenings.
GfVector rank_one_coords_degree(const Point& point, const std::vector<i64>& n,
                                const std::vector<i64>& e, const FieldSpec& field);

/// Tangent rows at the point: one row per pair (factor i, coordinate j),
/// holding the coordinates of u_0^{d0} x ... x u_i^{di-1}.e_{i,j} x ... The
/// constant derivative factor d[i] is dropped; only the row space matters and
/// this keeps sum_j u_{i,j} row(i,j) == rank_one_coords(point) exactly.
GfMatrix tangent_matrix(const Point& point, const Shape& shape, const FieldSpec& field);

/// The stacked matrix of s tangent spaces and its rank.
struct TangentSystem {
    Shape shape;
    std::vector<Point> points;
    GfMatrix matrix; // s*(D+1) rows, N columns
    i64 rank = 0;
};

/// Draws s points and stacks their tangent matrices.
/// Throws CapacityError when rows*cols exceeds max_cells.
TangentSystem stacked_tangent_system(const Shape& shape, i64 s, const FieldSpec& field, Rng& rng,
                                     i64 max_cells = kDefaultMaxCells);

/// Max over `trials` stacked-system ranks at fresh random points. The result
/// is a lower bound for the generic rank; reaching min{s(D+1), N} certifies
/// the expected dimension by semicontinuity.
i64 terracini_rank(const Shape& shape, i64 s, const FieldSpec& field, int trials,
                   std::uint64_t seed, i64 max_cells = kDefaultMaxCells);

/// Matrix of the degree-splitting contraction of sum of rank-one tensors at
/// the given points: N(n, e_side) rows by N(n, e_other) columns. Built as a
/// sum of outer products, so side 0 is exactly the transpose of side 1.
GfMatrix flattening_matrix(const std::vector<Point>& points, const Shape& shape,
                           const Splitting& split, int side, const FieldSpec& field,
                           i64 max_cells = kDefaultMaxCells);

} // namespace sv

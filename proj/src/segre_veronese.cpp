#include "sv/segre_veronese.hpp"

namespace sv {

Splitting make_splitting(const Shape& shape, std::vector<i64> e0) {
    const std::size_t k = shape.n.size();
    const i64 dlast = shape.d[k - 1];
    for (std::size_t j = 0; j + 1 < k; ++j) {
        if (shape.d[j] != 1) {
            throw InvalidSplittingError("splitting: multi-degree must be (1,...,1,d) with d >= 2");
        }
    }
    if (k < 2 || dlast < 2) {
        throw InvalidSplittingError("splitting: multi-degree must be (1,...,1,d) with d >= 2");
    }
    if (e0.size() != k) {
        throw InvalidSplittingError("splitting: e0 must have one entry per factor");
    }
    for (std::size_t j = 0; j < k; ++j) {
        if (e0[j] < 0 || e0[j] > shape.d[j]) {
            throw InvalidSplittingError("splitting: e0 entries must satisfy 0 <= e0[j] <= d[j]");
        }
    }
    if (e0[k - 1] < 1 || e0[k - 1] > dlast - 1) {
        throw InvalidSplittingError("splitting: last entry of e0 must lie in [1, d-1]");
    }

    Splitting s;
    s.e0 = std::move(e0);
    s.e1.resize(k);
    for (std::size_t j = 0; j < k; ++j) s.e1[j] = shape.d[j] - s.e0[j];
    for (std::size_t j = 0; j < k; ++j) {
        if (s.e0[j] != 0) s.support0.push_back(j);
        if (s.e1[j] != 0) s.support1.push_back(j);
    }
    // both supports contain the last factor by the range check above
    if (s.support0.front() >= k - 1 || s.support1.front() >= k - 1) {
        throw InvalidSplittingError("splitting: each side needs at least one degree-one factor");
    }
    return s;
}

std::uint32_t Rng::below(std::uint32_t p) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % p;
    std::uint64_t x = gen_();
    while (x >= limit) x = gen_();
    return static_cast<std::uint32_t>(x % p);
}

Point random_point(const Shape& shape, const FieldSpec& field, Rng& rng) {
    Point pt;
    pt.factors.reserve(shape.n.size());
    for (i64 n : shape.n) {
        GfVector v(n + 1);
        do {
            for (Eigen::Index j = 0; j < v.size(); ++j) v[j] = rng.below(field.p);
        } while (v.isZero());
        pt.factors.push_back(std::move(v));
    }
    return pt;
}

namespace {

// Coordinates of u^d over the factor monomial list: multinomial(d, a) * u^a.
GfVector factor_coords(const GfVector& u, i64 d, const FieldSpec& field) {
    const std::uint64_t p = field.p;
    const auto monos = factor_monomials(u.size() - 1, d);
    // power table: pw[j][t] = u[j]^t
    std::vector<std::vector<std::uint64_t>> pw(static_cast<std::size_t>(u.size()));
    for (std::size_t j = 0; j < pw.size(); ++j) {
        pw[j].resize(static_cast<std::size_t>(d) + 1);
        pw[j][0] = 1;
        for (i64 t = 1; t <= d; ++t) {
            pw[j][static_cast<std::size_t>(t)] =
                pw[j][static_cast<std::size_t>(t - 1)] * u[static_cast<Eigen::Index>(j)] % p;
        }
    }
    GfVector out(static_cast<Eigen::Index>(monos.size()));
    for (std::size_t a = 0; a < monos.size(); ++a) {
        std::uint64_t c = static_cast<std::uint64_t>(multinomial(d, monos[a]) % p);
        for (std::size_t j = 0; j < monos[a].size(); ++j) {
            c = c * pw[j][static_cast<std::size_t>(monos[a][j])] % p;
        }
        out[static_cast<Eigen::Index>(a)] = static_cast<GfScalar>(c);
    }
    return out;
}

// Row j holds the coordinates of u^{d-1}.e_j over the factor monomial list.
GfMatrix factor_tangent_rows(const GfVector& u, i64 d, const FieldSpec& field) {
    const std::uint64_t p = field.p;
    const auto monos = factor_monomials(u.size() - 1, d);
    std::vector<std::vector<std::uint64_t>> pw(static_cast<std::size_t>(u.size()));
    for (std::size_t j = 0; j < pw.size(); ++j) {
        pw[j].resize(static_cast<std::size_t>(d) + 1);
        pw[j][0] = 1;
        for (i64 t = 1; t <= d; ++t) {
            pw[j][static_cast<std::size_t>(t)] =
                pw[j][static_cast<std::size_t>(t - 1)] * u[static_cast<Eigen::Index>(j)] % p;
        }
    }
    GfMatrix rows(u.size(), static_cast<Eigen::Index>(monos.size()));
    std::vector<i64> shifted;
    for (std::size_t a = 0; a < monos.size(); ++a) {
        const auto& alpha = monos[a];
        for (std::size_t j = 0; j < alpha.size(); ++j) {
            if (alpha[j] == 0) {
                rows(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(a)) = 0;
                continue;
            }
            shifted = alpha;
            shifted[j] -= 1;
            std::uint64_t c = static_cast<std::uint64_t>(multinomial(d - 1, shifted) % p);
            for (std::size_t t = 0; t < shifted.size(); ++t) {
                c = c * pw[t][static_cast<std::size_t>(shifted[t])] % p;
            }
            rows(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(a)) = static_cast<GfScalar>(c);
        }
    }
    return rows;
}

i64 checked_dim(const std::vector<i64>& n, const std::vector<i64>& e, i64 max_cells) {
    const Int dim = dim_space(n, e);
    if (dim > max_cells) {
        throw CapacityError("coordinate vector of length " + dim.str() +
                            " exceeds the configured cell limit " + std::to_string(max_cells));
    }
    return to_i64(dim);
}

} // namespace

GfVector rank_one_coords_degree(const Point& point, const std::vector<i64>& n,
                                const std::vector<i64>& e, const FieldSpec& field) {
    const std::uint64_t p = field.p;
    const std::size_t k = n.size();
    const i64 total = checked_dim(n, e, kDefaultMaxCells);

    std::vector<GfVector> per_factor(k);
    for (std::size_t i = 0; i < k; ++i) per_factor[i] = factor_coords(point.factors[i], e[i], field);

    GfVector out(total);
    std::vector<Eigen::Index> digit(k, 0);
    for (i64 col = 0; col < total; ++col) {
        std::uint64_t c = 1;
        for (std::size_t i = 0; i < k; ++i) c = c * per_factor[i][digit[i]] % p;
        out[col] = static_cast<GfScalar>(c);
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            if (++digit[pos] < per_factor[pos].size()) break;
            digit[pos] = 0;
        }
    }
    return out;
}

GfVector rank_one_coords(const Point& point, const Shape& shape, const FieldSpec& field) {
    return rank_one_coords_degree(point, shape.n, shape.d, field);
}

GfMatrix tangent_matrix(const Point& point, const Shape& shape, const FieldSpec& field) {
    const std::uint64_t p = field.p;
    const std::size_t k = shape.n.size();
    const i64 cols = checked_dim(shape.n, shape.d, kDefaultMaxCells);
    i64 rows = 0;
    for (i64 n : shape.n) rows += n + 1;

    std::vector<GfVector> coords(k);
    std::vector<GfMatrix> deriv(k);
    std::vector<i64> row_offset(k);
    for (std::size_t i = 0; i < k; ++i) {
        coords[i] = factor_coords(point.factors[i], shape.d[i], field);
        deriv[i] = factor_tangent_rows(point.factors[i], shape.d[i], field);
        row_offset[i] = i == 0 ? 0 : row_offset[i - 1] + shape.n[i - 1] + 1;
    }

    GfMatrix out(rows, cols);
    std::vector<Eigen::Index> digit(k, 0);
    std::vector<std::uint64_t> prefix(k + 1), suffix(k + 1);
    for (i64 col = 0; col < cols; ++col) {
        prefix[0] = 1;
        for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] * coords[i][digit[i]] % p;
        suffix[k] = 1;
        for (std::size_t i = k; i > 0; --i) suffix[i - 1] = suffix[i] * coords[i - 1][digit[i - 1]] % p;

        for (std::size_t i = 0; i < k; ++i) {
            const std::uint64_t outer = prefix[i] * suffix[i + 1] % p;
            for (i64 j = 0; j <= shape.n[i]; ++j) {
                out(row_offset[i] + j, col) =
                    static_cast<GfScalar>(outer * deriv[i](j, digit[i]) % p);
            }
        }
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            if (++digit[pos] < coords[pos].size()) break;
            digit[pos] = 0;
        }
    }
    return out;
}

TangentSystem stacked_tangent_system(const Shape& shape, i64 s, const FieldSpec& field, Rng& rng,
                                     i64 max_cells) {
    if (s < 1) throw std::invalid_argument("stacked_tangent_system: s must be >= 1");
    const Int cols = dim_space(shape);
    const i64 block = dim_sum(shape) + static_cast<i64>(shape.n.size());
    if (Int(s) * block * cols > max_cells) {
        throw CapacityError("tangent system of " + (Int(s) * block * cols).str() +
                            " cells exceeds the configured limit " + std::to_string(max_cells));
    }

    TangentSystem sys{shape, {}, GfMatrix(s * block, to_i64(cols)), 0};
    sys.points.reserve(static_cast<std::size_t>(s));
    for (i64 a = 0; a < s; ++a) {
        sys.points.push_back(random_point(shape, field, rng));
        sys.matrix.middleRows(a * block, block) = tangent_matrix(sys.points.back(), shape, field);
    }
    sys.rank = rank(sys.matrix, field);
    return sys;
}

i64 terracini_rank(const Shape& shape, i64 s, const FieldSpec& field, int trials,
                   std::uint64_t seed, i64 max_cells) {
    if (trials < 1) throw std::invalid_argument("terracini_rank: trials must be >= 1");
    Rng rng(seed);
    i64 best = 0;
    for (int t = 0; t < trials; ++t) {
        best = std::max(best, stacked_tangent_system(shape, s, field, rng, max_cells).rank);
    }
    return best;
}

GfMatrix flattening_matrix(const std::vector<Point>& points, const Shape& shape,
                           const Splitting& split, int side, const FieldSpec& field,
                           i64 max_cells) {
    if (side != 0 && side != 1) {
        throw std::invalid_argument("flattening_matrix: side must be 0 or 1");
    }
    const std::vector<i64>& e_rows = side == 0 ? split.e0 : split.e1;
    const std::vector<i64>& e_cols = side == 0 ? split.e1 : split.e0;
    const i64 rows = checked_dim(shape.n, e_rows, max_cells);
    const i64 cols = checked_dim(shape.n, e_cols, max_cells);
    if (Int(rows) * cols > max_cells) {
        throw CapacityError("flattening of " + (Int(rows) * cols).str() +
                            " cells exceeds the configured limit " + std::to_string(max_cells));
    }

    const std::uint64_t p = field.p;
    GfMatrix out = GfMatrix::Zero(rows, cols);
    for (const Point& pt : points) {
        const GfVector u = rank_one_coords_degree(pt, shape.n, e_rows, field);
        const GfVector v = rank_one_coords_degree(pt, shape.n, e_cols, field);
        for (i64 r = 0; r < rows; ++r) {
            if (u[r] == 0) continue;
            const std::uint64_t ur = u[r];
            for (i64 c = 0; c < cols; ++c) {
                out(r, c) = static_cast<GfScalar>((out(r, c) + ur * v[c]) % p);
            }
        }
    }
    return out;
}

} // namespace sv

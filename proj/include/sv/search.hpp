#pragma once

#include <optional>
#include <vector>

#include "sv/criteria.hpp"

namespace sv {

/// Bounds for the exhaustive enumeration. Multi-degrees are restricted to the
/// form (1,...,1,dl) with dl in [2, max_last_degree].
struct SearchBounds {
    i64 max_factors = 3;
    i64 max_n = 2;
    i64 max_last_degree = 2;
    i64 max_s = 8;
    std::optional<i64> max_dim; // optional cap on N(n,d)
};

/// Throws std::invalid_argument when a bound is out of range.
void validate(const SearchBounds& bounds);

/// All certified tuples within bounds, in canonical order: sorted by
/// (k, n, dl, s) where the degree-one factor dimensions of n are
/// nondecreasing (the last factor is never permuted). When several splittings
/// certify the same (shape, s), the one with the largest defect_lb is kept
/// (first enumerated wins ties). Deterministic: equal bounds, equal output.
std::vector<Certificate> enumerate_defective(const SearchBounds& bounds);

/// Outcome of re-checking one certificate against the rank verifier.
struct CrossCheck {
    Certificate cert;
    std::optional<i64> rank;  // empty when the case exceeded max_cells
    bool consistent = false;  // rank <= F + 1
    bool rank_deficit = false; // rank < expected + 1 (numerical evidence)
    std::string error;        // capacity message, empty otherwise
};

std::vector<CrossCheck> cross_verify(const std::vector<Certificate>& certs,
                                     const FieldSpec& field, int trials, std::uint64_t seed,
                                     i64 max_cells = kDefaultMaxCells);

} // namespace sv

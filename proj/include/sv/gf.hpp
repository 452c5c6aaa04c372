#pragma once

#include <cstdint>
#include <Eigen/Core>

#include "sv/exact.hpp"

namespace sv {

/// Prime field GF(p) used to specialize rank computations.
/// p must be prime, >= 10007 and <= 2^31-1 so that one product plus one
/// addend fits a 64-bit accumulator.
struct FieldSpec {
    std::uint32_t p = 2147483647;

    bool operator==(const FieldSpec&) const = default;
};

inline constexpr std::uint32_t kMaxPrime = 2147483647u;

bool is_prime(std::uint64_t n);

/// Throws std::invalid_argument if the field does not satisfy its invariants.
void validate(const FieldSpec& field);

using GfScalar = std::uint32_t;
using GfMatrix = Eigen::Matrix<GfScalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using GfVector = Eigen::Matrix<GfScalar, Eigen::Dynamic, 1>;

inline std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) r = r * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return r;
}

inline GfScalar mod_inverse(GfScalar a, std::uint32_t p) {
    return static_cast<GfScalar>(mod_pow(a, p - 2, p));
}

/// Exact rank over GF(p) by Gaussian elimination; pivot is the first nonzero
/// entry in each column. The argument is taken by value, so the caller's
/// matrix is never mutated.
Eigen::Index rank(GfMatrix m, const FieldSpec& field);

/// cols - rank.
inline Eigen::Index kernel_dim(const GfMatrix& m, const FieldSpec& field) {
    return m.cols() - rank(m, field);
}

} // namespace sv

#pragma once

#include <cstdint>
#include <boost/multiprecision/cpp_int.hpp>

#include "sv/errors.hpp"

namespace sv {

using i64 = std::int64_t;

/// Exact integer used for all counting and formula evaluation.
using Int = boost::multiprecision::cpp_int;

/// Counts above this cap are refused when narrowing to machine integers.
inline constexpr i64 kDefaultIntCap = i64{1} << 48;

/// Checked narrowing to int64; throws CapacityError beyond the cap.
i64 to_i64(const Int& v, i64 cap = kDefaultIntCap);

/// binom(n, k); zero for k > n or negative arguments.
Int binomial(i64 n, i64 k);

/// Ceiling of a/b for a >= 0, b > 0.
Int ceil_div(const Int& a, const Int& b);

/// Floor division for int64 (rounds toward negative infinity).
i64 floor_div(i64 a, i64 b);

} // namespace sv

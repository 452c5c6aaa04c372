#pragma once

#include <array>
#include <map>
#include <string>

#include "sv/criteria.hpp"

namespace sv {

/// One member of a built-in defective family, with the parameters that
/// produced it and the resulting certificate.
struct FamilyCase {
    std::string family; // cgg-1 | cgg-2 | even | odd-i | odd-ii | four-factor
    std::map<std::string, i64> params;
    Certificate cert;
};

/// Two cases per a >= 2: shapes (1,1,a) and (a,a,2), both in multi-degree
/// (1,1,2) with e0 = (1,0,1), at s = 2a+1 and s = 3a+2 respectively.
std::array<FamilyCase, 2> cgg_family(i64 a);

/// Shape (n, n+a, 1), multi-degree (1,1,2d), e0 = (1,0,d), s = (n+a+1)d + k.
/// Valid for 0 <= a <= ceil(n/d)-1 and 1 <= k <= n - a*d.
FamilyCase even_family(i64 n, i64 d, i64 a, i64 k);

/// Shape (n, n+a, 1), multi-degree (1,1,2d+1), e0 = (1,0,d+1).
/// Case (i), a <= floor((n+1)/d): s = (n+1)(d+1) + k with
///   1 <= k <= min{n+1, a(d+1)} - 1.
/// Case (ii), floor((n+1)/d)+1 <= a <= floor(2n/d): s = (n+a+1)d + k with
///   1 <= k <= min{n+a, 2n - a*d + 1}.
FamilyCase odd_family(i64 n, i64 d, i64 a, i64 k);

/// Shape (1, n, dn+d+k, 1), multi-degree (1,1,1,d), e0 = (1,1,0,d-1),
/// s = 2d(n+1) - 1. Valid for n >= 1, d >= 2 and
/// -1 <= k < (nd - 3n + d - 2)/(2n+1).
FamilyCase four_factor_family(i64 n, i64 d, i64 k);

// Valid parameter windows, used to enumerate whole families.
i64 even_a_max(i64 n, i64 d);              // ceil(n/d) - 1
i64 even_k_max(i64 n, i64 d, i64 a);       // n - a*d
i64 odd_case1_a_max(i64 n, i64 d);         // floor((n+1)/d)
i64 odd_case1_k_max(i64 n, i64 d, i64 a);  // min{n+1, a(d+1)} - 1
i64 odd_case2_a_max(i64 n, i64 d);         // floor(2n/d)
i64 odd_case2_k_max(i64 n, i64 d, i64 a);  // min{n+a, 2n - a*d + 1}
std::pair<i64, i64> four_factor_k_range(i64 n, i64 d); // inclusive; empty if second < first

} // namespace sv

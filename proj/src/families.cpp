#include "sv/families.hpp"

namespace sv {

namespace {

// keeps every parameter product inside int64
constexpr i64 kMaxParam = i64{1} << 30;

void check_magnitude(std::initializer_list<i64> params, const std::string& tag) {
    for (i64 v : params) {
        if (v > kMaxParam || v < -kMaxParam) {
            throw RangeError(tag + ": parameter magnitude exceeds " + std::to_string(kMaxParam));
        }
    }
}

Certificate certify_or_fail(const Shape& shape, const Splitting& split, i64 s,
                            const std::string& tag) {
    auto cert = certify(shape, split, s, tag);
    if (!cert) {
        throw std::logic_error(tag + ": conditions unexpectedly failed inside the stated range");
    }
    return std::move(*cert);
}

} // namespace

std::array<FamilyCase, 2> cgg_family(i64 a) {
    if (a < 2) throw RangeError("cgg family: a must be >= 2");

    Shape s1({1, 1, a}, {1, 1, 2});
    Splitting sp1 = make_splitting(s1, {1, 0, 1});
    FamilyCase c1{"cgg-1", {{"a", a}}, certify_or_fail(s1, sp1, 2 * a + 1, "cgg-1")};

    Shape s2({a, a, 2}, {1, 1, 2});
    Splitting sp2 = make_splitting(s2, {1, 0, 1});
    FamilyCase c2{"cgg-2", {{"a", a}}, certify_or_fail(s2, sp2, 3 * a + 2, "cgg-2")};

    return {std::move(c1), std::move(c2)};
}

i64 even_a_max(i64 n, i64 d) {
    return to_i64(ceil_div(n, d)) - 1;
}

i64 even_k_max(i64 n, i64 d, i64 a) {
    check_magnitude({n, d, a}, "even family");
    return n - a * d;
}

FamilyCase even_family(i64 n, i64 d, i64 a, i64 k) {
    check_magnitude({n, d, a, k}, "even family");
    if (n < 1 || d < 1) throw RangeError("even family: n and d must be >= 1");
    if (a < 0 || a > even_a_max(n, d)) {
        throw RangeError("even family: a must lie in [0, ceil(n/d)-1]");
    }
    if (k < 1 || k > even_k_max(n, d, a)) {
        throw RangeError("even family: k must lie in [1, n - a*d]");
    }
    Shape shape({n, n + a, 1}, {1, 1, 2 * d});
    Splitting split = make_splitting(shape, {1, 0, d});
    const i64 s = (n + a + 1) * d + k;
    return {"even", {{"n", n}, {"d", d}, {"a", a}, {"k", k}},
            certify_or_fail(shape, split, s, "even")};
}

i64 odd_case1_a_max(i64 n, i64 d) {
    return (n + 1) / d;
}

i64 odd_case1_k_max(i64 n, i64 d, i64 a) {
    check_magnitude({n, d, a}, "odd family");
    return std::min(n + 1, a * (d + 1)) - 1;
}

i64 odd_case2_a_max(i64 n, i64 d) {
    return 2 * n / d;
}

i64 odd_case2_k_max(i64 n, i64 d, i64 a) {
    check_magnitude({n, d, a}, "odd family");
    return std::min(n + a, 2 * n - a * d + 1);
}

FamilyCase odd_family(i64 n, i64 d, i64 a, i64 k) {
    check_magnitude({n, d, a, k}, "odd family");
    if (n < 1 || d < 1) throw RangeError("odd family: n and d must be >= 1");
    if (a < 0 || a > odd_case2_a_max(n, d)) {
        throw RangeError("odd family: a must lie in [0, floor(2n/d)]");
    }
    Shape shape({n, n + a, 1}, {1, 1, 2 * d + 1});
    Splitting split = make_splitting(shape, {1, 0, d + 1});
    if (a <= odd_case1_a_max(n, d)) {
        if (k < 1 || k > odd_case1_k_max(n, d, a)) {
            throw RangeError("odd family, case (i): k must lie in [1, min{n+1, a(d+1)} - 1]");
        }
        const i64 s = (n + 1) * (d + 1) + k;
        return {"odd-i", {{"n", n}, {"d", d}, {"a", a}, {"k", k}},
                certify_or_fail(shape, split, s, "odd-i")};
    }
    if (k < 1 || k > odd_case2_k_max(n, d, a)) {
        throw RangeError("odd family, case (ii): k must lie in [1, min{n+a, 2n - a*d + 1}]");
    }
    const i64 s = (n + a + 1) * d + k;
    return {"odd-ii", {{"n", n}, {"d", d}, {"a", a}, {"k", k}},
            certify_or_fail(shape, split, s, "odd-ii")};
}

std::pair<i64, i64> four_factor_k_range(i64 n, i64 d) {
    check_magnitude({n, d}, "four-factor family");
    // largest k with k(2n+1) < nd - 3n + d - 2
    const i64 kmax = floor_div(n * d - 3 * n + d - 2 - 1, 2 * n + 1);
    return {-1, kmax};
}

FamilyCase four_factor_family(i64 n, i64 d, i64 k) {
    check_magnitude({n, d, k}, "four-factor family");
    if (n < 1 || d < 2) throw RangeError("four-factor family: need n >= 1 and d >= 2");
    const auto [klo, khi] = four_factor_k_range(n, d);
    if (k < klo || k > khi) {
        throw RangeError("four-factor family: k must satisfy -1 <= k < (nd-3n+d-2)/(2n+1)");
    }
    Shape shape({1, n, d * n + d + k, 1}, {1, 1, 1, d});
    Splitting split = make_splitting(shape, {1, 1, 0, d - 1});
    const i64 s = 2 * d * (n + 1) - 1;
    FamilyCase fc{"four-factor", {{"n", n}, {"d", d}, {"k", k}},
                  certify_or_fail(shape, split, s, "four-factor")};

    // closed forms for both gaps, specific to this family
    const Int N = dim_space(shape);
    if (N - 1 - fc.cert.F != 2 * k + 3) {
        throw std::logic_error("four-factor family: ambient gap identity violated");
    }
    if (Int(s) * (dim_sum(shape) + 1) - 1 - fc.cert.F != -(2 * n + 1) * k + n * d - 3 * n + d - 2) {
        throw std::logic_error("four-factor family: span gap identity violated");
    }
    return fc;
}

} // namespace sv

#include "sv/ms_tensor.hpp"

#include <numeric>

namespace sv {

Shape::Shape(std::vector<i64> n_, std::vector<i64> d_) : n(std::move(n_)), d(std::move(d_)) {
    if (n.empty() || n.size() != d.size()) {
        throw std::invalid_argument("shape: n and d must be non-empty lists of equal length");
    }
    for (i64 v : n) {
        if (v < 1) throw std::invalid_argument("shape: all factor dimensions must be >= 1");
    }
    for (i64 v : d) {
        if (v < 1) throw std::invalid_argument("shape: all degrees must be >= 1");
    }
}

Int dim_sym(i64 n, i64 d) {
    if (n < 0 || d < 0) throw std::invalid_argument("dim_sym: arguments must be non-negative");
    return binomial(n + d, d);
}

Int dim_space(const std::vector<i64>& n, const std::vector<i64>& d) {
    Int r = 1;
    for (std::size_t i = 0; i < n.size(); ++i) r *= dim_sym(n[i], d[i]);
    return r;
}

Int dim_space(const Shape& shape) {
    return dim_space(shape.n, shape.d);
}

i64 dim_sum(const Shape& shape) {
    return std::accumulate(shape.n.begin(), shape.n.end(), i64{0});
}

Int multinomial(i64 d, const std::vector<i64>& alpha) {
    i64 sum = 0;
    for (i64 a : alpha) {
        if (a < 0) throw std::invalid_argument("multinomial: negative exponent");
        sum += a;
    }
    if (sum != d) throw std::invalid_argument("multinomial: exponents must sum to the degree");
    // product of binomials over partial sums
    Int r = 1;
    i64 acc = 0;
    for (i64 a : alpha) {
        acc += a;
        r *= binomial(acc, a);
    }
    return r;
}

namespace {

void emit_factor_monomials(i64 parts_left, i64 deg_left, std::vector<i64>& cur,
                           std::vector<std::vector<i64>>& out) {
    if (parts_left == 1) {
        cur.push_back(deg_left);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (i64 a = deg_left; a >= 0; --a) {
        cur.push_back(a);
        emit_factor_monomials(parts_left - 1, deg_left - a, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<std::vector<i64>> factor_monomials(i64 n, i64 d) {
    std::vector<std::vector<i64>> out;
    out.reserve(static_cast<std::size_t>(to_i64(dim_sym(n, d))));
    std::vector<i64> cur;
    emit_factor_monomials(n + 1, d, cur, out);
    return out;
}

std::vector<Monomial> basis(const Shape& shape, i64 max_size) {
    const Int total = dim_space(shape);
    if (total > max_size) {
        throw CapacityError("basis: dimension " + total.str() + " exceeds the configured limit " +
                            std::to_string(max_size));
    }
    const std::size_t k = shape.n.size();
    std::vector<std::vector<std::vector<i64>>> per_factor(k);
    for (std::size_t i = 0; i < k; ++i) per_factor[i] = factor_monomials(shape.n[i], shape.d[i]);

    std::vector<Monomial> out;
    out.reserve(static_cast<std::size_t>(to_i64(total)));
    std::vector<std::size_t> digit(k, 0);
    // mixed-radix counter, factor 0 outermost (last factor varies fastest)
    while (true) {
        Monomial m;
        m.exponents.reserve(k);
        for (std::size_t i = 0; i < k; ++i) m.exponents.push_back(per_factor[i][digit[i]]);
        out.push_back(std::move(m));
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            if (++digit[pos] < per_factor[pos].size()) break;
            digit[pos] = 0;
            if (pos == 0) return out;
        }
    }
}

namespace {

// Rank of one exponent vector within factor_monomials(n, d) order.
Int factor_rank(const std::vector<i64>& alpha, i64 d) {
    const i64 m = static_cast<i64>(alpha.size());
    Int rank = 0;
    i64 rem = d;
    for (i64 pos = 0; pos + 1 < m; ++pos) {
        const i64 a = alpha[static_cast<std::size_t>(pos)];
        const i64 q = m - pos - 1; // positions after this one
        for (i64 t = rem; t > a; --t) {
            rank += binomial(rem - t + q - 1, q - 1); // compositions of rem-t into q parts
        }
        rem -= a;
    }
    return rank;
}

} // namespace

i64 monomial_index(const Shape& shape, const Monomial& m) {
    const std::size_t k = shape.n.size();
    if (m.exponents.size() != k) {
        throw std::invalid_argument("monomial_index: factor count mismatch");
    }
    for (std::size_t i = 0; i < k; ++i) {
        const auto& a = m.exponents[i];
        if (static_cast<i64>(a.size()) != shape.n[i] + 1) {
            throw std::invalid_argument("monomial_index: exponent vector length mismatch");
        }
        i64 sum = 0;
        for (i64 v : a) {
            if (v < 0) throw std::invalid_argument("monomial_index: negative exponent");
            sum += v;
        }
        if (sum != shape.d[i]) {
            throw std::invalid_argument("monomial_index: exponent sum does not match the degree");
        }
    }
    Int index = 0;
    for (std::size_t i = 0; i < k; ++i) {
        index *= dim_sym(shape.n[i], shape.d[i]);
        index += factor_rank(m.exponents[i], shape.d[i]);
    }
    return to_i64(index);
}

} // namespace sv

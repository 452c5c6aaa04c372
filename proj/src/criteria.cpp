#include "sv/criteria.hpp"

#include <cassert>

namespace sv {

namespace {

struct SplitDims {
    std::array<Int, 2> N_e;       // N(n, e_i)
    std::array<Int, 2> support_n; // sum_{j in support_i} n[j]
    std::array<i64, 2> lead_n;    // n[support_i[0]]
};

SplitDims split_dims(const Shape& shape, const Splitting& split) {
    SplitDims d;
    d.N_e[0] = dim_space(shape.n, split.e0);
    d.N_e[1] = dim_space(shape.n, split.e1);
    for (int i = 0; i < 2; ++i) {
        const auto& sup = i == 0 ? split.support0 : split.support1;
        Int sum = 0;
        for (std::size_t j : sup) sum += shape.n[j];
        d.support_n[i] = sum;
        d.lead_n[i] = shape.n[sup.front()];
    }
    return d;
}

} // namespace

Int e_value(const Shape& shape, const Splitting& split, i64 s) {
    const SplitDims dims = split_dims(shape, split);
    return Int(dim_sum(shape)) - (dims.N_e[0] - s) - (dims.N_e[1] - s);
}

Int f_value(const Shape& shape, const Splitting& split, i64 s) {
    const SplitDims dims = split_dims(shape, split);
    const Int D = dim_sum(shape);
    const Int E = e_value(shape, split, s);
    const Int N = dim_space(shape);
    return s * (D - E) + N - 1 - dims.N_e[1] * (dims.N_e[0] - s) - dims.N_e[0] * (dims.N_e[1] - s) +
           (dims.N_e[0] - s) * (dims.N_e[1] - s);
}

Int expected_dim(const Shape& shape, i64 s) {
    if (s < 1) throw std::invalid_argument("expected_dim: s must be >= 1");
    const Int dirs = Int(s) * (dim_sum(shape) + 1);
    const Int N = dim_space(shape);
    return (dirs < N ? dirs : N) - 1;
}

ConditionReport check_conditions(const Shape& shape, const Splitting& split, i64 s) {
    if (s < 1) throw std::invalid_argument("check_conditions: s must be >= 1");
    const SplitDims dims = split_dims(shape, split);
    const Int D = dim_sum(shape);
    const Int N = dim_space(shape);

    ConditionReport rep;

    Int need = dims.N_e[0] - dims.support_n[0] + 1;
    const Int need1 = dims.N_e[1] - dims.support_n[1] + 1;
    if (need1 > need) need = need1;
    rep.ineq0_slack = s - need;
    rep.ineq0_holds = rep.ineq0_slack >= 0;

    for (int i = 0; i < 2; ++i) {
        rep.ineq1_positivity[i] = dims.N_e[i] - s;
        rep.ineq1_margin[i] = dims.lead_n[i] - rep.ineq1_positivity[i];
        rep.ineq1_holds[i] = rep.ineq1_positivity[i] > 0 && rep.ineq1_margin[i] >= 0;
        rep.s_le_N_e[i] = s <= dims.N_e[i];
    }

    rep.ineq2_holds = D > e_value(shape, split, s);

    rep.ineq3_slack = expected_dim(shape, s) - f_value(shape, split, s);
    rep.ineq3_holds = rep.ineq3_slack >= 1;

    rep.ineq_new_holds = s >= ceil_div(N, D + 1);

    // ineq1 forces both s <= N(e_i) and D > E
    assert(!(rep.ineq1_holds[0] && rep.ineq1_holds[1]) ||
           (rep.s_le_N_e[0] && rep.s_le_N_e[1] && rep.ineq2_holds));
    return rep;
}

std::optional<Certificate> certify(const Shape& shape, const Splitting& split, i64 s,
                                   std::string provenance) {
    ConditionReport rep = check_conditions(shape, split, s);
    if (!rep.core_holds()) return std::nullopt;
    if (rep.ineq_new_holds && !rep.ineq3_holds) {
        // the surplus identity makes this impossible
        throw std::logic_error("certify: surplus path fired without ineq3");
    }
    if (!rep.ineq3_holds) return std::nullopt;

    Certificate cert{shape,
                     split,
                     s,
                     f_value(shape, split, s),
                     expected_dim(shape, s),
                     rep.ineq3_slack,
                     rep,
                     std::move(provenance),
                     rep.ineq_new_holds ? "ineq_new" : "ineq3"};
    assert(cert.defect_lb >= 1);
    return cert;
}

Int superabundant_gap(const Shape& shape, const Splitting& split, i64 s) {
    const Int gap = dim_space(shape) - 1 - f_value(shape, split, s);
    const SplitDims dims = split_dims(shape, split);
    if (gap != (dims.N_e[0] - s) * (dims.N_e[1] - s)) {
        throw std::logic_error("superabundant_gap: identity violated");
    }
    return gap;
}

Int three_factor_gap(const Shape& shape, const Splitting& split, i64 s) {
    if (shape.factors() != 3 || shape.n[2] != 1 || shape.n[1] < shape.n[0]) {
        throw ShapeMismatchError("three_factor_gap: shape must be (n, n+a, 1)");
    }
    if (shape.d[0] != 1 || shape.d[1] != 1 || shape.d[2] < 2) {
        throw ShapeMismatchError("three_factor_gap: multi-degree must be (1, 1, d) with d >= 2");
    }
    if (split.e0[0] != 1 || split.e0[1] != 0) {
        throw ShapeMismatchError("three_factor_gap: splitting must be e0 = (1,0,d-e), e1 = (0,1,e)");
    }
    const SplitDims dims = split_dims(shape, split);
    const Int gap = Int(s) * (dim_sum(shape) + 1) - 1 - f_value(shape, split, s);
    const Int rhs = (s - dims.N_e[0] + dims.support_n[0]) * (s - dims.N_e[1] + dims.support_n[1]);
    if (gap != rhs) {
        throw std::logic_error("three_factor_gap: identity violated");
    }
    return gap;
}

} // namespace sv

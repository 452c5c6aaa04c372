#pragma once

#include <array>
#include <optional>
#include <string>

#include "sv/ms_tensor.hpp"
#include "sv/segre_veronese.hpp"

namespace sv {

/// Exact truth values and slacks of the defectivity condition system for one
/// candidate (shape, splitting, s).
struct ConditionReport {
    bool ineq0_holds = false;
    Int ineq0_slack = 0; // s - max_i{N(e_i) - sum_{j in support_i} n[j] + 1}

    std::array<bool, 2> ineq1_holds{false, false};
    std::array<Int, 2> ineq1_margin{};     // n[support_i[0]] - (N(e_i) - s), must be >= 0
    std::array<Int, 2> ineq1_positivity{}; // N(e_i) - s, must be > 0

    std::array<bool, 2> s_le_N_e{false, false}; // s <= N(e_i)

    bool ineq2_holds = false; // D > E

    bool ineq3_holds = false;
    Int ineq3_slack = 0; // expected - F, must be >= 1

    bool ineq_new_holds = false; // s >= ceil(N / (D+1))

    bool core_holds() const { return ineq0_holds && ineq1_holds[0] && ineq1_holds[1]; }
};

/// A certified defective case: whenever one exists, the secant variety at
/// these parameters has dimension at most F < expected.
struct Certificate {
    Shape shape;
    Splitting split;
    i64 s = 0;
    Int F = 0;
    Int expected = 0;  // min{s(D+1), N} - 1
    Int defect_lb = 0; // expected - F, a lower bound for the defect
    ConditionReport report;
    std::string provenance;    // family tag, "search", or "check"
    std::string certified_via; // "ineq3" or "ineq_new"
};

/// Dimension of the interpolating subvariety the conditions construct:
/// E = D - sum_i (N(e_i) - s). May be negative; callers check D > E.
Int e_value(const Shape& shape, const Splitting& split, i64 s);

/// Upper bound for the secant dimension:
/// F = s[D-E] + N - 1 - sum_i N(e_{i-1})[N(e_i)-s] + prod_i [N(e_i)-s].
Int f_value(const Shape& shape, const Splitting& split, i64 s);

/// min{s(D+1), N} - 1.
Int expected_dim(const Shape& shape, i64 s);

ConditionReport check_conditions(const Shape& shape, const Splitting& split, i64 s);

/// Emits a certificate iff ineq0, ineq1 and ineq3 all hold. The surplus path
/// (ineq0, ineq1, ineq_new) implies ineq3 and is recorded in certified_via.
std::optional<Certificate> certify(const Shape& shape, const Splitting& split, i64 s,
                                   std::string provenance = "check");

/// N - 1 - F. Equals [N(e0)-s][N(e1)-s] identically; verified internally.
Int superabundant_gap(const Shape& shape, const Splitting& split, i64 s);

/// s(D+1) - 1 - F for the three-factor family (n, n+a, 1), d = (1,1,dl),
/// e0 = (1,0,dl-e), e1 = (0,1,e). Equals
/// [s - N(e0) + sum_{support0} n][s - N(e1) + sum_{support1} n] identically;
/// verified internally. Throws ShapeMismatchError outside the family.
Int three_factor_gap(const Shape& shape, const Splitting& split, i64 s);

} // namespace sv

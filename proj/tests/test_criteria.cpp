#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "oracle.hpp"
#include "sv/criteria.hpp"
#include "sv/output.hpp"

using namespace sv;

namespace {

struct Tuple {
    Shape shape;
    Splitting split;
    i64 s;
};

// random valid (shape, splitting, s) with k <= 5, entries <= 8, dl <= 8
Tuple random_tuple(std::mt19937_64& gen, i64 max_s) {
    const i64 k = 3 + static_cast<i64>(gen() % 3);
    std::vector<i64> n, d;
    for (i64 i = 0; i < k; ++i) {
        n.push_back(1 + static_cast<i64>(gen() % 8));
        d.push_back(1);
    }
    d.back() = 2 + static_cast<i64>(gen() % 7);
    Shape shape(n, d);

    std::vector<i64> e0(static_cast<std::size_t>(k), 0);
    e0[0] = 1;
    e0.back() = 1 + static_cast<i64>(gen() % (d.back() - 1));
    // ensure side 1 keeps a degree-one factor, then assign the rest freely
    const std::size_t forced = 1 + gen() % (static_cast<std::size_t>(k) - 2);
    for (std::size_t j = 1; j + 1 < static_cast<std::size_t>(k); ++j) {
        if (j != forced) e0[j] = static_cast<i64>(gen() % 2);
    }
    return {shape, make_splitting(shape, e0), 1 + static_cast<i64>(gen() % max_s)};
}

const Shape kCgg({1, 1, 2}, {1, 1, 2});

} // namespace

TEST_CASE("e_value examples") {
    CHECK(e_value(kCgg, make_splitting(kCgg, {1, 0, 1}), 5) == 2);
    const Shape four({1, 1, 3, 1}, {1, 1, 1, 2});
    CHECK(e_value(four, make_splitting(four, {1, 1, 0, 1}), 7) == 4);
    // when s equals both side dimensions the deficits vanish
    const Shape sh({1, 1, 1}, {1, 1, 2});
    CHECK(e_value(sh, make_splitting(sh, {1, 0, 1}), 4) == dim_sum(sh));
}

TEST_CASE("f_value examples, cross-checked against the direct oracle") {
    const auto check_f = [](const Shape& shape, const std::vector<i64>& e0, i64 s, i64 expected) {
        const Splitting split = make_splitting(shape, e0);
        const Int f = f_value(shape, split, s);
        CHECK(f == expected);
        const std::vector<long long> n(shape.n.begin(), shape.n.end());
        const std::vector<long long> d(shape.d.begin(), shape.d.end());
        const std::vector<long long> o0(split.e0.begin(), split.e0.end());
        const std::vector<long long> o1(split.e1.begin(), split.e1.end());
        CHECK(f == oracle::f_direct(n, d, o0, o1, s));
    };
    check_f(kCgg, {1, 0, 1}, 5, 22);
    check_f(Shape({1, 1, 3, 1}, {1, 1, 1, 2}), {1, 1, 0, 1}, 7, 46);
    check_f(Shape({2, 2, 1}, {1, 1, 2}), {1, 0, 1}, 4, 22);
}

TEST_CASE("expected_dim") {
    CHECK(expected_dim(kCgg, 5) == 23);
    CHECK(expected_dim(Shape({1, 1, 3, 1}, {1, 1, 1, 2}), 7) == 47);
    CHECK(expected_dim(kCgg, 1) == dim_sum(kCgg));
    CHECK_THROWS_AS(expected_dim(kCgg, 0), std::invalid_argument);
}

TEST_CASE("condition system on the first worked example") {
    const Splitting split = make_splitting(kCgg, {1, 0, 1});
    const ConditionReport rep = check_conditions(kCgg, split, 5);
    CHECK(rep.ineq0_holds);
    CHECK(rep.ineq1_holds[0]);
    CHECK(rep.ineq1_holds[1]);
    CHECK(rep.ineq_new_holds);
    CHECK(rep.ineq2_holds);
    CHECK(rep.s_le_N_e[0]);
    CHECK(rep.s_le_N_e[1]);
}

TEST_CASE("strict positivity boundary of ineq1") {
    const Splitting split = make_splitting(kCgg, {1, 0, 1});
    const ConditionReport rep = check_conditions(kCgg, split, 6);
    CHECK(rep.ineq1_positivity[0] == 0);
    CHECK_FALSE(rep.ineq1_holds[0]);
    CHECK_FALSE(rep.ineq1_holds[1]);
}

TEST_CASE("zero ineq0 slack with matching margins") {
    const Shape shape({2, 2, 1}, {1, 1, 2});
    const Splitting split = make_splitting(shape, {1, 0, 1});
    const ConditionReport rep = check_conditions(shape, split, 4);
    CHECK(rep.ineq0_holds);
    CHECK(rep.ineq0_slack == 0);
    for (int i = 0; i < 2; ++i) {
        CHECK(rep.ineq1_holds[i]);
        CHECK(rep.ineq1_positivity[i] == 2);
        CHECK(rep.ineq1_margin[i] == 0);
    }
}

TEST_CASE("certify on the worked examples") {
    const Splitting split = make_splitting(kCgg, {1, 0, 1});
    const auto cert = certify(kCgg, split, 5);
    REQUIRE(cert.has_value());
    CHECK(cert->F == 22);
    CHECK(cert->expected == 23);
    CHECK(cert->defect_lb == 1);
    CHECK(cert->certified_via == "ineq_new");

    const Shape four({1, 1, 3, 1}, {1, 1, 1, 2});
    const auto cert4 = certify(four, make_splitting(four, {1, 1, 0, 1}), 7);
    REQUIRE(cert4.has_value());
    CHECK(cert4->F == 46);
    CHECK(cert4->expected == 47);
    CHECK(cert4->defect_lb == 1);

    CHECK_FALSE(certify(kCgg, split, 7).has_value()); // s > N(e_i)
}

TEST_CASE("superabundant gap identity on the examples") {
    CHECK(superabundant_gap(kCgg, make_splitting(kCgg, {1, 0, 1}), 5) == 1);
    const Shape sh({2, 2, 1}, {1, 1, 2});
    CHECK(superabundant_gap(sh, make_splitting(sh, {1, 0, 1}), 4) == 4);
    // s equal to one side dimension kills the product
    CHECK(superabundant_gap(kCgg, make_splitting(kCgg, {1, 0, 1}), 6) == 0);
}

TEST_CASE("superabundant gap identity on 1000 random tuples") {
    std::mt19937_64 gen(2024);
    for (int t = 0; t < 1000; ++t) {
        const Tuple tup = random_tuple(gen, 200);
        const Int gap = superabundant_gap(tup.shape, tup.split, tup.s); // throws if violated
        const Int a = dim_space(tup.shape.n, tup.split.e0) - tup.s;
        const Int b = dim_space(tup.shape.n, tup.split.e1) - tup.s;
        CHECK(gap == a * b);
    }
}

TEST_CASE("ineq1 implies the dependent conditions on random tuples") {
    std::mt19937_64 gen(77);
    int seen = 0;
    for (int t = 0; t < 3000; ++t) {
        const Tuple tup = random_tuple(gen, 40);
        const ConditionReport rep = check_conditions(tup.shape, tup.split, tup.s);
        if (rep.ineq1_holds[0] && rep.ineq1_holds[1]) {
            ++seen;
            CHECK(rep.s_le_N_e[0]);
            CHECK(rep.s_le_N_e[1]);
            CHECK(rep.ineq2_holds);
        }
    }
    CHECK(seen > 0); // the sample must actually exercise the implication
}

TEST_CASE("certificates always carry positive defect bound") {
    // ineq1 confines s to a window just below min N(e_i); aim there
    std::mt19937_64 gen(31337);
    int certified = 0;
    for (int t = 0; t < 3000; ++t) {
        Tuple tup = random_tuple(gen, 60);
        Int cap = dim_space(tup.shape.n, tup.split.e0);
        const Int cap1 = dim_space(tup.shape.n, tup.split.e1);
        if (cap1 < cap) cap = cap1;
        if (cap > 20'000) continue;
        const i64 hi = to_i64(cap) - 1;
        if (hi < 1) continue;
        tup.s = std::max<i64>(1, hi - static_cast<i64>(gen() % 8));
        const auto cert = certify(tup.shape, tup.split, tup.s, "search");
        if (!cert) continue;
        ++certified;
        CHECK(cert->defect_lb >= 1);
        CHECK(cert->F < cert->expected);
        CHECK(cert->report.core_holds());
    }
    CHECK(certified > 0);
}

TEST_CASE("three-factor gap identity, worked instances") {
    const Shape smallest({1, 1, 1}, {1, 1, 2});
    CHECK(three_factor_gap(smallest, make_splitting(smallest, {1, 0, 1}), 3) == 1);

    const Shape sh({2, 2, 1}, {1, 1, 2});
    CHECK(three_factor_gap(sh, make_splitting(sh, {1, 0, 1}), 4) == 1);

    const Shape wide({3, 5, 1}, {1, 1, 4});
    const Splitting split = make_splitting(wide, {1, 0, 2});
    for (i64 s = 1; s <= 30; ++s) {
        const Int gap = three_factor_gap(wide, split, s); // identity asserted inside
        const Int a = s - dim_space(wide.n, split.e0) + 3 + 1;
        const Int b = s - dim_space(wide.n, split.e1) + 5 + 1;
        CHECK(gap == a * b);
    }
}

TEST_CASE("three-factor gap identity on 500 random family tuples") {
    std::mt19937_64 gen(555);
    for (int t = 0; t < 500; ++t) {
        const i64 n = 1 + static_cast<i64>(gen() % 8);
        const i64 a = static_cast<i64>(gen() % 9);
        const i64 dl = 2 + static_cast<i64>(gen() % 7);
        const i64 e = 1 + static_cast<i64>(gen() % (dl - 1));
        const i64 s = 1 + static_cast<i64>(gen() % 200);
        const Shape shape({n, n + a, 1}, {1, 1, dl});
        CHECK_NOTHROW(three_factor_gap(shape, make_splitting(shape, {1, 0, dl - e}), s));
    }
}

TEST_CASE("three-factor family: core conditions alone force a certificate") {
    // within the family, ineq3 follows from ineq0 and ineq1 automatically
    for (i64 n = 1; n <= 5; ++n) {
        for (i64 a = 0; a <= 4; ++a) {
            for (i64 dl = 2; dl <= 5; ++dl) {
                for (i64 e = 1; e <= dl - 1; ++e) {
                    const Shape shape({n, n + a, 1}, {1, 1, dl});
                    const Splitting split = make_splitting(shape, {1, 0, dl - e});
                    const i64 s_hi = to_i64(dim_space(shape.n, split.e1)) + 2;
                    for (i64 s = 1; s <= s_hi; ++s) {
                        const ConditionReport rep = check_conditions(shape, split, s);
                        if (rep.core_holds()) {
                            CHECK(certify(shape, split, s).has_value());
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("three-factor gap rejects off-family input") {
    CHECK_THROWS_AS(three_factor_gap(Shape({1, 1, 2}, {1, 1, 2}),
                                     make_splitting(Shape({1, 1, 2}, {1, 1, 2}), {1, 0, 1}), 5),
                    ShapeMismatchError); // last factor dimension != 1
    const Shape four({1, 1, 3, 1}, {1, 1, 1, 2});
    CHECK_THROWS_AS(three_factor_gap(four, make_splitting(four, {1, 1, 0, 1}), 7),
                    ShapeMismatchError); // four factors
    const Shape swapped({2, 1, 1}, {1, 1, 2});
    CHECK_THROWS_AS(three_factor_gap(swapped, make_splitting(swapped, {1, 0, 1}), 4),
                    ShapeMismatchError); // n[1] < n[0]
    const Shape ok({1, 1, 1}, {1, 1, 2});
    CHECK_THROWS_AS(three_factor_gap(ok, make_splitting(ok, {0, 1, 1}), 3),
                    ShapeMismatchError); // splitting not (1,0,*)
}

TEST_CASE("certificate JSON schema and round trip") {
    const auto cert = certify(kCgg, make_splitting(kCgg, {1, 0, 1}), 5, "check");
    REQUIRE(cert.has_value());
    const Json j = certificate_json(*cert);

    const std::vector<std::string> keys = {"n",        "d",         "e0",         "e1", "s",
                                           "F",        "expected",  "defect_lb",  "conditions",
                                           "provenance"};
    std::size_t idx = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++idx) {
        REQUIRE(idx < keys.size());
        CHECK(it.key() == keys[idx]);
    }
    CHECK(idx == keys.size());

    // integers survive a serialization round trip exactly
    const Json back = Json::parse(j.dump());
    CHECK(back["F"].get<i64>() == 22);
    CHECK(back["expected"].get<i64>() == 23);
    CHECK(back["defect_lb"].get<i64>() == 1);
    CHECK(back["n"].get<std::vector<i64>>() == std::vector<i64>{1, 1, 2});
    CHECK(back["conditions"]["ineq3_slack"].get<i64>() == 1);
    CHECK_FALSE(back["F"].is_number_float());
}

TEST_CASE("json emission refuses values beyond the integer cap") {
    // a huge member of the first worked family: exact formulas, F > 2^48
    const i64 a = 20'000'000;
    const Shape big({1, 1, a}, {1, 1, 2});
    const auto cert = certify(big, make_splitting(big, {1, 0, 1}), 2 * a + 1);
    REQUIRE(cert.has_value());
    CHECK(cert->F == Int(2) * (a + 1) * (a + 2) - 2);
    CHECK(cert->F > kDefaultIntCap);
    CHECK_THROWS_AS(certificate_json(*cert), CapacityError);
}

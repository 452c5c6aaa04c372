#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <thread>

#include "oracle.hpp"
#include "sv/gf.hpp"

using namespace sv;

namespace {

GfMatrix random_matrix(std::mt19937_64& gen, Eigen::Index rows, Eigen::Index cols,
                       std::uint32_t p) {
    GfMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = static_cast<GfScalar>(gen() % p);
    }
    return m;
}

} // namespace

TEST_CASE("field validation") {
    CHECK_NOTHROW(validate(FieldSpec{}));
    CHECK_NOTHROW(validate(FieldSpec{10007}));
    CHECK_NOTHROW(validate(FieldSpec{1000003}));
    CHECK_THROWS_AS(validate(FieldSpec{10006}), std::invalid_argument); // below floor
    CHECK_THROWS_AS(validate(FieldSpec{10009 * 3}), std::invalid_argument); // composite
}

TEST_CASE("is_prime") {
    CHECK(is_prime(2));
    CHECK(is_prime(10007));
    CHECK(is_prime(2147483647));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(2147483647ull * 2));
}

TEST_CASE("rank of simple matrices") {
    const FieldSpec f{};
    CHECK(rank(GfMatrix::Identity(3, 3), f) == 3);
    CHECK(rank(GfMatrix::Zero(4, 6), f) == 0);
    CHECK(kernel_dim(GfMatrix::Identity(3, 3), f) == 0);
    CHECK(kernel_dim(GfMatrix::Zero(2, 5), f) == 5);
}

TEST_CASE("rank of an outer product is one") {
    const FieldSpec f{};
    std::mt19937_64 gen(7);
    GfVector u(4), v(4);
    for (int i = 0; i < 4; ++i) {
        u[i] = static_cast<GfScalar>(gen() % f.p);
        v[i] = static_cast<GfScalar>(gen() % f.p);
    }
    u[0] = 1;
    v[0] = 1;
    GfMatrix m(4, 4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            m(i, j) = static_cast<GfScalar>(std::uint64_t(u[i]) * v[j] % f.p);
        }
    }
    CHECK(rank(m, f) == 1);
    CHECK(kernel_dim(m, f) == 3);
}

TEST_CASE("rank respects the modulus") {
    // the all-p matrix is zero mod p
    const FieldSpec f{10007};
    GfMatrix m = GfMatrix::Zero(2, 2);
    CHECK(rank(m, f) == 0);
    m(0, 0) = 10006;
    m(1, 1) = 10006;
    CHECK(rank(m, f) == 2);
}

TEST_CASE("rank of transpose agrees on random matrices") {
    const FieldSpec f{};
    std::mt19937_64 gen(12345);
    for (int t = 0; t < 200; ++t) {
        const auto rows = static_cast<Eigen::Index>(1 + gen() % 40);
        const auto cols = static_cast<Eigen::Index>(1 + gen() % 40);
        GfMatrix m = random_matrix(gen, rows, cols, f.p);
        // plant some rank deficiency half the time
        if (t % 2 == 0 && rows > 2) m.row(rows - 1) = m.row(0);
        const Eigen::Index r = rank(m, f);
        CHECK(r <= std::min(rows, cols));
        CHECK(rank(GfMatrix(m.transpose()), f) == r);
    }
}

TEST_CASE("rank invariant under permutation and nonzero scaling") {
    const FieldSpec f{};
    std::mt19937_64 gen(99);
    for (int t = 0; t < 50; ++t) {
        const auto rows = static_cast<Eigen::Index>(2 + gen() % 20);
        const auto cols = static_cast<Eigen::Index>(2 + gen() % 20);
        GfMatrix m = random_matrix(gen, rows, cols, f.p);
        const Eigen::Index r = rank(m, f);

        GfMatrix shuffled = m;
        shuffled.row(0).swap(shuffled.row(rows - 1));
        shuffled.col(0).swap(shuffled.col(cols - 1));
        const std::uint64_t scale = 1 + gen() % (f.p - 1);
        for (Eigen::Index j = 0; j < cols; ++j) {
            shuffled(0, j) = static_cast<GfScalar>(shuffled(0, j) * scale % f.p);
        }
        CHECK(rank(shuffled, f) == r);
    }
}

TEST_CASE("rank agrees with the independent oracle, boundary-heavy entries") {
    // exercises the fast reduction path at the default prime and the generic
    // path at another, with entries clustered near the modulus
    std::mt19937_64 gen(2718);
    for (const std::uint32_t p : {2147483647u, 1000003u}) {
        const FieldSpec f{p};
        for (int t = 0; t < 50; ++t) {
            const auto rows = static_cast<Eigen::Index>(1 + gen() % 25);
            const auto cols = static_cast<Eigen::Index>(1 + gen() % 25);
            GfMatrix m(rows, cols);
            std::vector<std::vector<std::uint64_t>> raw(static_cast<std::size_t>(rows));
            for (Eigen::Index i = 0; i < rows; ++i) {
                for (Eigen::Index j = 0; j < cols; ++j) {
                    std::uint32_t v;
                    switch (gen() % 4) {
                        case 0: v = 0; break;
                        case 1: v = p - 1; break;
                        case 2: v = p - 1 - static_cast<std::uint32_t>(gen() % 5); break;
                        default: v = static_cast<std::uint32_t>(gen() % p);
                    }
                    m(i, j) = v;
                    raw[static_cast<std::size_t>(i)].push_back(v);
                }
            }
            CHECK(rank(m, f) == static_cast<Eigen::Index>(oracle::rank_mod(raw, p)));
        }
    }
}

TEST_CASE("elimination is deterministic and does not mutate the input") {
    const FieldSpec f{};
    std::mt19937_64 gen(5);
    GfMatrix m = random_matrix(gen, 17, 23, f.p);
    const GfMatrix copy = m;
    const Eigen::Index r1 = rank(m, f);
    const Eigen::Index r2 = rank(m, f);
    CHECK(r1 == r2);
    CHECK(m == copy);
}

TEST_CASE("concurrent rank computations on distinct matrices agree with serial ones") {
    const FieldSpec f{};
    std::mt19937_64 gen(404);
    std::vector<GfMatrix> mats;
    for (int i = 0; i < 8; ++i) mats.push_back(random_matrix(gen, 30, 37, f.p));

    std::vector<Eigen::Index> serial, parallel(mats.size());
    for (const GfMatrix& m : mats) serial.push_back(rank(m, f));

    std::vector<std::thread> workers;
    for (std::size_t i = 0; i < mats.size(); ++i) {
        workers.emplace_back([&, i] { parallel[i] = rank(mats[i], f); });
    }
    for (std::thread& t : workers) t.join();
    CHECK(parallel == serial);
}

#include "sv/gf.hpp"

namespace sv {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t f = 3; f * f <= n; f += 2) {
        if (n % f == 0) return false;
    }
    return true;
}

void validate(const FieldSpec& field) {
    if (field.p < 10007) {
        throw std::invalid_argument("field: prime must be >= 10007");
    }
    if (field.p > kMaxPrime) {
        throw std::invalid_argument("field: prime must be <= 2147483647");
    }
    if (!is_prime(field.p)) {
        throw std::invalid_argument("field: " + std::to_string(field.p) + " is not prime");
    }
}

namespace {

struct GenericReduce {
    std::uint64_t p;
    std::uint64_t operator()(std::uint64_t x) const { return x % p; }
};

// p = 2^31 - 1: fold the high bits twice, one conditional subtract
struct MersenneReduce {
    static constexpr std::uint64_t M = 2147483647ull;
    std::uint64_t operator()(std::uint64_t x) const { // x < 2^62
        x = (x & M) + (x >> 31);
        x = (x & M) + (x >> 31);
        return x >= M ? x - M : x;
    }
};

template <typename Reduce>
Eigen::Index eliminate(GfMatrix& m, std::uint64_t p, Reduce reduce) {
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = r; i < rows; ++i) {
            if (m(i, c) != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != r) m.row(piv).swap(m.row(r));

        GfScalar* pr = m.data() + r * cols;
        const std::uint64_t inv = mod_inverse(pr[c], static_cast<std::uint32_t>(p));
        for (Eigen::Index t = c; t < cols; ++t) {
            pr[t] = static_cast<GfScalar>(reduce(pr[t] * inv));
        }
        for (Eigen::Index i = r + 1; i < rows; ++i) {
            GfScalar* pi = m.data() + i * cols;
            const std::uint64_t head = pi[c];
            if (head == 0) continue;
            const std::uint64_t neg = p - head;
            for (Eigen::Index t = c; t < cols; ++t) {
                // pi[t] + neg*pr[t] < p + p^2 < 2^62 for p <= 2^31-1
                pi[t] = static_cast<GfScalar>(reduce(pi[t] + neg * pr[t]));
            }
        }
        ++r;
    }
    return r;
}

} // namespace

Eigen::Index rank(GfMatrix m, const FieldSpec& field) {
    if (field.p == MersenneReduce::M) {
        return eliminate(m, field.p, MersenneReduce{});
    }
    return eliminate(m, field.p, GenericReduce{field.p});
}

} // namespace sv

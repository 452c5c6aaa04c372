#include "sv/search.hpp"

#include <map>
#include <tuple>

namespace sv {

void validate(const SearchBounds& bounds) {
    if (bounds.max_factors < 2) {
        throw std::invalid_argument("search bounds: max_factors must be >= 2");
    }
    if (bounds.max_n < 1 || bounds.max_last_degree < 1 || bounds.max_s < 1) {
        throw std::invalid_argument("search bounds: all bounds must be >= 1");
    }
    if (bounds.max_dim && *bounds.max_dim < 1) {
        throw std::invalid_argument("search bounds: max_dim must be >= 1");
    }
}

namespace {

using CaseKey = std::tuple<i64, std::vector<i64>, i64, i64>; // (k, n, dl, s)

void emit_nondecreasing(i64 len, i64 max_n, std::vector<i64>& cur,
                        std::vector<std::vector<i64>>& out) {
    if (static_cast<i64>(cur.size()) == len) {
        out.push_back(cur);
        return;
    }
    const i64 lo = cur.empty() ? 1 : cur.back();
    for (i64 v = lo; v <= max_n; ++v) {
        cur.push_back(v);
        emit_nondecreasing(len, max_n, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Certificate> enumerate_defective(const SearchBounds& bounds) {
    validate(bounds);
    std::map<CaseKey, Certificate> best;

    for (i64 k = 2; k <= bounds.max_factors; ++k) {
        std::vector<std::vector<i64>> deg1_dims;
        std::vector<i64> cur;
        emit_nondecreasing(k - 1, bounds.max_n, cur, deg1_dims);

        for (const auto& dims : deg1_dims) {
            for (i64 last_n = 1; last_n <= bounds.max_n; ++last_n) {
                std::vector<i64> n = dims;
                n.push_back(last_n);
                for (i64 dl = 2; dl <= bounds.max_last_degree; ++dl) {
                    std::vector<i64> d(static_cast<std::size_t>(k), 1);
                    d.back() = dl;
                    Shape shape(n, d);
                    if (bounds.max_dim && dim_space(shape) > *bounds.max_dim) continue;

                    // Partitions of the degree-one factors into the two
                    // supports. Factor 0 always goes to side 0: swapping the
                    // sides is a symmetry of the conditions, so this loses
                    // nothing once the last degree runs over [1, dl-1].
                    const i64 masks = i64{1} << (k - 2);
                    for (i64 mask = 1; mask < masks; ++mask) {
                        for (i64 t = 1; t <= dl - 1; ++t) {
                            std::vector<i64> e0(static_cast<std::size_t>(k), 0);
                            e0[0] = 1;
                            for (i64 j = 1; j <= k - 2; ++j) {
                                if (!((mask >> (j - 1)) & 1)) e0[static_cast<std::size_t>(j)] = 1;
                            }
                            e0.back() = t;
                            Splitting split = make_splitting(shape, e0);

                            // s <= N(e_i) - 1 is forced by the positivity half
                            // of the conditions; prune the loop there.
                            Int s_cap = dim_space(shape.n, split.e0);
                            const Int cap1 = dim_space(shape.n, split.e1);
                            if (cap1 < s_cap) s_cap = cap1;
                            s_cap -= 1;
                            i64 s_hi = bounds.max_s;
                            if (s_cap < s_hi) s_hi = to_i64(s_cap);

                            for (i64 s = 1; s <= s_hi; ++s) {
                                auto cert = certify(shape, split, s, "search");
                                if (!cert) continue;
                                CaseKey key{k, n, dl, s};
                                auto it = best.find(key);
                                if (it == best.end()) {
                                    best.emplace(std::move(key), std::move(*cert));
                                } else if (cert->defect_lb > it->second.defect_lb) {
                                    it->second = std::move(*cert);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    std::vector<Certificate> out;
    out.reserve(best.size());
    for (auto& [key, cert] : best) out.push_back(std::move(cert));
    return out;
}

std::vector<CrossCheck> cross_verify(const std::vector<Certificate>& certs, const FieldSpec& field,
                                     int trials, std::uint64_t seed, i64 max_cells) {
    std::vector<CrossCheck> out;
    out.reserve(certs.size());
    for (const Certificate& cert : certs) {
        CrossCheck cc{cert, std::nullopt, false, false, {}};
        try {
            const i64 r = terracini_rank(cert.shape, cert.s, field, trials, seed, max_cells);
            cc.rank = r;
            cc.consistent = Int(r) <= cert.F + 1;
            cc.rank_deficit = Int(r) < cert.expected + 1;
        } catch (const CapacityError& e) {
            cc.error = e.what();
        }
        out.push_back(std::move(cc));
    }
    return out;
}

} // namespace sv

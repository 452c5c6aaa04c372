#include "sv/exact.hpp"

namespace sv {

i64 to_i64(const Int& v, i64 cap) {
    if (v > cap || v < -cap) {
        throw CapacityError("integer value " + v.str() + " exceeds the configured cap " +
                            std::to_string(cap));
    }
    return static_cast<i64>(v);
}

Int binomial(i64 n, i64 k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (i64 i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact at every step
    }
    return r;
}

Int ceil_div(const Int& a, const Int& b) {
    return (a + b - 1) / b;
}

i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace sv

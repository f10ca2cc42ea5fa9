#include "montdiv/radix_power.hpp"

#include <algorithm>
#include <cstdlib>

namespace montdiv {

PoweringBitmap build_bitmap(u64 n) {
    if (n < 4) throw std::invalid_argument("build_bitmap: n must be >= 4");
    if (n >= (u64(1) << 32)) throw std::invalid_argument("build_bitmap: n must be below 2^32");
    PoweringBitmap bm;
    u64 p = n;
    while (p > 5) {
        if ((p & 1) == 0) bm.bits |= u32(1) << bm.count;
        p = p / 2 + 1;
        ++bm.count;
    }
    bm.p_final = unsigned(p);
    return bm;
}

namespace detail {

u64 reduce_square_mod(u64 x, u64 q) {
    return u64((u128(x) * x) % q);
}

// 256-bit square of x < 2^128, reduced mod q by shifting the low half into
// the running remainder bit by bit. Runs once per context; cost immaterial.
u128 reduce_square_mod(u128 x, u128 q) {
    const WidePair<u128> s = usqr_lohi(x);
    u128 r = s.hi % q;
    for (int i = 127; i >= 0; --i) {
        const bool top = (r >> 127) != 0;
        r = (r << 1) | ((s.lo >> i) & 1);
        if (top || r >= q) r -= q;
    }
    return r;
}

} // namespace detail

u64 r2_mod_q(const MontCtx<u64>& ctx) {
    const u64 r_mod_q = (u64(0) - ctx.q) % ctx.q;
    return detail::reduce_square_mod(r_mod_q, ctx.q);
}

u128 r2_mod_q(const MontCtx<u128>& ctx) {
    const u128 r_mod_q = (u128(0) - ctx.q) % ctx.q;
    return detail::reduce_square_mod(r_mod_q, ctx.q);
}

Variant choose_variant(u64 n) {
    if (n <= 3) return Variant::UseB;
    const unsigned cost_a = unsigned(popcount(build_bitmap(n + 1).bits)) + 1;
    const unsigned cost_b = unsigned(popcount(build_bitmap(n).bits));
    return cost_a < cost_b ? Variant::UseA : Variant::UseB;
}

CensusResult bitmap_census(u64 n_min, u64 n_max) {
    if (n_min < 6 || n_min >= n_max)
        throw std::invalid_argument("bitmap_census: require 6 <= n_min < n_max");
    CensusResult res;
    int prev = popcount(build_bitmap(n_min).bits);
    for (u64 n = n_min; n <= n_max; ++n) {
        const int cur = popcount(build_bitmap(n + 1).bits);
        const unsigned diff = unsigned(std::abs(cur - prev));
        res.sum += diff;
        res.count += 1;
        res.max_diff = std::max(res.max_diff, diff);
        prev = cur;
    }
    return res;
}

} // namespace montdiv

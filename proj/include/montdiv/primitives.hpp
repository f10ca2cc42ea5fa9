#ifndef MONTDIV_PRIMITIVES_HPP
#define MONTDIV_PRIMITIVES_HPP

/* Width-parametric multiply primitives and the three Montgomery kernels
   (general product, square, multiply-by-unity) for W in {u64, u128}.
   All arithmetic is two's-complement modulo R = 2^bits(W). */

#include "montdiv/uint128.hpp"

namespace montdiv {

/* Odd modulus q >= 3 together with qinv satisfying q*qinv == 1 (mod R).
   Immutable after construction; freely shareable across threads. */
template <class W>
struct MontCtx {
    W q;
    W qinv;
};

template <class W>
struct WidePair {
    W lo;
    W hi;
};

// Full double-width product: lo + R*hi == x*y exactly.
inline WidePair<u64> umul_lohi(u64 x, u64 y) {
    const u128 p = u128(x) * y;
    return {lo64(p), hi64(p)};
}

// 128x128 -> 256, assembled from four 64-bit partial products.
inline WidePair<u128> umul_lohi(u128 x, u128 y) {
    const u64 x0 = lo64(x), x1 = hi64(x);
    const u64 y0 = lo64(y), y1 = hi64(y);

    const u128 p00 = u128(x0) * y0;
    const u128 p01 = u128(x0) * y1;
    const u128 p10 = u128(x1) * y0;
    const u128 p11 = u128(x1) * y1;

    u128 mid = p01 + p10;
    const u128 mid_ovf = u128(mid < p01) << 64; // carry out of the cross sum

    u128 lo = p00 + (mid << 64);
    const u128 lo_ovf = u128(lo < p00);

    const u128 hi = p11 + (mid >> 64) + mid_ovf + lo_ovf;
    return {lo, hi};
}

// Double-width square; saves one 64-bit multiply versus umul_lohi(x, x).
inline WidePair<u128> usqr_lohi(u128 x) {
    const u64 x0 = lo64(x), x1 = hi64(x);

    const u128 p00 = u128(x0) * x0;
    const u128 p11 = u128(x1) * x1;
    const u128 cross = u128(x0) * x1;

    u128 mid = cross + cross;
    const u128 mid_ovf = u128(mid < cross) << 64;

    u128 lo = p00 + (mid << 64);
    const u128 lo_ovf = u128(lo < p00);

    const u128 hi = p11 + (mid >> 64) + mid_ovf + lo_ovf;
    return {lo, hi};
}

// Lower-half product x*y (mod R).
template <class W>
inline W mull(W x, W y) { return x * y; }

// Upper-half product floor(x*y / R).
inline u64 umulh(u64 x, u64 y) { return hi64(u128(x) * y); }
inline u128 umulh(u128 x, u128 y) { return umul_lohi(x, y).hi; }

/* Montgomery product x*y/R (mod q), result in [0, q).
   Contract: at most one input may exceed q (anything < R is fine there,
   which the remainder loops rely on); the other must be < q. */
template <class W>
inline W mont_mul(W x, W y, const MontCtx<W>& m) {
    const WidePair<W> p = umul_lohi(x, y);
    W lo = mull(m.qinv, p.lo);
    lo = umulh(m.q, lo);
    return (p.hi < lo) ? p.hi - lo + m.q : p.hi - lo;
}

// Montgomery square x^2/R (mod q); x < q.
inline u64 mont_sqr(u64 x, const MontCtx<u64>& m) { return mont_mul(x, x, m); }

inline u128 mont_sqr(u128 x, const MontCtx<u128>& m) {
    const WidePair<u128> p = usqr_lohi(x);
    u128 lo = mull(m.qinv, p.lo);
    lo = umulh(m.q, lo);
    return (p.hi < lo) ? p.hi - lo + m.q : p.hi - lo;
}

/* Downshift multiply x/R (mod q) for x < q; no double-width product.
   q*mull(qinv,x) has low half exactly x, so the negated high half is
   the Montgomery product with unity. */
template <class W>
inline W mmul_one(W x, const MontCtx<W>& m) {
    W lo = mull(m.qinv, x);
    lo = umulh(m.q, lo);
    return lo ? m.q - lo : lo;
}

// (x + y) mod q for x, y < q; the b-bit sum may wrap, detected via t < x.
template <class W>
inline W mod_add(W x, W y, W q) {
    const W t = x + y;
    return (t < x || t >= q) ? t - q : t;
}

// (x - y) mod q for x, y < q.
template <class W>
inline W mod_sub(W x, W y, W q) {
    return (x >= y) ? x - y : x - y + q;
}

// (-x) mod q for x < q.
template <class W>
inline W mod_neg(W x, W q) {
    return x ? q - x : x;
}

} // namespace montdiv

#endif

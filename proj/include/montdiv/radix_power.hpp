#ifndef MONTDIV_RADIX_POWER_HPP
#define MONTDIV_RADIX_POWER_HPP

/* R^n (mod q) in O(lg n) Montgomery operations. A preprocessing loop halves
   the target power down to 4 or 5, recording per-step parity in a bitmap;
   the powering loop then replays the bitmap in reverse, squaring for a clear
   bit (power 2p-1) and squaring-plus-downshift for a set bit (power 2p-2). */

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "montdiv/primitives.hpp"

namespace montdiv {

struct PoweringBitmap {
    u32 bits = 0;         // bit j set when the power was even at step j
    unsigned count = 0;   // number of meaningful bits
    unsigned p_final = 0; // loop-exit power, 4 or 5
};

// Halving schedule for n >= 4. The 32-bit container caps n below 2^32.
PoweringBitmap build_bitmap(u64 n);

// R^2 (mod q), integer-only: R mod q = (0 - q) % q, then one double-width
// schoolbook square-and-reduce.
u64 r2_mod_q(const MontCtx<u64>& ctx);
u128 r2_mod_q(const MontCtx<u128>& ctx);

enum class RadixOp {
    Sqr,    // MONT_SQR: power p -> 2p-1
    SqrOne, // MONT_SQR then MMUL_ONE: power p -> 2p-2
    Mul,    // MONT_MUL joining powers 2 and 3 -> 4 (p_final == 4 only)
};

struct RadixStep {
    RadixOp op;
    u64 power; // radix power after the step
};

template <class W>
W radix_power(u64 n, const MontCtx<W>& ctx, std::vector<RadixStep>* trace = nullptr,
              unsigned* modmul_count = nullptr);

enum class Variant { UseA, UseB };

/* Cost model for picking the remainder loop: Algorithm A needs power n+1
   and one extra loop iteration, B needs power n. Set bits cost one
   MMUL_ONE each; ties go to B. */
Variant choose_variant(u64 n);

struct CensusResult {
    u64 sum = 0;   // accumulated |popcount(bm(n+1)) - popcount(bm(n))|
    u64 count = 0; // number of (n, n+1) pairs
    unsigned max_diff = 0;
    double mean() const { return count ? double(sum) / double(count) : 0.0; }
};

// Set-bit statistics over n in [n_min, n_max], both endpoints included.
CensusResult bitmap_census(u64 n_min, u64 n_max);

// --- implementation ---

namespace detail {
u64 reduce_square_mod(u64 x, u64 q);
u128 reduce_square_mod(u128 x, u128 q);
} // namespace detail

template <class W>
W radix_power(u64 n, const MontCtx<W>& ctx, std::vector<RadixStep>* trace,
              unsigned* modmul_count) {
    unsigned ops = 0;
    auto note = [&](RadixOp op, u64 power, unsigned cost) {
        ops += cost;
        if (trace) trace->push_back({op, power});
    };

    W result;
    if (n == 0) {
        result = W(1);
    } else if (n == 1) {
        result = (W(0) - ctx.q) % ctx.q; // R mod q
    } else if (n == 2) {
        result = r2_mod_q(ctx);
    } else {
        const W r2 = r2_mod_q(ctx);
        const W r3 = mont_sqr(r2, ctx);
        note(RadixOp::Sqr, 3, 1);
        if (n == 3) {
            result = r3;
        } else {
            const PoweringBitmap bm = build_bitmap(n);
            W pow;
            if (bm.p_final == 4) {
                pow = mont_mul(r2, r3, ctx);
                note(RadixOp::Mul, 4, 1);
            } else {
                pow = mont_sqr(r3, ctx);
                note(RadixOp::Sqr, 5, 1);
            }
            u64 p = bm.p_final;
            for (unsigned i = bm.count; i-- > 0;) {
                if ((bm.bits >> i) & 1u) {
                    pow = mmul_one(mont_sqr(pow, ctx), ctx);
                    p = 2 * p - 2;
                    note(RadixOp::SqrOne, p, 2);
                } else {
                    pow = mont_sqr(pow, ctx);
                    p = 2 * p - 1;
                    note(RadixOp::Sqr, p, 1);
                }
            }
            result = pow;
        }
    }
    if (modmul_count) *modmul_count = ops;
    return result;
}

} // namespace montdiv

#endif

#ifndef MONTDIV_POW2_MOD_HPP
#define MONTDIV_POW2_MOD_HPP

/* 2^-p (mod q) with no radix scalings: because the Montgomery square feeds
   an inverse power of R = 2^b into a power-of-2 residue, squaring along the
   bits of the complement of p' = p + b lands exactly on 2^-(p+1), and one
   final mod-doubling finishes the job. The conventional positive ladder is
   kept alongside for comparison; both drive the Mersenne/Fermat factor
   checks. */

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "montdiv/biguint.hpp"
#include "montdiv/primitives.hpp"

namespace montdiv {

// Montgomery-operation tally. The integer bootstrap that furnishes
// R^2 (mod q) is charged one op so counts stay comparable across ladders.
struct PowStats {
    unsigned bootstrap = 0;
    unsigned mont_mul = 0;
    unsigned mont_sqr = 0;
    unsigned mmul_one = 0;
    unsigned total() const { return bootstrap + mont_mul + mont_sqr + mmul_one; }
};

// One powering-loop iteration: which exponent bit was consumed and whether
// a mod-doubling followed the squaring.
struct Pow2Step {
    int bit_index;
    bool doubled;
};

/* Precomputed schedule for the inverse ladder: the shifted exponent
   p' = p + b, the index range of its leading chunk, and the seed 2^e with
   e = b - chunk - 1. The chunk is the longest leading bitfield of p'
   with value < b, so e lands in [0, b-2]. */
template <class W>
struct Pow2Plan {
    W pshift;       // p + b
    int i1;         // index of the leftmost set bit of pshift
    int i0;         // lowest index such that bitfield [i1:i0] < b
    unsigned chunk; // the bitfield value
    W seed;         // 1 << (b - chunk - 1), before any mod-q reduction
};

template <class W>
Pow2Plan<W> make_pow2_plan(u64 p);

/* 2^-p (mod q), p >= 1 (p = 0 returns 1). Exponent limited to
   p <= 2^b - b - 1 so p + b cannot wrap the b-bit container. */
template <class W>
W neg_pow2_mod(u64 p, const MontCtx<W>& ctx, PowStats* stats = nullptr,
               std::vector<Pow2Step>* trace = nullptr);

// 2^p (mod q) via the standard Montgomery ladder: seed R*2^chunk, square
// over the remaining bits of p, one closing mmul_one.
template <class W>
W pos_pow2_mod(u64 p, const MontCtx<W>& ctx, PowStats* stats = nullptr,
               std::vector<Pow2Step>* trace = nullptr);

// True iff q divides 2^p - 1, i.e. 2^-p == 1 (mod q). q odd, 3 <= q < 2^128.
bool mersenne_has_factor(u64 p, const BigUint& q);

// True iff q divides 2^(2^f) + 1, i.e. 2^-(2^f) == q - 1 (mod q). f <= 63.
bool fermat_has_factor(unsigned f, const BigUint& q);

} // namespace montdiv

#endif

#ifndef MONTDIV_MOD_INVERSE_HPP
#define MONTDIV_MOD_INVERSE_HPP

/* Newton iteration for qinv = q^-1 (mod 2^64) from the XOR seed, plus the
   three-multiply bit-doubling step that lifts a 64-bit inverse to 128 bits. */

#include <array>
#include <variant>

#include "montdiv/biguint.hpp"
#include "montdiv/primitives.hpp"

namespace montdiv {

// XOR(3q, 2); guarantees at least the low 5 bits of q*seed equal 1.
u64 qinv_seed(u64 q);

// Seed plus the four iterates qinv_1..qinv_4.
std::array<u64, 5> qinv_newton64_iterates(u64 q);

// q odd; exactly 4 iterations from the seed (5*2^4 = 80 > 64 bits).
u64 qinv_newton64(u64 q);

/* High word d1 of the 128-bit inverse of q = q_hi*2^64 + q_lo, given the
   64-bit-converged low word. One Newton step collapsed to
   d1 = mull(-qinv_lo, mull(q_hi, qinv_lo) + umulh(q_lo, qinv_lo)).
   Requires q_lo*qinv_lo == 1 (mod 2^64); checked. */
u64 qinv_extend(u64 q_lo, u64 q_hi, u64 qinv_lo);

MontCtx<u64> make_ctx64(u64 q);
MontCtx<u128> make_ctx128(u128 q);

using CtxVariant = std::variant<MontCtx<u64>, MontCtx<u128>>;

// Width-64 context when q < 2^64, else width-128. Throws for even q,
// q < 3, and q >= 2^128.
CtxVariant make_ctx(const BigUint& q);

/* General divisor: trailing-zero count plus the odd part as a context.
   odd64/odd128 hold the context when the odd part is >= 3 at that width;
   an odd part of exactly 1 (power-of-two divisor) sets neither. */
struct DivisorSpec {
    unsigned tz = 0;
    bool odd_is_one = false;
    bool wide = false; // odd part needs width 128
    MontCtx<u64> odd64{};
    MontCtx<u128> odd128{};
};

// Throws for divisor < 2 or odd part >= 2^128.
DivisorSpec make_divisor_spec(const BigUint& divisor);

} // namespace montdiv

#endif

#ifndef MONTDIV_QUOTIENT_HPP
#define MONTDIV_QUOTIENT_HPP

/* Exact quotient floor(x/q) from x and the true remainder. Once r is known,
   (x - r)*qinv == floor(x/q) (mod R), and the same right-to-left carry loop
   that produced the remainder unwinds the Hensel summation one digit at a
   time: seeding the carry with r applies the loop to (x - r) without ever
   forming it. Each iteration emits one quotient digit (the low-half
   product) and one leftward carry (the high half). */

#include <cassert>
#include <span>
#include <stdexcept>
#include <vector>

#include "montdiv/biguint.hpp"
#include "montdiv/primitives.hpp"
#include "montdiv/radix_power.hpp"
#include "montdiv/remainder.hpp"

namespace montdiv {

namespace detail {

template <class W>
struct QuotCarry {
    W cy = 0;
    W bw = 0; // strictly 0 or 1
};

/* Algorithm-D chain over digits [first, last); emit(i, digit) receives the
   quotient digits. Unlike the remainder loops the subtraction here is
   literal, so a borrow propagates into the next digit instead of re-adding
   q. cy never exceeds R-2 (it is a UMULH output), hence cy + bw cannot
   wrap. */
template <class W, class Emit>
inline QuotCarry<W> quotient_loop(const DigitView<W>& x, size_t first, size_t last,
                                  const MontCtx<W>& m, QuotCarry<W> st, Emit&& emit) {
    const W q = m.q, qinv = m.qinv;
    for (size_t i = first; i < last; ++i) {
        const W xi = x.get(i);
        assert(st.cy <= W(0) - 2);
        const W sub = st.cy + st.bw;
        const W tmp = xi - sub;
        st.bw = static_cast<W>(tmp > xi);
        const W yi = mull(tmp, qinv);
        // Low half of yi*q recapitulates the opening subtraction.
        assert(mull(yi, q) == tmp);
        st.cy = umulh(yi, q);
        emit(i, yi);
    }
    return st;
}

template <class W, unsigned F>
inline QuotCarry<W> fold_quotient_chains(const DigitView<W>& x, size_t seg,
                                         const MontCtx<W>& m, const W seed[F], W* y) {
    const W q = m.q, qinv = m.qinv;
    W cy[F], bw[F];
    for (unsigned j = 0; j < F; ++j) {
        cy[j] = seed[j];
        bw[j] = 0;
    }
    for (size_t i = 0; i < seg; ++i) {
        for (unsigned j = 0; j < F; ++j) {
            const size_t k = j * seg + i;
            const W xi = x.get(k);
            const W sub = cy[j] + bw[j];
            const W tmp = xi - sub;
            bw[j] = static_cast<W>(tmp > xi);
            const W yi = mull(tmp, qinv);
            cy[j] = umulh(yi, q);
            y[k] = yi;
        }
    }
    return {cy[F - 1], bw[F - 1]};
}

BigUint from_digits(std::vector<u64>&& digits);
BigUint from_digits(const std::vector<u128>& digits);
inline BigUint from_digits(std::vector<u128>&& digits) {
    return from_digits(static_cast<const std::vector<u128>&>(digits));
}

} // namespace detail

/* floor(x/q) given the true remainder r = x mod q. The final carry is zero
   whenever r is correct; a nonzero final carry means the caller's r was
   wrong and raises instead of returning garbage. */
template <class W>
BigUint quotient(const BigUint& x, W r, const MontCtx<W>& ctx) {
    detail::DigitView<W> v(x);
    std::vector<W> y(v.count());
    const auto st = detail::quotient_loop(v, 0, v.count(), ctx, {r, W(0)},
                                          [&](size_t i, W d) { y[i] = d; });
    if (st.cy != 0)
        throw std::runtime_error("quotient: inconsistent remainder (final carry nonzero)");
    return detail::from_digits(std::move(y));
}

// In-place form; the quotient overwrites the dividend words.
template <class W>
void quotient_inplace(BigUint& x, W r, const MontCtx<W>& ctx);

/* Low m 64-bit words of floor(x/q), touching only words 0..m-1 of x. The
   result is the full quotient only when the caller knows it fits in m
   words; no final-carry check is possible or made here. */
template <class W>
BigUint quotient_low_words(const BigUint& x, W r, const MontCtx<W>& ctx, size_t m);

/* Partial remainders seeding the folded quotient chains, from the folded
   Algorithm-A carries and the segment scale P*R = R^(seg+1) (mod q):
   r_{F-1} = -cy_{F-1}*P,  r_j = (r_{j+1} - cy_j)*P.
   r_j is the true remainder of the dividend truncated below segment j's
   upper boundary; r_0 is the full remainder x mod q. */
template <class W>
std::vector<W> partial_remainder_cascade(std::span<const W> carries, const MontCtx<W>& ctx,
                                         W scale) {
    const size_t f = carries.size();
    std::vector<W> r(f);
    r[f - 1] = mont_mul(mod_neg(carries[f - 1], ctx.q), scale, ctx);
    for (size_t j = f - 1; j-- > 0;)
        r[j] = mont_mul(mod_sub(r[j + 1], carries[j], ctx.q), scale, ctx);
    return r;
}

namespace detail {

template <class W>
struct FoldedDiv {
    std::vector<W> digits; // quotient digits, padded length
    W rem;                 // r_0 from the cascade, the true remainder
};

/* Two-pass folded division: the folded remainder pass yields the carries,
   the cascade converts them into per-segment seeds (its last step already
   being the true remainder), and F interleaved Algorithm-D chains emit the
   quotient digits. Bit-exact equal to the serial quotient; the borrow
   truncated at each segment boundary is absorbed by the cascade
   construction. */
template <class W>
FoldedDiv<W> folded_div_core(const BigUint& x, const MontCtx<W>& ctx, unsigned fold) {
    detail::DigitView<W> v(x);
    const size_t np = detail::padded_digits(v.count(), fold);
    const size_t seg = np / fold;
    const std::vector<W> carries = fold_scaled_remainder(x, ctx, fold);
    const W scale = radix_power(seg + 1, ctx);
    const std::vector<W> seeds = partial_remainder_cascade<W>(carries, ctx, scale);
    FoldedDiv<W> out{std::vector<W>(np), seeds[0]};
    detail::QuotCarry<W> st;
    switch (fold) {
    case 1: st = fold_quotient_chains<W, 1>(v, seg, ctx, seeds.data(), out.digits.data()); break;
    case 2: st = fold_quotient_chains<W, 2>(v, seg, ctx, seeds.data(), out.digits.data()); break;
    case 4: st = fold_quotient_chains<W, 4>(v, seg, ctx, seeds.data(), out.digits.data()); break;
    default: throw std::invalid_argument("folded_quotient: folding factor must be 1, 2 or 4");
    }
    if (st.cy != 0)
        throw std::runtime_error("folded_quotient: inconsistent remainder (final carry nonzero)");
    return out;
}

} // namespace detail

template <class W>
BigUint folded_quotient(const BigUint& x, const MontCtx<W>& ctx, unsigned fold) {
    return detail::from_digits(std::move(detail::folded_div_core(x, ctx, fold).digits));
}

// Exact (quotient, remainder) for any divisor >= 2 whose odd part fits in
// 128 bits. Even divisors shift out the trailing zeros first; the shifted
// quotient needs no adjustment.
std::pair<BigUint, BigUint> div_rem(const BigUint& x, const BigUint& divisor,
                                    unsigned fold = 1);

} // namespace montdiv

#endif

#ifndef MONTDIV_REMAINDER_HPP
#define MONTDIV_REMAINDER_HPP

/* Right-to-left divisibility checks and scaled-remainder loops, their F-way
   loop-folded variants, and the partial-carry recombination.

   The core loop walks the dividend digits in ascending order, carrying
   cy = -R^-(i+1) * sum(a_j R^j, j<=i)  (mod q)
   so the final carry is a Hensel remainder off from the true one by a known
   radix power. Folding splits the digit range into F independent carry
   chains processed in one interleaved pass; no threads, the parallelism is
   purely instruction-level. */

#include <span>
#include <stdexcept>
#include <vector>

#include "montdiv/biguint.hpp"
#include "montdiv/primitives.hpp"
#include "montdiv/radix_power.hpp"

namespace montdiv {

/* Loop output s plus the scaling that relates it to the true remainder.
   NegScaledA: s is the negated Algorithm-A carry, r = s * R^n (mod q),
               s < q; the caller scales with power n+1 under mont_mul.
   PosScaledB: r = s * R^(n-1) (mod q); s < R but not necessarily < q,
               reduction happens in the caller's scaling mont_mul. */
enum class ScaleVariant { NegScaledA, PosScaledB };

template <class W>
struct ScaledRemainder {
    W value;
    ScaleVariant variant;
    u64 n; // digit count the scaling refers to
};

namespace detail {

// Width-b digit view over the 64-bit word vector; reads beyond the stored
// words yield zero (used for fold padding).
template <class W>
struct DigitView;

template <>
struct DigitView<u64> {
    const u64* w;
    size_t nwords;
    explicit DigitView(const BigUint& x) : w(x.words().data()), nwords(x.size()) {}
    size_t count() const { return nwords; }
    u64 get(size_t i) const { return i < nwords ? w[i] : 0; }
};

template <>
struct DigitView<u128> {
    const u64* w;
    size_t nwords;
    explicit DigitView(const BigUint& x) : w(x.words().data()), nwords(x.size()) {}
    size_t count() const { return (nwords + 1) / 2; }
    u128 get(size_t i) const {
        const size_t k = 2 * i;
        const u64 lo = k < nwords ? w[k] : 0;
        const u64 hi = k + 1 < nwords ? w[k + 1] : 0;
        return join128(lo, hi);
    }
};

struct NoObserver {
    template <class... A> void operator()(A&&...) const {}
};

// Algorithm-A carry chain over digits [first, last); obs(i, cy) per step.
template <class W, class Obs = NoObserver>
inline W carry_loop(const DigitView<W>& x, size_t first, size_t last,
                    const MontCtx<W>& m, W cy, Obs&& obs = {}) {
    const W q = m.q, qinv = m.qinv;
    for (size_t i = first; i < last; ++i) {
        const W xi = x.get(i);
        W tmp = xi - cy;
        const W bw = static_cast<W>(cy > xi);
        // A borrow means re-add q; since q*qinv == 1 (mod R) that is the
        // same as adding 1 after the low-half multiply.
        tmp = mull(tmp, qinv) + bw;
        cy = umulh(tmp, q);
        obs(i, cy);
    }
    return cy;
}

/* Algorithm-B chain: n-1 carry steps plus a multiply-free final step.
   The running digit lo = x_i - cy (+q on borrow) satisfies
   lo == R^-i * sum(a_j R^j, j<=i) (mod q), so the last digit needs no
   multiplies at all. obs(i, lo) per step. Requires count >= 2. */
template <class W, class Obs = NoObserver>
inline W residue_loop(const DigitView<W>& x, const MontCtx<W>& m, Obs&& obs = {}) {
    const W q = m.q, qinv = m.qinv;
    const size_t n = x.count();
    W cy = 0;
    for (size_t i = 0; i + 1 < n; ++i) {
        const W xi = x.get(i);
        W tmp = xi - cy;
        const W bw = static_cast<W>(cy > xi);
        obs(i, bw ? tmp + q : tmp);
        tmp = mull(tmp, qinv) + bw;
        cy = umulh(tmp, q);
    }
    const W xi = x.get(n - 1);
    const W tmp = xi - cy;
    const W lo = (cy > xi) ? tmp + q : tmp;
    obs(n - 1, lo);
    return lo;
}

// F interleaved Algorithm-A chains over contiguous segments of length seg.
template <class W, unsigned F>
inline void fold_chains(const DigitView<W>& x, size_t seg, const MontCtx<W>& m,
                        W out[F]) {
    const W q = m.q, qinv = m.qinv;
    W cy[F] = {};
    for (size_t i = 0; i < seg; ++i) {
        for (unsigned j = 0; j < F; ++j) {
            const W xi = x.get(j * seg + i);
            W tmp = xi - cy[j];
            const W bw = static_cast<W>(cy[j] > xi);
            tmp = mull(tmp, qinv) + bw;
            cy[j] = umulh(tmp, q);
        }
    }
    for (unsigned j = 0; j < F; ++j) out[j] = cy[j];
}

inline size_t padded_digits(size_t n, unsigned fold) {
    return (n + fold - 1) / fold * fold;
}

} // namespace detail

// True iff q divides x; x may be zero, any stored length.
template <class W>
bool is_div(const BigUint& x, const MontCtx<W>& ctx) {
    detail::DigitView<W> v(x);
    return detail::carry_loop(v, 0, v.count(), ctx, W(0)) == 0;
}

// is_div with the per-iteration carries captured.
template <class W>
bool is_div_trace(const BigUint& x, const MontCtx<W>& ctx, std::vector<W>& carries) {
    detail::DigitView<W> v(x);
    carries.clear();
    const W cy = detail::carry_loop(v, 0, v.count(), ctx, W(0),
                                    [&](size_t, W c) { carries.push_back(c); });
    return cy == 0;
}

// Negated Algorithm-A carry: returned s satisfies x == s * R^n (mod q).
template <class W>
ScaledRemainder<W> scaled_remainder_a(const BigUint& x, const MontCtx<W>& ctx) {
    detail::DigitView<W> v(x);
    const W cy = detail::carry_loop(v, 0, v.count(), ctx, W(0));
    return {cy ? ctx.q - cy : cy, ScaleVariant::NegScaledA, v.count()};
}

/* Algorithm-B residue: x == lo * R^(n-1) (mod q) with lo < R. The value is
   reduced below q only for the single-digit case (explicit mod); otherwise
   the caller's scaling mont_mul performs the reduction. */
template <class W>
ScaledRemainder<W> scaled_remainder_b(const BigUint& x, const MontCtx<W>& ctx) {
    detail::DigitView<W> v(x);
    if (v.count() == 1)
        return {v.get(0) % ctx.q, ScaleVariant::PosScaledB, 1};
    return {detail::residue_loop(v, ctx), ScaleVariant::PosScaledB, v.count()};
}

template <class W>
ScaledRemainder<W> scaled_remainder_b_trace(const BigUint& x, const MontCtx<W>& ctx,
                                            std::vector<W>& residues) {
    detail::DigitView<W> v(x);
    residues.clear();
    if (v.count() == 1) {
        residues.push_back(v.get(0) % ctx.q);
        return {residues[0], ScaleVariant::PosScaledB, 1};
    }
    const W lo = detail::residue_loop(v, ctx, [&](size_t, W l) { residues.push_back(l); });
    return {lo, ScaleVariant::PosScaledB, v.count()};
}

/* F independent Algorithm-A carries, one per contiguous segment of
   ceil(n/F) digits (the dividend is viewed as zero-padded up to a multiple
   of F; the input is not touched). F in {1, 2, 4}. */
template <class W>
std::vector<W> fold_scaled_remainder(const BigUint& x, const MontCtx<W>& ctx, unsigned fold) {
    detail::DigitView<W> v(x);
    const size_t seg = detail::padded_digits(v.count(), fold) / fold;
    std::vector<W> out(fold);
    switch (fold) {
    case 1: detail::fold_chains<W, 1>(v, seg, ctx, out.data()); break;
    case 2: detail::fold_chains<W, 2>(v, seg, ctx, out.data()); break;
    case 4: detail::fold_chains<W, 4>(v, seg, ctx, out.data()); break;
    default: throw std::invalid_argument("fold_scaled_remainder: folding factor must be 1, 2 or 4");
    }
    return out;
}

/* Nested recombination cy_0 + (cy_1 + (... + cy_{F-1}*P)*P)*P (mod q) with
   P = R^(n/F); each weighting is one mont_mul by the precomputed P*R.
   The result is the carry of a single Algorithm-A pass over n/F digits,
   i.e. x == -combined * R^(n/F) (mod q). It is zero exactly when the
   serial carry is zero, and relates to the serial carry C over n digits by
   combined == C * R^(n - n/F) (mod q). */
template <class W>
W combine_partials(std::span<const W> carries, const MontCtx<W>& ctx, u64 n_padded) {
    const size_t f = carries.size();
    if (f == 0) throw std::invalid_argument("combine_partials: empty carry list");
    if (f == 1) return carries[0];
    if (n_padded % f != 0)
        throw std::invalid_argument("combine_partials: digit count not a multiple of F");
    const W scale = radix_power(n_padded / f + 1, ctx); // P*R (mod q)
    W acc = carries[f - 1];
    for (size_t j = f - 1; j-- > 0;)
        acc = mod_add(mont_mul(acc, scale, ctx), carries[j], ctx.q);
    return acc;
}

/* True remainder x mod q for an odd one- or two-word modulus. Picks the
   A or B loop from the powering-bitmap cost model, computes the one radix
   power it needs, and applies a single scaling mont_mul. fold > 1 routes
   through the folded chains instead. */
template <class W>
W remainder_mod(const BigUint& x, const MontCtx<W>& ctx, unsigned fold = 1) {
    detail::DigitView<W> v(x);
    const size_t n = v.count();
    if (fold > 1) {
        const std::vector<W> carries = fold_scaled_remainder(x, ctx, fold);
        const size_t np = detail::padded_digits(n, fold);
        const W combined = combine_partials<W>(carries, ctx, np);
        return mont_mul(mod_neg(combined, ctx.q), radix_power(np / fold + 1, ctx), ctx);
    }
    if (choose_variant(n) == Variant::UseA) {
        const ScaledRemainder<W> s = scaled_remainder_a(x, ctx);
        return mont_mul(s.value, radix_power(n + 1, ctx), ctx);
    }
    const ScaledRemainder<W> s = scaled_remainder_b(x, ctx);
    return mont_mul(s.value, radix_power(n, ctx), ctx);
}

struct DivisorSpec;

// x mod divisor for any divisor >= 2; even divisors are handled by
// splitting off the power of two (see mod_inverse.hpp for DivisorSpec).
BigUint remainder(const BigUint& x, const DivisorSpec& divisor, unsigned fold = 1);

} // namespace montdiv

#endif

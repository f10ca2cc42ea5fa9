#include "montdiv/pow2_mod.hpp"

#include "montdiv/mod_inverse.hpp"
#include "montdiv/radix_power.hpp"

namespace montdiv {

namespace {

// Longest leading bitfield of v with value < b, scanning down from the top
// set bit i1. Returns the lowest index of the field.
template <class W>
int chunk_floor(W v, int i1, unsigned b) {
    int i0 = i1;
    while (i0 > 0 && (v >> (i0 - 1)) < W(b)) --i0;
    return i0;
}

} // namespace

template <class W>
Pow2Plan<W> make_pow2_plan(u64 p) {
    constexpr unsigned b = unsigned(word_bits<W>);
    if (p > W(0) - W(b) - 1)
        throw std::invalid_argument("pow2 plan: exponent too large for the word width");
    Pow2Plan<W> plan;
    plan.pshift = W(p) + b;
    plan.i1 = int(b) - 1 - count_leading_zeros(plan.pshift);
    plan.i0 = chunk_floor(plan.pshift, plan.i1, b);
    plan.chunk = unsigned(plan.pshift >> plan.i0);
    plan.seed = W(1) << (b - plan.chunk - 1);
    return plan;
}

template Pow2Plan<u64> make_pow2_plan<u64>(u64);
template Pow2Plan<u128> make_pow2_plan<u128>(u64);

template <class W>
W neg_pow2_mod(u64 p, const MontCtx<W>& ctx, PowStats* stats, std::vector<Pow2Step>* trace) {
    if (stats) *stats = {};
    if (trace) trace->clear();
    if (p == 0) return W(1);

    const Pow2Plan<W> plan = make_pow2_plan<W>(p);
    W s = plan.seed;
    if (s >= ctx.q) s %= ctx.q; // tiny q can undercut the pure power-of-2 seed
    const W pnot = ~plan.pshift;
    for (int i = plan.i0 - 1; i >= 0; --i) {
        s = mont_sqr(s, ctx);
        if (stats) stats->mont_sqr++;
        const bool dbl = (pnot >> i) & 1;
        if (dbl) s = mod_add(s, s, ctx.q);
        if (trace) trace->push_back({i, dbl});
    }
    // Always one final mod-doubling: the loop ends on 2^-(p+1).
    return mod_add(s, s, ctx.q);
}

template u64 neg_pow2_mod<u64>(u64, const MontCtx<u64>&, PowStats*, std::vector<Pow2Step>*);
template u128 neg_pow2_mod<u128>(u64, const MontCtx<u128>&, PowStats*, std::vector<Pow2Step>*);

template <class W>
W pos_pow2_mod(u64 p, const MontCtx<W>& ctx, PowStats* stats, std::vector<Pow2Step>* trace) {
    constexpr unsigned b = unsigned(word_bits<W>);
    if (stats) *stats = {};
    if (trace) trace->clear();
    if (p == 0) return W(1);

    const int i1 = 63 - count_leading_zeros(p);
    const int i0 = chunk_floor(p, i1, b);
    const unsigned chunk = unsigned(p >> i0);

    const W r2 = r2_mod_q(ctx);
    if (stats) stats->bootstrap++;
    W s = mont_mul(r2, W(1) << chunk, ctx); // R * 2^chunk (mod q)
    if (stats) stats->mont_mul++;

    for (int i = i0 - 1; i >= 0; --i) {
        s = mont_sqr(s, ctx);
        if (stats) stats->mont_sqr++;
        const bool dbl = (p >> i) & 1;
        if (dbl) s = mod_add(s, s, ctx.q);
        if (trace) trace->push_back({i, dbl});
    }
    s = mmul_one(s, ctx); // strip the carried Montgomery factor R
    if (stats) stats->mmul_one++;
    return s;
}

template u64 pos_pow2_mod<u64>(u64, const MontCtx<u64>&, PowStats*, std::vector<Pow2Step>*);
template u128 pos_pow2_mod<u128>(u64, const MontCtx<u128>&, PowStats*, std::vector<Pow2Step>*);

bool mersenne_has_factor(u64 p, const BigUint& q) {
    const CtxVariant ctx = make_ctx(q);
    // q | 2^p - 1  <=>  2^-p == 1 (mod q)
    if (std::holds_alternative<MontCtx<u64>>(ctx))
        return neg_pow2_mod(p, std::get<MontCtx<u64>>(ctx)) == 1;
    return neg_pow2_mod(p, std::get<MontCtx<u128>>(ctx)) == 1;
}

bool fermat_has_factor(unsigned f, const BigUint& q) {
    if (f > 63) throw std::invalid_argument("fermat_has_factor: index must be <= 63");
    const u64 p = u64(1) << f;
    const CtxVariant ctx = make_ctx(q);
    // q | 2^(2^f) + 1  <=>  2^-(2^f) == -1 (mod q)
    if (std::holds_alternative<MontCtx<u64>>(ctx)) {
        const auto& c = std::get<MontCtx<u64>>(ctx);
        return neg_pow2_mod(p, c) == c.q - 1;
    }
    const auto& c = std::get<MontCtx<u128>>(ctx);
    return neg_pow2_mod(p, c) == c.q - 1;
}

} // namespace montdiv

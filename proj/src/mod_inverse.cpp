#include "montdiv/mod_inverse.hpp"

#include <stdexcept>

namespace montdiv {

u64 qinv_seed(u64 q) {
    if ((q & 1) == 0) throw std::invalid_argument("qinv_seed: modulus must be odd");
    return (3 * q) ^ 2;
}

std::array<u64, 5> qinv_newton64_iterates(u64 q) {
    std::array<u64, 5> it{};
    u64 qinv = qinv_seed(q);
    it[0] = qinv;
    for (int j = 1; j <= 4; ++j) {
        const u64 tmp = mull(q, qinv);
        qinv = mull(qinv, u64(2) - tmp);
        it[size_t(j)] = qinv;
    }
    return it;
}

u64 qinv_newton64(u64 q) {
    return qinv_newton64_iterates(q)[4];
}

u64 qinv_extend(u64 q_lo, u64 q_hi, u64 qinv_lo) {
    if ((q_lo & 1) == 0) throw std::invalid_argument("qinv_extend: modulus must be odd");
    if (mull(q_lo, qinv_lo) != 1)
        throw std::invalid_argument("qinv_extend: qinv_lo is not the 64-bit inverse of q_lo");
    const u64 inner = mull(q_hi, qinv_lo) + umulh(q_lo, qinv_lo);
    return mull(u64(0) - qinv_lo, inner);
}

MontCtx<u64> make_ctx64(u64 q) {
    if ((q & 1) == 0) throw std::invalid_argument("make_ctx64: modulus must be odd");
    if (q < 3) throw std::invalid_argument("make_ctx64: modulus must be >= 3");
    return {q, qinv_newton64(q)};
}

MontCtx<u128> make_ctx128(u128 q) {
    if ((q & 1) == 0) throw std::invalid_argument("make_ctx128: modulus must be odd");
    if (q < 3) throw std::invalid_argument("make_ctx128: modulus must be >= 3");
    const u64 q_lo = lo64(q), q_hi = hi64(q);
    const u64 d0 = qinv_newton64(q_lo);
    const u64 d1 = qinv_extend(q_lo, q_hi, d0);
    return {q, join128(d0, d1)};
}

CtxVariant make_ctx(const BigUint& q) {
    const size_t n = q.significant_words();
    if (n > 2) throw std::invalid_argument("make_ctx: modulus wider than 128 bits is unsupported");
    if (n == 1) return make_ctx64(q.word(0));
    return make_ctx128(q.to_u128());
}

DivisorSpec make_divisor_spec(const BigUint& divisor) {
    BigUint two = BigUint::from_u64(2);
    if (divisor < two) throw std::invalid_argument("make_divisor_spec: divisor must be >= 2");

    DivisorSpec spec;
    spec.tz = divisor.trailing_zero_bits();
    const BigUint odd = divisor.shifted_right(spec.tz);
    const size_t n = odd.significant_words();
    if (n > 2)
        throw std::invalid_argument("make_divisor_spec: odd part wider than 128 bits is unsupported");
    if (n == 1 && odd.word(0) == 1) {
        spec.odd_is_one = true;
        return spec;
    }
    if (n == 1) {
        spec.odd64 = make_ctx64(odd.word(0));
    } else {
        spec.wide = true;
        spec.odd128 = make_ctx128(odd.to_u128());
    }
    return spec;
}

} // namespace montdiv

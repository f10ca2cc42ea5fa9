#include "montdiv/quotient.hpp"

#include "montdiv/mod_inverse.hpp"

namespace montdiv {

namespace detail {

BigUint from_digits(std::vector<u64>&& digits) {
    return BigUint(std::move(digits));
}

BigUint from_digits(const std::vector<u128>& digits) {
    std::vector<u64> words(2 * digits.size());
    for (size_t i = 0; i < digits.size(); ++i) {
        words[2 * i] = lo64(digits[i]);
        words[2 * i + 1] = hi64(digits[i]);
    }
    return BigUint(std::move(words));
}

} // namespace detail

template <class W>
void quotient_inplace(BigUint& x, W r, const MontCtx<W>& ctx) {
    BigUint y = quotient(x, r, ctx);
    y.resize(x.size());
    x = std::move(y);
}

template void quotient_inplace<u64>(BigUint&, u64, const MontCtx<u64>&);
template void quotient_inplace<u128>(BigUint&, u128, const MontCtx<u128>&);

template <class W>
BigUint quotient_low_words(const BigUint& x, W r, const MontCtx<W>& ctx, size_t m) {
    constexpr size_t words_per_digit = size_t(word_bits<W>) / 64;
    detail::DigitView<W> v(x);
    const size_t digits_needed = (m + words_per_digit - 1) / words_per_digit;
    std::vector<W> y(digits_needed);
    detail::quotient_loop(v, 0, digits_needed, ctx, {r, W(0)},
                          [&](size_t i, W d) { y[i] = d; });
    BigUint out = detail::from_digits(std::move(y));
    out.resize(m);
    return out;
}

template BigUint quotient_low_words<u64>(const BigUint&, u64, const MontCtx<u64>&, size_t);
template BigUint quotient_low_words<u128>(const BigUint&, u128, const MontCtx<u128>&, size_t);

std::pair<BigUint, BigUint> div_rem(const BigUint& x, const BigUint& divisor, unsigned fold) {
    const DivisorSpec spec = make_divisor_spec(divisor);

    if (spec.odd_is_one) // power-of-two divisor
        return {x.shifted_right(spec.tz), x.low_bits(spec.tz)};

    BigUint shifted;
    const BigUint& xs = spec.tz ? (shifted = x.shifted_right(spec.tz)) : x;

    BigUint y, partial;
    if (spec.wide) {
        if (fold > 1) {
            auto core = detail::folded_div_core(xs, spec.odd128, fold);
            y = detail::from_digits(std::move(core.digits));
            partial = BigUint::from_u128(core.rem);
        } else {
            const u128 r = remainder_mod(xs, spec.odd128);
            y = quotient(xs, r, spec.odd128);
            partial = BigUint::from_u128(r);
        }
    } else {
        if (fold > 1) {
            auto core = detail::folded_div_core(xs, spec.odd64, fold);
            y = detail::from_digits(std::move(core.digits));
            partial = BigUint::from_u64(core.rem);
        } else {
            const u64 r = remainder_mod(xs, spec.odd64);
            y = quotient(xs, r, spec.odd64);
            partial = BigUint::from_u64(r);
        }
    }

    BigUint rem = spec.tz ? partial.shifted_left(spec.tz).plus(x.low_bits(spec.tz))
                          : std::move(partial);
    return {std::move(y), std::move(rem)};
}

} // namespace montdiv

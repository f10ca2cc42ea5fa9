#include "montdiv/remainder.hpp"

#include "montdiv/mod_inverse.hpp"

namespace montdiv {

BigUint remainder(const BigUint& x, const DivisorSpec& divisor, unsigned fold) {
    if (divisor.odd_is_one)
        return x.low_bits(divisor.tz);

    BigUint shifted;
    const BigUint& xs = divisor.tz ? (shifted = x.shifted_right(divisor.tz)) : x;
    BigUint partial = divisor.wide
        ? BigUint::from_u128(remainder_mod(xs, divisor.odd128, fold))
        : BigUint::from_u64(remainder_mod(xs, divisor.odd64, fold));
    if (divisor.tz == 0) return partial;
    // True remainder: shift the odd-part remainder back up and restore the
    // saved low bits of x; the two pieces occupy disjoint bit ranges.
    return partial.shifted_left(divisor.tz).plus(x.low_bits(divisor.tz));
}

} // namespace montdiv

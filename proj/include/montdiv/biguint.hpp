#ifndef MONTDIV_BIGUINT_HPP
#define MONTDIV_BIGUINT_HPP

/* Little-endian vector of 64-bit words. The stored length is significant to
   the division engines (a 16-word dividend runs 16 loop iterations even if
   the top words are zero), so trailing zero words are preserved rather than
   stripped. Only the small scalar helpers needed for parsing, formatting
   and shifting live here; all real arithmetic is elsewhere. */

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "montdiv/uint128.hpp"

namespace montdiv {

class BigUint {
public:
    BigUint() : words_(1, 0) {}
    explicit BigUint(std::vector<u64> words);

    static BigUint from_u64(u64 v) { return BigUint(std::vector<u64>{v}); }
    static BigUint from_u128(u128 v);

    // Decimal, hex with 0x prefix, or the expression form "2^K", "2^K+c",
    // "2^K-c" with K and c decimal and c < 2^64.
    static BigUint parse(std::string_view text);

    // Limb file: magic "MDIV1", u64 LE word count, then that many LE words.
    static BigUint read_limbs(std::istream& in);
    static BigUint read_limbs_file(const std::string& path);
    void write_limbs(std::ostream& out) const;
    void write_limbs_file(const std::string& path) const;

    std::string to_dec() const;
    std::string to_hex() const; // 0x-prefixed, no leading zeros

    const std::vector<u64>& words() const { return words_; }
    size_t size() const { return words_.size(); }
    u64 word(size_t i) const { return i < words_.size() ? words_[i] : 0; }

    size_t significant_words() const;
    size_t bit_length() const;
    bool is_zero() const;
    bool bit(size_t i) const;

    u64 to_u64() const;   // value must fit
    u128 to_u128() const; // value must fit

    // Number of trailing zero bits; 0 for the zero value.
    unsigned trailing_zero_bits() const;

    BigUint shifted_right(unsigned bits) const;
    BigUint shifted_left(unsigned bits) const;
    BigUint low_bits(unsigned bits) const;

    BigUint plus(const BigUint& other) const;

    // In-place scalar helpers (used by parsing/formatting).
    void mul_add_small(u64 mul, u64 add);
    u64 divmod_small(u64 div); // returns remainder
    void add_small(u64 v);
    void sub_small(u64 v); // value must be >= v

    // -1 / 0 / +1 comparing numeric values (storage lengths may differ).
    int compare(const BigUint& other) const;
    bool operator==(const BigUint& o) const { return compare(o) == 0; }
    bool operator!=(const BigUint& o) const { return compare(o) != 0; }
    bool operator<(const BigUint& o) const { return compare(o) < 0; }
    bool operator<=(const BigUint& o) const { return compare(o) <= 0; }

    void resize(size_t n) { words_.resize(n, 0); }

private:
    std::vector<u64> words_; // never empty
};

} // namespace montdiv

#endif

#ifndef MONTDIV_UINT128_HPP
#define MONTDIV_UINT128_HPP

#include <cstdint>

namespace montdiv {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

#if defined(__SIZEOF_INT128__)
using u128 = unsigned __int128;
#else
#error "montdiv requires a compiler with unsigned __int128 support"
#endif

inline constexpr u64 lo64(u128 x) { return static_cast<u64>(x); }
inline constexpr u64 hi64(u128 x) { return static_cast<u64>(x >> 64); }
inline constexpr u128 join128(u64 lo, u64 hi) { return (u128(hi) << 64) | lo; }

template <class W> struct WordTraits;
template <> struct WordTraits<u64> {
    static constexpr int bits = 64;
};
template <> struct WordTraits<u128> {
    static constexpr int bits = 128;
};

template <class W> inline constexpr int word_bits = WordTraits<W>::bits;

inline int count_leading_zeros(u64 x) {
    return x ? __builtin_clzll(x) : 64;
}

inline int count_leading_zeros(u128 x) {
    const u64 h = hi64(x);
    if (h) return count_leading_zeros(h);
    return 64 + count_leading_zeros(lo64(x));
}

inline int count_trailing_zeros(u64 x) {
    return x ? __builtin_ctzll(x) : 64;
}

inline int popcount(u32 x) { return __builtin_popcount(x); }

} // namespace montdiv

#endif

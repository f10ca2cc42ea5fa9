#include "montdiv/biguint.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace montdiv {

namespace {

constexpr char kLimbMagic[5] = {'M', 'D', 'I', 'V', '1'};

// 10^19 is the largest power of ten below 2^64.
constexpr u64 kDecChunk = 10000000000000000000ULL;
constexpr unsigned kDecChunkDigits = 19;

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

u64 parse_u64_checked(std::string_view s, const char* what) {
    if (!all_digits(s)) throw std::invalid_argument(std::string(what) + ": malformed number");
    u64 v = 0;
    for (char c : s) {
        const u64 d = u64(c - '0');
        if (v > (UINT64_MAX - d) / 10)
            throw std::invalid_argument(std::string(what) + ": constant exceeds 64 bits");
        v = v * 10 + d;
    }
    return v;
}

} // namespace

BigUint::BigUint(std::vector<u64> words) : words_(std::move(words)) {
    if (words_.empty()) words_.assign(1, 0);
}

BigUint BigUint::from_u128(u128 v) {
    return BigUint(std::vector<u64>{lo64(v), hi64(v)});
}

size_t BigUint::significant_words() const {
    size_t n = words_.size();
    while (n > 1 && words_[n - 1] == 0) --n;
    return n;
}

size_t BigUint::bit_length() const {
    const size_t n = significant_words();
    if (n == 1 && words_[0] == 0) return 0;
    return 64 * n - unsigned(count_leading_zeros(words_[n - 1]));
}

bool BigUint::is_zero() const {
    for (u64 w : words_)
        if (w) return false;
    return true;
}

bool BigUint::bit(size_t i) const {
    const size_t w = i / 64;
    return w < words_.size() && ((words_[w] >> (i % 64)) & 1);
}

u64 BigUint::to_u64() const {
    if (significant_words() > 1) throw std::overflow_error("BigUint::to_u64: value too wide");
    return words_[0];
}

u128 BigUint::to_u128() const {
    if (significant_words() > 2) throw std::overflow_error("BigUint::to_u128: value too wide");
    return join128(words_[0], word(1));
}

unsigned BigUint::trailing_zero_bits() const {
    for (size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return unsigned(64 * i + count_trailing_zeros(words_[i]));
    return 0;
}

BigUint BigUint::shifted_right(unsigned bits) const {
    const size_t wshift = bits / 64;
    const unsigned bshift = bits % 64;
    if (wshift >= words_.size()) return BigUint();
    std::vector<u64> out(words_.begin() + std::ptrdiff_t(wshift), words_.end());
    if (bshift) {
        for (size_t i = 0; i + 1 < out.size(); ++i)
            out[i] = (out[i] >> bshift) | (out[i + 1] << (64 - bshift));
        out.back() >>= bshift;
    }
    return BigUint(std::move(out));
}

BigUint BigUint::shifted_left(unsigned bits) const {
    const size_t wshift = bits / 64;
    const unsigned bshift = bits % 64;
    std::vector<u64> out(words_.size() + wshift + (bshift ? 1 : 0), 0);
    for (size_t i = 0; i < words_.size(); ++i) out[i + wshift] = words_[i];
    if (bshift) {
        for (size_t i = out.size(); i-- > wshift + 1;)
            out[i] = (out[i] << bshift) | (out[i - 1] >> (64 - bshift));
        out[wshift] <<= bshift;
    }
    return BigUint(std::move(out));
}

BigUint BigUint::low_bits(unsigned bits) const {
    const size_t nwords = (bits + 63) / 64;
    std::vector<u64> out(std::max<size_t>(nwords, 1), 0);
    for (size_t i = 0; i < nwords && i < words_.size(); ++i) out[i] = words_[i];
    if (bits % 64 && nwords <= words_.size() && nwords >= 1)
        out[nwords - 1] &= (u64(1) << (bits % 64)) - 1;
    return BigUint(std::move(out));
}

BigUint BigUint::plus(const BigUint& other) const {
    const size_t n = std::max(words_.size(), other.words_.size());
    std::vector<u64> out(n + 1, 0);
    unsigned carry = 0;
    for (size_t i = 0; i < n; ++i) {
        const u64 a = word(i), b = other.word(i);
        const u64 s = a + b;
        const u64 t = s + carry;
        carry = unsigned(s < a) | unsigned(t < s);
        out[i] = t;
    }
    out[n] = carry;
    return BigUint(std::move(out));
}

void BigUint::mul_add_small(u64 mul, u64 add) {
    u64 carry = add;
    for (u64& w : words_) {
        const u128 p = u128(w) * mul + carry;
        w = lo64(p);
        carry = hi64(p);
    }
    if (carry) words_.push_back(carry);
}

u64 BigUint::divmod_small(u64 div) {
    if (div == 0) throw std::invalid_argument("BigUint::divmod_small: zero divisor");
    u64 rem = 0;
    for (size_t i = words_.size(); i-- > 0;) {
        const u128 cur = join128(words_[i], rem);
        words_[i] = u64(cur / div);
        rem = u64(cur % div);
    }
    return rem;
}

void BigUint::add_small(u64 v) {
    for (size_t i = 0; v && i < words_.size(); ++i) {
        words_[i] += v;
        v = (words_[i] < v) ? 1 : 0;
    }
    if (v) words_.push_back(v);
}

void BigUint::sub_small(u64 v) {
    for (size_t i = 0; v && i < words_.size(); ++i) {
        const u64 w = words_[i];
        words_[i] = w - v;
        v = (w < v) ? 1 : 0;
    }
    if (v) throw std::underflow_error("BigUint::sub_small: negative result");
}

int BigUint::compare(const BigUint& other) const {
    const size_t n = std::max(words_.size(), other.words_.size());
    for (size_t i = n; i-- > 0;) {
        const u64 a = word(i), b = other.word(i);
        if (a != b) return a < b ? -1 : 1;
    }
    return 0;
}

BigUint BigUint::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("BigUint::parse: empty literal");

    if (text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0) {
        const std::string_view hex = text.substr(2);
        if (hex.empty()) throw std::invalid_argument("BigUint::parse: empty hex literal");
        std::vector<u64> out((hex.size() + 15) / 16, 0);
        for (size_t i = 0; i < hex.size(); ++i) {
            const char c = hex[hex.size() - 1 - i];
            u64 nib;
            if (c >= '0' && c <= '9') nib = u64(c - '0');
            else if (c >= 'a' && c <= 'f') nib = u64(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F') nib = u64(c - 'A' + 10);
            else throw std::invalid_argument("BigUint::parse: bad hex digit");
            out[i / 16] |= nib << (4 * (i % 16));
        }
        return BigUint(std::move(out));
    }

    if (text.rfind("2^", 0) == 0) {
        const std::string_view rest = text.substr(2);
        size_t op = rest.find_first_of("+-");
        const std::string_view kstr = rest.substr(0, op);
        const u64 k = parse_u64_checked(kstr, "BigUint::parse: exponent");
        if (k > (u64(1) << 31))
            throw std::invalid_argument("BigUint::parse: exponent too large");
        std::vector<u64> out(size_t(k / 64) + 1, 0);
        out[size_t(k / 64)] = u64(1) << (k % 64);
        BigUint v(std::move(out));
        if (op != std::string_view::npos) {
            const u64 c = parse_u64_checked(rest.substr(op + 1), "BigUint::parse: offset");
            if (rest[op] == '+') v.add_small(c);
            else v.sub_small(c);
        }
        return v;
    }

    if (!all_digits(text)) throw std::invalid_argument("BigUint::parse: malformed literal");
    BigUint v;
    size_t pos = 0;
    while (pos < text.size()) {
        const size_t take = std::min<size_t>(kDecChunkDigits, text.size() - pos);
        u64 chunk = 0, scale = 1;
        for (size_t i = 0; i < take; ++i) {
            chunk = chunk * 10 + u64(text[pos + i] - '0');
            scale *= 10;
        }
        v.mul_add_small(take == kDecChunkDigits ? kDecChunk : scale, chunk);
        pos += take;
    }
    return v;
}

std::string BigUint::to_dec() const {
    if (is_zero()) return "0";
    BigUint tmp = *this;
    std::vector<u64> chunks;
    while (!tmp.is_zero()) chunks.push_back(tmp.divmod_small(kDecChunk));
    std::string out = std::to_string(chunks.back());
    for (size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out += std::string(kDecChunkDigits - part.size(), '0') + part;
    }
    return out;
}

std::string BigUint::to_hex() const {
    static const char* digits = "0123456789abcdef";
    const size_t n = significant_words();
    std::string out = "0x";
    bool leading = true;
    for (size_t i = n; i-- > 0;) {
        for (int s = 60; s >= 0; s -= 4) {
            const unsigned nib = unsigned((words_[i] >> s) & 0xF);
            if (leading && nib == 0 && !(i == 0 && s == 0)) continue;
            leading = false;
            out += digits[nib];
        }
    }
    return out;
}

BigUint BigUint::read_limbs(std::istream& in) {
    char magic[5];
    in.read(magic, 5);
    if (!in || std::memcmp(magic, kLimbMagic, 5) != 0)
        throw std::invalid_argument("limb file: bad magic");
    unsigned char lenbuf[8];
    in.read(reinterpret_cast<char*>(lenbuf), 8);
    if (!in) throw std::invalid_argument("limb file: truncated header");
    u64 count = 0;
    for (int i = 0; i < 8; ++i) count |= u64(lenbuf[i]) << (8 * i);
    if (count == 0 || count > (u64(1) << 32))
        throw std::invalid_argument("limb file: unreasonable word count");
    std::vector<u64> words(size_t(count), 0);
    for (u64 i = 0; i < count; ++i) {
        unsigned char buf[8];
        in.read(reinterpret_cast<char*>(buf), 8);
        if (!in) throw std::invalid_argument("limb file: truncated data");
        u64 w = 0;
        for (int k = 0; k < 8; ++k) w |= u64(buf[k]) << (8 * k);
        words[size_t(i)] = w;
    }
    return BigUint(std::move(words));
}

void BigUint::write_limbs(std::ostream& out) const {
    out.write(kLimbMagic, 5);
    const u64 count = words_.size();
    for (int i = 0; i < 8; ++i) out.put(char((count >> (8 * i)) & 0xFF));
    for (u64 w : words_)
        for (int k = 0; k < 8; ++k) out.put(char((w >> (8 * k)) & 0xFF));
}

BigUint BigUint::read_limbs_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open limb file: " + path);
    return read_limbs(in);
}

void BigUint::write_limbs_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot create limb file: " + path);
    write_limbs(out);
}

} // namespace montdiv

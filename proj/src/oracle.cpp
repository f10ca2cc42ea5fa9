#include "montdiv/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace montdiv::oracle {

namespace {

// Base-2^32 digits keep every intermediate inside plain 64-bit arithmetic.
using Digits = std::vector<u32>;

Digits to_digits(const BigUint& x) {
    Digits d;
    d.reserve(2 * x.size());
    for (u64 w : x.words()) {
        d.push_back(u32(w));
        d.push_back(u32(w >> 32));
    }
    while (d.size() > 1 && d.back() == 0) d.pop_back();
    return d;
}

BigUint from_digits(const Digits& d) {
    std::vector<u64> words((d.size() + 1) / 2, 0);
    for (size_t i = 0; i < d.size(); ++i)
        words[i / 2] |= u64(d[i]) << (32 * (i % 2));
    return BigUint(std::move(words));
}

bool digits_zero(const Digits& d) {
    for (u32 v : d)
        if (v) return false;
    return true;
}

int digits_cmp(const Digits& a, const Digits& b) {
    const size_t n = std::max(a.size(), b.size());
    for (size_t i = n; i-- > 0;) {
        const u32 x = i < a.size() ? a[i] : 0;
        const u32 y = i < b.size() ? b[i] : 0;
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

Digits digits_mul(const Digits& a, const Digits& b) {
    Digits out(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        u64 carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            const u64 cur = u64(a[i]) * b[j] + out[i + j] + carry;
            out[i + j] = u32(cur);
            carry = cur >> 32;
        }
        out[i + b.size()] = u32(carry);
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

// Knuth's classical Algorithm D in base 2^32 with the usual trial-digit
// correction loop.
void digits_divmod(const Digits& u_in, const Digits& v_in, Digits& q, Digits& r) {
    Digits v = v_in;
    while (v.size() > 1 && v.back() == 0) v.pop_back();
    if (digits_zero(v)) throw std::invalid_argument("oracle::divmod: division by zero");

    Digits u = u_in;
    while (u.size() > 1 && u.back() == 0) u.pop_back();

    if (digits_cmp(u, v) < 0) {
        q.assign(1, 0);
        r = u;
        return;
    }

    if (v.size() == 1) { // short division
        const u64 d = v[0];
        q.assign(u.size(), 0);
        u64 rem = 0;
        for (size_t i = u.size(); i-- > 0;) {
            const u64 cur = (rem << 32) | u[i];
            q[i] = u32(cur / d);
            rem = cur % d;
        }
        while (q.size() > 1 && q.back() == 0) q.pop_back();
        r.assign(1, u32(rem));
        return;
    }

    // Normalize so the top divisor digit has its high bit set.
    int shift = 0;
    while (((v.back() << shift) & 0x80000000u) == 0) ++shift;
    const size_t n = v.size();
    const size_t m = u.size() - n;

    Digits vn(n);
    for (size_t i = n; i-- > 1;)
        vn[i] = u32((v[i] << shift) | (shift ? u64(v[i - 1]) >> (32 - shift) : 0));
    vn[0] = v[0] << shift;

    Digits un(u.size() + 1, 0);
    un[u.size()] = shift ? u32(u64(u.back()) >> (32 - shift)) : 0;
    for (size_t i = u.size(); i-- > 1;)
        un[i] = u32((u[i] << shift) | (shift ? u64(u[i - 1]) >> (32 - shift) : 0));
    un[0] = u[0] << shift;

    q.assign(m + 1, 0);
    for (size_t j = m + 1; j-- > 0;) {
        u64 qhat = ((u64(un[j + n]) << 32) | un[j + n - 1]) / vn[n - 1];
        u64 rhat = ((u64(un[j + n]) << 32) | un[j + n - 1]) % vn[n - 1];
        while (qhat >= (u64(1) << 32) ||
               qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
            --qhat;
            rhat += vn[n - 1];
            if (rhat >= (u64(1) << 32)) break;
        }

        // Multiply-and-subtract; borrow means qhat was one too large.
        std::int64_t borrow = 0;
        u64 carry = 0;
        for (size_t i = 0; i < n; ++i) {
            const u64 p = qhat * vn[i] + carry;
            carry = p >> 32;
            const std::int64_t t = std::int64_t(u64(un[i + j])) - std::int64_t(p & 0xFFFFFFFFu) + borrow;
            un[i + j] = u32(t);
            borrow = t >> 32;
        }
        const std::int64_t t = std::int64_t(u64(un[j + n])) - std::int64_t(carry) + borrow;
        un[j + n] = u32(t);

        if (t < 0) { // add back
            --qhat;
            u64 c = 0;
            for (size_t i = 0; i < n; ++i) {
                const u64 s = u64(un[i + j]) + vn[i] + c;
                un[i + j] = u32(s);
                c = s >> 32;
            }
            un[j + n] = u32(u64(un[j + n]) + c);
        }
        q[j] = u32(qhat);
    }

    while (q.size() > 1 && q.back() == 0) q.pop_back();
    r.assign(n, 0);
    for (size_t i = n; i-- > 1;)
        r[i] = u32((un[i] >> shift) | (shift ? u64(un[i + 1]) << (32 - shift) : 0));
    r[0] = u32((un[0] >> shift) | (shift ? u64(un[1]) << (32 - shift) : 0));
    while (r.size() > 1 && r.back() == 0) r.pop_back();
}

} // namespace

BigUint mul(const BigUint& x, const BigUint& y) {
    return from_digits(digits_mul(to_digits(x), to_digits(y)));
}

std::pair<BigUint, BigUint> divmod(const BigUint& x, const BigUint& d) {
    Digits q, r;
    digits_divmod(to_digits(x), to_digits(d), q, r);
    return {from_digits(q), from_digits(r)};
}

BigUint powmod(const BigUint& base, const BigUint& exp, const BigUint& m) {
    if (m.is_zero()) throw std::invalid_argument("oracle::powmod: zero modulus");
    BigUint result = divmod(BigUint::from_u64(1), m).second; // 1 mod m
    BigUint b = divmod(base, m).second;
    const size_t nbits = exp.bit_length();
    for (size_t i = nbits; i-- > 0;) {
        result = divmod(mul(result, result), m).second;
        if (exp.bit(i)) result = divmod(mul(result, b), m).second;
    }
    return result;
}

} // namespace montdiv::oracle

#include <doctest.h>

#include <stdexcept>

#include <random>

#include "montdiv/mod_inverse.hpp"
#include "test_util.hpp"

using namespace montdiv;

namespace {

const u64 kQ = 16357897499336320049ULL;

// Number of low bits where q*v agrees with 1.
int good_bits(u64 q, u64 v) {
    const u64 diff = q * v - 1;
    return diff == 0 ? 64 : count_trailing_zeros(diff);
}

} // namespace

TEST_CASE("qinv_seed") {
    CHECK(qinv_seed(1) == 1);
    CHECK(qinv_seed(kQ) == 12180204350589856913ULL); // mull(q,3) ^ 2
    CHECK(good_bits(kQ, qinv_seed(kQ)) == 6);
    CHECK_THROWS_AS(qinv_seed(4), std::invalid_argument);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 10000; ++i) {
        const u64 q = rng() | 1;
        CHECK(good_bits(q, qinv_seed(q)) >= 5);
    }
}

TEST_CASE("qinv_newton64 converges in exactly four iterations") {
    CHECK(qinv_newton64(1) == 1);
    CHECK(qinv_newton64(kQ) == 9366409592816252113ULL);
    CHECK_THROWS_AS(qinv_newton64(6), std::invalid_argument);

    const auto it = qinv_newton64_iterates(kQ);
    CHECK(it[1] == 0x4141B6714938A4D1ULL);
    CHECK(it[2] == 0x656E0C4A279FB4D1ULL);
    CHECK(it[3] == 0x6EAB2BE6389FB4D1ULL);
    CHECK(it[4] == 0x81FC2BE6389FB4D1ULL);
    // Convergence doubles from the 6-bit seed: 12 / 24 / 48 / 64.
    CHECK(good_bits(kQ, it[1]) == 12);
    CHECK(good_bits(kQ, it[2]) == 24);
    CHECK(good_bits(kQ, it[3]) == 48);
    CHECK(good_bits(kQ, it[4]) == 64);
}

TEST_CASE("qinv_newton64 on random odd moduli") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 100000; ++i) {
        const u64 q = rng() | 1;
        const auto it = qinv_newton64_iterates(q);
        CHECK(q * it[4] == 1);
        for (int j = 1; j <= 4; ++j) {
            const int want = 5 << j; // at least 5*2^j bits per doubling step
            CHECK(good_bits(q, it[size_t(j)]) >= std::min(64, want));
        }
    }
}

TEST_CASE("qinv_extend reproduces the worked 128-bit inverse") {
    const u64 q_lo = 1654746039858251761ULL;
    const u64 q_hi = 12240518780192025ULL;
    const u64 qinv_lo = 18061898331188349201ULL;
    // The two displayed partial products and their sum.
    CHECK(mull(q_hi, qinv_lo) == 12364022002462652329ULL);
    CHECK(umulh(q_lo, qinv_lo) == 1620223851777327935ULL);
    CHECK(u64(0) - qinv_lo == 384845742521202415ULL);
    CHECK(mull(q_hi, qinv_lo) + umulh(q_lo, qinv_lo) == 13984245854239980264ULL);
    CHECK(qinv_extend(q_lo, q_hi, qinv_lo) == 5329826773734796952ULL);

    CHECK(qinv_extend(1, 0, 1) == 0);
    CHECK_THROWS_AS(qinv_extend(q_lo, q_hi, qinv_lo + 2), std::invalid_argument);
    CHECK_THROWS_AS(qinv_extend(2, 0, 1), std::invalid_argument);
}

TEST_CASE("qinv_extend equals a full 128-bit Newton step") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 20000; ++i) {
        const u128 q = join128(rng() | 1, rng());
        const u64 d0 = qinv_newton64(lo64(q));
        const u64 d1 = qinv_extend(lo64(q), hi64(q), d0);
        // Naive iterate at width 128 from the 64-bit-good value.
        const u128 y0 = u128(d0);
        const u128 y1 = mull(y0, u128(2) - mull(q, y0));
        CHECK(join128(d0, d1) == y1);
        CHECK(mull(q, join128(d0, d1)) == 1);
    }
}

TEST_CASE("make_ctx picks the width and validates") {
    const auto c64 = make_ctx(BigUint::from_u64(kQ));
    REQUIRE(std::holds_alternative<MontCtx<u64>>(c64));
    CHECK(std::get<MontCtx<u64>>(c64).qinv == 9366409592816252113ULL);

    const auto c128 = make_ctx(tu::bu("225797717267637708506527464987314161"));
    REQUIRE(std::holds_alternative<MontCtx<u128>>(c128));
    CHECK(std::get<MontCtx<u128>>(c128).qinv ==
          tu::u128_of("98317950452290864966529955359911823633"));

    CHECK_THROWS_AS(make_ctx(BigUint::from_u64(4)), std::invalid_argument);
    CHECK_THROWS_AS(make_ctx(BigUint::from_u64(1)), std::invalid_argument);
    CHECK_THROWS_AS(make_ctx(tu::bu("2^128+1")), std::invalid_argument);

    std::mt19937_64 rng(44);
    for (int i = 0; i < 1000; ++i) {
        const u128 q = join128(rng() | 1, rng());
        const auto ctx = make_ctx(BigUint::from_u128(q));
        CHECK(mull(std::get<MontCtx<u128>>(ctx).qinv, q) == 1);
    }
}

TEST_CASE("make_divisor_spec splits even divisors") {
    const DivisorSpec odd = make_divisor_spec(BigUint::from_u64(kQ));
    CHECK(odd.tz == 0);
    CHECK(!odd.wide);
    CHECK(odd.odd64.q == kQ);

    const DivisorSpec even = make_divisor_spec(BigUint::from_u64(12));
    CHECK(even.tz == 2);
    CHECK(even.odd64.q == 3);

    const DivisorSpec pow2 = make_divisor_spec(tu::bu("2^200"));
    CHECK(pow2.tz == 200);
    CHECK(pow2.odd_is_one);

    // Odd part just inside the width limit is fine; one bit wider is not.
    CHECK(make_divisor_spec(tu::bu("2^129-2")).wide);
    CHECK_THROWS_AS(make_divisor_spec(BigUint::from_u64(1)), std::invalid_argument);
    CHECK_THROWS_AS(make_divisor_spec(BigUint::from_u64(0)), std::invalid_argument);
    CHECK_THROWS_AS(make_divisor_spec(tu::bu("2^128+1")), std::invalid_argument);
}

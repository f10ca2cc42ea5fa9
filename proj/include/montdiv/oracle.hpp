#ifndef MONTDIV_ORACLE_HPP
#define MONTDIV_ORACLE_HPP

/* Slow, obviously-correct schoolbook arithmetic for property tests and
   expected-value generation. Deliberately shares no arithmetic with the
   Montgomery engines: base-2^32 digits, classical long multiplication and
   long division. Never use from non-test code. */

#include <utility>

#include "montdiv/biguint.hpp"

namespace montdiv::oracle {

// Exact product, schoolbook.
BigUint mul(const BigUint& x, const BigUint& y);

// (quotient, remainder) with x = q*d + r, 0 <= r < d. Throws for d = 0.
std::pair<BigUint, BigUint> divmod(const BigUint& x, const BigUint& d);

// base^exp mod m by square-and-multiply over divmod reductions. m >= 1.
BigUint powmod(const BigUint& base, const BigUint& exp, const BigUint& m);

} // namespace montdiv::oracle

#endif

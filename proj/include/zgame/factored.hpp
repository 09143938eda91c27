#ifndef ZGAME_FACTORED_HPP
#define ZGAME_FACTORED_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "zgame/primes.hpp"

namespace zgame {

struct PrimePower {
    uint32_t index;     // 1-based prime index
    uint32_t exponent;  // >= 1
    bool operator==(const PrimePower&) const = default;
};

// Exact positive integer held as prime-index -> exponent; the empty
// factor list is the integer 1. The Z operation works exponent-wise and
// never needs the materialized value, so entries stay factored and
// conversion to a decimal integer happens on demand.
class FactoredInteger {
public:
    FactoredInteger() = default;  // the integer 1

    static FactoredInteger prime(uint32_t index);
    static FactoredInteger from_factors(std::vector<PrimePower> factors);

    // Trial division against the table, growing it as needed. If the
    // remaining cofactor is a prime beyond what the table may grow to,
    // this raises limit_error instead of mis-factoring.
    static FactoredInteger from_value(const mpz_class& value, PrimeTable& table);
    static FactoredInteger from_value(uint64_t value, PrimeTable& table);

    const std::vector<PrimePower>& factors() const { return factors_; }
    uint32_t nu(uint32_t index) const;  // exponent of p_index, 0 if absent
    size_t omega() const { return factors_.size(); }
    bool is_one() const { return factors_.empty(); }
    bool squarefree() const;
    uint32_t max_index() const;  // 0 for the integer 1

    mpz_class value(const PrimeTable& table) const;
    std::string decimal(const PrimeTable& table) const;

    // "2·3·5·7"; exponents above 1 print as "2^3".
    std::string factor_string(const PrimeTable& table) const;

    bool operator==(const FactoredInteger&) const = default;

private:
    friend FactoredInteger z_op(const FactoredInteger&, const FactoredInteger&);
    std::vector<PrimePower> factors_;  // ascending index, all exponents >= 1
};

// ab / gcd(a,b)^2: the exponent of every prime in the result is the
// absolute difference of its exponents in a and b. Commutative, and
// squarefree inputs give a squarefree output.
FactoredInteger z_op(const FactoredInteger& a, const FactoredInteger& b);

}  // namespace zgame

#endif  // ZGAME_FACTORED_HPP

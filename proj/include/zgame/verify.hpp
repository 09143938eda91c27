#ifndef ZGAME_VERIFY_HPP
#define ZGAME_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "zgame/primes.hpp"

namespace zgame {

struct SuiteResult {
    std::string name;
    bool passed = false;
    uint64_t checks = 0;
    std::string detail;  // first counterexample when failed
};

// Suite ids accepted by run_suite, in battery order:
//   thm1           omega of every left edge is a power of two (closed form
//                  up to the bound, iterated up to min(bound, 256), agree)
//   thm2           omega is constant along every row of the prime triangle
//   thm4           phi returns unit(k) after 2^s steps for all k < 2^s <= bound
//   prop1          psi^(2^s) equals xor with the 2^s-shifted copy
//   prop2          psi^(m) of unit(k) matches binomial parity everywhere
//   prop3          support size of psi^(m)(unit(k)) is 2^delta(m)
//   closed-vs-iter closed-form entries equal iterated entries for m+n <= bound
//   delta          binary-weight identities, matrix symmetries, prefix row
//   slices         exponent slices of the triangle equal iterated phi
const std::vector<std::string>& suite_names();

// bound == 0 picks the suite default. Unknown names raise invalid_argument.
SuiteResult run_suite(const std::string& name, uint64_t bound, PrimeTable& table,
                      unsigned threads = 1);

std::vector<SuiteResult> run_all_suites(PrimeTable& table, unsigned threads = 1);

}  // namespace zgame

#endif  // ZGAME_VERIFY_HPP

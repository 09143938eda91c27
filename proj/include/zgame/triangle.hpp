#ifndef ZGAME_TRIANGLE_HPP
#define ZGAME_TRIANGLE_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "zgame/bitseq.hpp"
#include "zgame/factored.hpp"
#include "zgame/primes.hpp"

namespace zgame {

// Trapezoid generated by repeated z_op over an N-term start row: row 0
// is the start, row m+1 pairs neighbors of row m, so row m holds N-m
// entries. Columns are 1-based so that entry(m, 1) is the left edge;
// the shift to 0-based storage lives in entry() alone.
class TriangleSlice {
public:
    size_t depth() const { return rows_.size(); }
    size_t row_length(size_t m) const { return row(m).size(); }
    const std::vector<FactoredInteger>& row(size_t m) const;
    const FactoredInteger& entry(size_t m, size_t n) const;  // n >= 1

private:
    friend TriangleSlice build_triangle(std::vector<FactoredInteger>, size_t, unsigned);
    std::vector<std::vector<FactoredInteger>> rows_;
};

std::vector<FactoredInteger> next_row(const std::vector<FactoredInteger>& row,
                                      unsigned threads = 1);

TriangleSlice build_triangle(std::vector<FactoredInteger> start, size_t depth,
                             unsigned threads = 1);

// Prime-start closed form: entry (m,n) is the product of p_{n+r} over
// r in sierpinski_row(m). The table bounds the reachable index n+m.
FactoredInteger entry_closed_form(uint64_t m, uint64_t n, const PrimeTable& table);

struct LeftEdgeEntry {
    uint64_t m = 0;
    FactoredInteger value;
};

// Entry (m,1) of the prime-start triangle via the closed form.
LeftEdgeEntry left_edge(uint64_t m, const PrimeTable& table);

// GF(2) shadow of one prime: bit n-1 of result row m is
// nu_{p_k}(entry(m,n)) mod 2.
std::vector<BitSequence> p_slice(const TriangleSlice& triangle, uint32_t prime_index,
                                 size_t depth);
std::vector<BitSequence> p_slice(const std::vector<FactoredInteger>& start,
                                 uint32_t prime_index, size_t depth,
                                 unsigned threads = 1);

// Start rows.
std::vector<FactoredInteger> primes_start(size_t n);
std::vector<FactoredInteger> naturals_start(size_t n, PrimeTable& table);
std::vector<FactoredInteger> binomial_start(uint64_t n, PrimeTable& table);  // C(n,0..n)
std::vector<FactoredInteger> start_from_values(const std::vector<mpz_class>& values,
                                               PrimeTable& table);

// Exports: CSV of decimal values (one triangle row per line), JSON of
// the factored form ([prime_index, exponent] pairs per entry).
void write_triangle_csv(const TriangleSlice& triangle, PrimeTable& table,
                        std::ostream& out);
void write_triangle_json(const TriangleSlice& triangle, std::ostream& out);

}  // namespace zgame

#endif  // ZGAME_TRIANGLE_HPP

#ifndef ZGAME_SEQUENCES_HPP
#define ZGAME_SEQUENCES_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "zgame/primes.hpp"

namespace zgame {

// 2^t x 2^t grid with entry(i,j) = delta(2^t*i + j), i.e. the binary
// weight sequence written in rows of length 2^t. Since i and j occupy
// disjoint bit ranges, entry(i,j) = delta(i) + delta(j).
struct DeltaMatrix {
    unsigned t = 0;
    size_t side = 0;
    std::vector<uint8_t> cells;  // row-major

    uint8_t entry(size_t i, size_t j) const { return cells[i * side + j]; }
};

DeltaMatrix delta_matrix(unsigned t);  // 1 <= t <= 12

struct SequenceRecord {
    std::string name;
    std::vector<mpz_class> terms;
};

// Binary weights delta(0), ..., delta(count-1).
SequenceRecord delta_sequence(size_t count);

// Left edge of the triangle whose start row is 1, 2, 3, ...; term m
// needs start entries 1..m+1, so count terms use a count+1 window.
SequenceRecord natural_left_edge(size_t count, PrimeTable& table);

SequenceRecord sorted_dedup(const SequenceRecord& seq);

struct RangeExtrema {
    mpz_class min_d, max_d;
    uint64_t min_omega = 0, max_omega = 0;
};

struct RangeSums {
    mpz_class sum_d, sum_omega;
};

// Exact extrema / sums of d_m and omega(d_m) over x <= m <= y, via the
// closed form. Finite-range computations, not asymptotic estimates.
RangeExtrema range_extrema(uint64_t x, uint64_t y, PrimeTable& table,
                           unsigned threads = 1);
RangeSums range_sums(uint64_t x, uint64_t y, PrimeTable& table, unsigned threads = 1);

// OEIS b-file: one "index value" pair per line.
void write_bfile(const SequenceRecord& seq, long long offset, std::ostream& out);

}  // namespace zgame

#endif  // ZGAME_SEQUENCES_HPP

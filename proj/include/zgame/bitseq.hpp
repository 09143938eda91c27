#ifndef ZGAME_BITSEQ_HPP
#define ZGAME_BITSEQ_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace zgame {

// Finite-support sequence over GF(2), indexed from 0, stored as the
// strictly increasing list of indices holding a 1. It doubles as the
// exponent list of the matching polynomial over GF(2). Supports stay
// sparse under the transforms below (size 2^delta), so a sorted index
// list beats a packed bit vector at the scales of interest.
class BitSequence {
public:
    BitSequence() = default;

    // Sorts the indices; duplicates are rejected.
    explicit BitSequence(std::vector<uint64_t> support);

    // Indicator of a single index k (the monomial X^k).
    static BitSequence unit(uint64_t k);

    // Trusted path for callers that already hold a sorted, duplicate-free list.
    static BitSequence from_sorted(std::vector<uint64_t> support);

    bool test(uint64_t n) const;
    bool empty() const { return support_.empty(); }
    size_t ones() const { return support_.size(); }
    const std::vector<uint64_t>& support() const { return support_; }

    bool operator==(const BitSequence&) const = default;

private:
    std::vector<uint64_t> support_;
};

// 1 iff 0 <= k <= m and C(m,k) is odd; by Lucas that means k is a
// bitwise submask of m.
int binomial_parity(uint64_t m, int64_t k);

// Number of 1-bits of m (OEIS A000120).
unsigned hamming_delta(uint64_t m);

// Offsets r in [0,m] with C(m,r) odd, ascending: exactly the submasks
// of m, 2^hamming_delta(m) of them.
struct SierpinskiRow {
    uint64_t m = 0;
    std::vector<uint64_t> offsets;
};
SierpinskiRow sierpinski_row(uint64_t m);

// One generation of the left-extending difference game; on the series
// side this is multiplication by 1+X: out(n) = w(n) ^ w(n-1).
BitSequence psi_step(const BitSequence& w);

// m-fold psi_step, computed directly from sierpinski_row(m): each
// support index k spreads to {k+r : r in S_m} and duplicates cancel.
// Cost O(|support| * 2^hamming_delta(m)) up to sorting.
BitSequence psi_iter(const BitSequence& w, uint64_t m);

// One generation of the edge-clipped game: out(n) = w(n) ^ w(n+1); the
// difference that would land at index -1 is discarded.
BitSequence phi_step(const BitSequence& w);

// m-fold phi_step.
BitSequence phi_iter(const BitSequence& w, uint64_t m);

// Smallest L >= 1 with phi_iter(w, L) == w, by first-return search.
// nullopt when there is no return within max_steps (w may fall into a
// cycle that does not pass through w itself).
std::optional<uint64_t> cycle_length(const BitSequence& w,
                                     uint64_t max_steps = uint64_t(1) << 16);

// Smallest power of two strictly greater than k: the phi cycle length
// of BitSequence::unit(k).
uint64_t unit_cycle_length(uint64_t k);

}  // namespace zgame

#endif  // ZGAME_BITSEQ_HPP

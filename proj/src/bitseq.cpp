#include "zgame/bitseq.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <stdexcept>

#include "zgame/errors.hpp"

namespace zgame {

BitSequence::BitSequence(std::vector<uint64_t> support) : support_(std::move(support)) {
    std::sort(support_.begin(), support_.end());
    if (std::adjacent_find(support_.begin(), support_.end()) != support_.end())
        throw std::invalid_argument("BitSequence: duplicate support index");
}

BitSequence BitSequence::unit(uint64_t k) {
    BitSequence w;
    w.support_ = {k};
    return w;
}

BitSequence BitSequence::from_sorted(std::vector<uint64_t> support) {
    BitSequence w;
    w.support_ = std::move(support);
    return w;
}

bool BitSequence::test(uint64_t n) const {
    return std::binary_search(support_.begin(), support_.end(), n);
}

int binomial_parity(uint64_t m, int64_t k) {
    if (k < 0) return 0;
    const uint64_t ku = static_cast<uint64_t>(k);
    if (ku > m) return 0;
    return (ku & m) == ku ? 1 : 0;
}

unsigned hamming_delta(uint64_t m) {
    return static_cast<unsigned>(std::popcount(m));
}

SierpinskiRow sierpinski_row(uint64_t m) {
    if (hamming_delta(m) > 24)
        throw limit_error("sierpinski_row: 2^delta(m) offsets exceed the resource cap");
    SierpinskiRow row;
    row.m = m;
    row.offsets.reserve(uint64_t(1) << hamming_delta(m));
    for (uint64_t s = m;; s = (s - 1) & m) {
        row.offsets.push_back(s);
        if (s == 0) break;
    }
    std::reverse(row.offsets.begin(), row.offsets.end());
    return row;
}

namespace {

std::vector<uint64_t> sym_diff(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    std::vector<uint64_t> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

}  // namespace

BitSequence psi_step(const BitSequence& w) {
    std::vector<uint64_t> shifted;
    shifted.reserve(w.support().size());
    for (uint64_t s : w.support()) shifted.push_back(s + 1);
    return BitSequence::from_sorted(sym_diff(w.support(), shifted));
}

BitSequence psi_iter(const BitSequence& w, uint64_t m) {
    const SierpinskiRow row = sierpinski_row(m);
    std::vector<uint64_t> sums;
    sums.reserve(w.support().size() * row.offsets.size());
    for (uint64_t k : w.support())
        for (uint64_t r : row.offsets) sums.push_back(k + r);
    std::sort(sums.begin(), sums.end());
    std::vector<uint64_t> out;
    for (size_t i = 0; i < sums.size();) {
        size_t j = i + 1;
        while (j < sums.size() && sums[j] == sums[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(sums[i]);
        i = j;
    }
    return BitSequence::from_sorted(std::move(out));
}

BitSequence phi_step(const BitSequence& w) {
    std::vector<uint64_t> shifted;
    shifted.reserve(w.support().size());
    for (uint64_t s : w.support())
        if (s > 0) shifted.push_back(s - 1);
    return BitSequence::from_sorted(sym_diff(w.support(), shifted));
}

BitSequence phi_iter(const BitSequence& w, uint64_t m) {
    BitSequence cur = w;
    for (uint64_t i = 0; i < m; ++i) cur = phi_step(cur);
    return cur;
}

std::optional<uint64_t> cycle_length(const BitSequence& w, uint64_t max_steps) {
    BitSequence cur = w;
    for (uint64_t len = 1; len <= max_steps; ++len) {
        cur = phi_step(cur);
        if (cur == w) return len;
    }
    return std::nullopt;
}

uint64_t unit_cycle_length(uint64_t k) {
    uint64_t m = 1;
    while (m <= k) m <<= 1;
    return m;
}

}  // namespace zgame

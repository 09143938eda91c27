#include "zgame/sequences.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "zgame/bitseq.hpp"
#include "zgame/errors.hpp"
#include "zgame/triangle.hpp"

namespace zgame {

DeltaMatrix delta_matrix(unsigned t) {
    if (t < 1) throw std::invalid_argument("delta_matrix: order must be at least 1");
    if (t > 12) throw limit_error("delta_matrix: order above 12 exceeds the resource bound");
    DeltaMatrix m;
    m.t = t;
    m.side = size_t(1) << t;
    m.cells.resize(m.side * m.side);
    for (size_t i = 0; i < m.side; ++i)
        for (size_t j = 0; j < m.side; ++j)
            m.cells[i * m.side + j] =
                static_cast<uint8_t>(hamming_delta((uint64_t(i) << t) + j));
    return m;
}

SequenceRecord delta_sequence(size_t count) {
    SequenceRecord rec;
    rec.name = "delta";
    rec.terms.reserve(count);
    for (size_t m = 0; m < count; ++m) rec.terms.emplace_back(hamming_delta(m));
    return rec;
}

SequenceRecord natural_left_edge(size_t count, PrimeTable& table) {
    if (count == 0) throw std::invalid_argument("natural_left_edge: count must be positive");
    table.ensure_value(count + 1);
    std::vector<FactoredInteger> row = naturals_start(count + 1, table);
    SequenceRecord rec;
    rec.name = "natural-left-edge";
    rec.terms.reserve(count);
    for (size_t m = 0; m < count; ++m) {
        rec.terms.push_back(row.front().value(table));
        if (m + 1 < count) row = next_row(row);
    }
    return rec;
}

SequenceRecord sorted_dedup(const SequenceRecord& seq) {
    SequenceRecord out;
    out.name = seq.name.empty() ? "sorted" : seq.name + "-sorted";
    out.terms = seq.terms;
    std::sort(out.terms.begin(), out.terms.end());
    out.terms.erase(std::unique(out.terms.begin(), out.terms.end()), out.terms.end());
    return out;
}

namespace {

mpz_class left_edge_value(uint64_t m, const PrimeTable& table) {
    mpz_class v = 1;
    for (uint64_t r : sierpinski_row(m).offsets)
        v *= static_cast<unsigned long>(table.prime(static_cast<size_t>(1 + r)));
    return v;
}

// Contiguous stripes of [x, y] for the worker threads.
std::vector<std::pair<uint64_t, uint64_t>> stripes(uint64_t x, uint64_t y, unsigned threads) {
    const uint64_t n = y - x + 1;
    const uint64_t workers = std::max<uint64_t>(1, std::min<uint64_t>(threads, n));
    const uint64_t chunk = (n + workers - 1) / workers;
    std::vector<std::pair<uint64_t, uint64_t>> out;
    for (uint64_t w = 0; w < workers; ++w) {
        const uint64_t lo = x + w * chunk;
        if (lo > y) break;
        out.emplace_back(lo, std::min(y, lo + chunk - 1));
    }
    return out;
}

}  // namespace

RangeExtrema range_extrema(uint64_t x, uint64_t y, PrimeTable& table, unsigned threads) {
    if (x > y) throw std::invalid_argument("range_extrema: x must not exceed y");
    table.ensure_count(static_cast<size_t>(y + 1));
    const auto parts = stripes(x, y, threads);
    std::vector<RangeExtrema> local(parts.size());
    std::vector<std::thread> pool;
    auto work = [&](size_t w) {
        RangeExtrema acc;
        unsigned min_delta = 64, max_delta = 0;
        for (uint64_t m = parts[w].first; m <= parts[w].second; ++m) {
            const unsigned d = hamming_delta(m);
            min_delta = std::min(min_delta, d);
            max_delta = std::max(max_delta, d);
            mpz_class v = left_edge_value(m, table);
            if (m == parts[w].first || v < acc.min_d) acc.min_d = v;
            if (m == parts[w].first || v > acc.max_d) acc.max_d = std::move(v);
        }
        acc.min_omega = uint64_t(1) << min_delta;
        acc.max_omega = uint64_t(1) << max_delta;
        local[w] = std::move(acc);
    };
    if (parts.size() == 1) {
        work(0);
    } else {
        for (size_t w = 0; w < parts.size(); ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    RangeExtrema out = std::move(local.front());
    for (size_t w = 1; w < local.size(); ++w) {
        if (local[w].min_d < out.min_d) out.min_d = std::move(local[w].min_d);
        if (local[w].max_d > out.max_d) out.max_d = std::move(local[w].max_d);
        out.min_omega = std::min(out.min_omega, local[w].min_omega);
        out.max_omega = std::max(out.max_omega, local[w].max_omega);
    }
    return out;
}

RangeSums range_sums(uint64_t x, uint64_t y, PrimeTable& table, unsigned threads) {
    if (x > y) throw std::invalid_argument("range_sums: x must not exceed y");
    table.ensure_count(static_cast<size_t>(y + 1));
    const auto parts = stripes(x, y, threads);
    std::vector<RangeSums> local(parts.size());
    std::vector<std::thread> pool;
    auto work = [&](size_t w) {
        RangeSums acc;
        acc.sum_d = 0;
        acc.sum_omega = 0;
        for (uint64_t m = parts[w].first; m <= parts[w].second; ++m) {
            acc.sum_d += left_edge_value(m, table);
            acc.sum_omega += static_cast<unsigned long>(uint64_t(1) << hamming_delta(m));
        }
        local[w] = std::move(acc);
    };
    if (parts.size() == 1) {
        work(0);
    } else {
        for (size_t w = 0; w < parts.size(); ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    RangeSums out;
    out.sum_d = 0;
    out.sum_omega = 0;
    for (auto& l : local) {
        out.sum_d += l.sum_d;
        out.sum_omega += l.sum_omega;
    }
    return out;
}

void write_bfile(const SequenceRecord& seq, long long offset, std::ostream& out) {
    for (size_t i = 0; i < seq.terms.size(); ++i)
        out << (offset + static_cast<long long>(i)) << ' ' << seq.terms[i].get_str() << '\n';
}

}  // namespace zgame

#include "zgame/triangle.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "zgame/errors.hpp"
#include "zgame/parallel.hpp"

namespace zgame {

const std::vector<FactoredInteger>& TriangleSlice::row(size_t m) const {
    if (m >= rows_.size()) throw std::out_of_range("TriangleSlice::row: no such row");
    return rows_[m];
}

const FactoredInteger& TriangleSlice::entry(size_t m, size_t n) const {
    const auto& r = row(m);
    if (n == 0 || n > r.size())
        throw std::out_of_range("TriangleSlice::entry: column is 1-based");
    return r[n - 1];
}

std::vector<FactoredInteger> next_row(const std::vector<FactoredInteger>& row,
                                      unsigned threads) {
    if (row.size() < 2)
        throw std::invalid_argument("next_row: need at least two entries");
    std::vector<FactoredInteger> out(row.size() - 1);
    parallel_for(0, out.size(), threads,
                 [&](size_t i) { out[i] = z_op(row[i], row[i + 1]); });
    return out;
}

TriangleSlice build_triangle(std::vector<FactoredInteger> start, size_t depth,
                             unsigned threads) {
    if (depth == 0) throw std::invalid_argument("build_triangle: depth must be positive");
    if (start.size() < depth)
        throw std::invalid_argument("build_triangle: start row shorter than depth");
    TriangleSlice t;
    t.rows_.reserve(depth);
    t.rows_.push_back(std::move(start));
    for (size_t m = 1; m < depth; ++m) t.rows_.push_back(next_row(t.rows_.back(), threads));
    return t;
}

FactoredInteger entry_closed_form(uint64_t m, uint64_t n, const PrimeTable& table) {
    if (n == 0) throw std::invalid_argument("entry_closed_form: column is 1-based");
    if (n + m > table.count())
        throw std::out_of_range("entry_closed_form: table does not reach index n+m");
    const SierpinskiRow row = sierpinski_row(m);
    std::vector<PrimePower> factors;
    factors.reserve(row.offsets.size());
    for (uint64_t r : row.offsets)
        factors.push_back({static_cast<uint32_t>(n + r), 1});
    return FactoredInteger::from_factors(std::move(factors));
}

LeftEdgeEntry left_edge(uint64_t m, const PrimeTable& table) {
    return {m, entry_closed_form(m, 1, table)};
}

std::vector<BitSequence> p_slice(const TriangleSlice& triangle, uint32_t prime_index,
                                 size_t depth) {
    if (depth > triangle.depth())
        throw std::invalid_argument("p_slice: depth exceeds triangle depth");
    std::vector<BitSequence> out;
    out.reserve(depth);
    for (size_t m = 0; m < depth; ++m) {
        const auto& row = triangle.row(m);
        std::vector<uint64_t> support;
        for (size_t j = 0; j < row.size(); ++j)
            if (row[j].nu(prime_index) % 2 == 1) support.push_back(j);
        out.push_back(BitSequence::from_sorted(std::move(support)));
    }
    return out;
}

std::vector<BitSequence> p_slice(const std::vector<FactoredInteger>& start,
                                 uint32_t prime_index, size_t depth, unsigned threads) {
    if (depth > start.size())
        throw std::invalid_argument("p_slice: depth exceeds start length");
    return p_slice(build_triangle(std::vector<FactoredInteger>(start), depth, threads),
                   prime_index, depth);
}

std::vector<FactoredInteger> primes_start(size_t n) {
    std::vector<FactoredInteger> out;
    out.reserve(n);
    for (size_t i = 1; i <= n; ++i)
        out.push_back(FactoredInteger::prime(static_cast<uint32_t>(i)));
    return out;
}

std::vector<FactoredInteger> naturals_start(size_t n, PrimeTable& table) {
    std::vector<FactoredInteger> out;
    out.reserve(n);
    for (size_t v = 1; v <= n; ++v)
        out.push_back(FactoredInteger::from_value(static_cast<uint64_t>(v), table));
    return out;
}

namespace {

// Legendre: exponent of p in n!.
uint64_t factorial_nu(uint64_t n, uint64_t p) {
    uint64_t s = 0;
    while (n) {
        n /= p;
        s += n;
    }
    return s;
}

}  // namespace

std::vector<FactoredInteger> binomial_start(uint64_t n, PrimeTable& table) {
    table.ensure_value(std::max<uint64_t>(n, 2));
    std::vector<FactoredInteger> out;
    out.reserve(n + 1);
    for (uint64_t k = 0; k <= n; ++k) {
        std::vector<PrimePower> factors;
        for (size_t i = 1; i <= table.count() && table.prime(i) <= n; ++i) {
            const uint64_t p = table.prime(i);
            const uint64_t e = factorial_nu(n, p) - factorial_nu(k, p) - factorial_nu(n - k, p);
            if (e) factors.push_back({static_cast<uint32_t>(i), static_cast<uint32_t>(e)});
        }
        out.push_back(FactoredInteger::from_factors(std::move(factors)));
    }
    return out;
}

std::vector<FactoredInteger> start_from_values(const std::vector<mpz_class>& values,
                                               PrimeTable& table) {
    std::vector<FactoredInteger> out;
    out.reserve(values.size());
    for (const mpz_class& v : values) out.push_back(FactoredInteger::from_value(v, table));
    return out;
}

void write_triangle_csv(const TriangleSlice& triangle, PrimeTable& table,
                        std::ostream& out) {
    uint32_t max_idx = 0;
    for (size_t m = 0; m < triangle.depth(); ++m)
        for (const FactoredInteger& e : triangle.row(m))
            max_idx = std::max(max_idx, e.max_index());
    table.ensure_count(max_idx);
    for (size_t m = 0; m < triangle.depth(); ++m) {
        const auto& row = triangle.row(m);
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) out << ',';
            out << row[j].decimal(table);
        }
        out << '\n';
    }
}

void write_triangle_json(const TriangleSlice& triangle, std::ostream& out) {
    nlohmann::json rows = nlohmann::json::array();
    for (size_t m = 0; m < triangle.depth(); ++m) {
        nlohmann::json row = nlohmann::json::array();
        for (const FactoredInteger& e : triangle.row(m)) {
            nlohmann::json entry = nlohmann::json::array();
            for (const PrimePower& f : e.factors())
                entry.push_back({f.index, f.exponent});
            row.push_back(std::move(entry));
        }
        rows.push_back(std::move(row));
    }
    nlohmann::json doc{{"format", "zgame-triangle"},
                       {"version", 1},
                       {"depth", triangle.depth()},
                       {"rows", std::move(rows)}};
    out << doc.dump() << '\n';
}

}  // namespace zgame

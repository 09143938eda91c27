#include "zgame/verify.hpp"

#include <algorithm>
#include <iterator>
#include <random>
#include <stdexcept>

#include "zgame/bitseq.hpp"
#include "zgame/factored.hpp"
#include "zgame/sequences.hpp"
#include "zgame/triangle.hpp"

namespace zgame {

namespace {

bool is_power_of_two(uint64_t v) {
    return v != 0 && (v & (v - 1)) == 0;
}

struct Check {
    SuiteResult r;
    explicit Check(std::string name) {
        r.name = std::move(name);
        r.passed = true;
    }
    void count() { ++r.checks; }
    void fail(std::string msg) {
        if (r.passed) {
            r.passed = false;
            r.detail = std::move(msg);
        }
    }
    bool ok() const { return r.passed; }
};

SuiteResult suite_thm1(uint64_t bound, PrimeTable& table, unsigned threads) {
    if (bound == 0) bound = 4096;
    Check c("thm1");
    table.ensure_count(static_cast<size_t>(bound + 1));
    for (uint64_t m = 0; m <= bound && c.ok(); ++m) {
        const FactoredInteger d = entry_closed_form(m, 1, table);
        c.count();
        if (!is_power_of_two(d.omega()))
            c.fail("m=" + std::to_string(m) + ": omega=" + std::to_string(d.omega()) +
                   " is not a power of two (closed form)");
    }
    const uint64_t iter_bound = std::min<uint64_t>(bound, 256);
    const TriangleSlice tri =
        build_triangle(primes_start(static_cast<size_t>(iter_bound + 1)),
                       static_cast<size_t>(iter_bound + 1), threads);
    for (uint64_t m = 0; m <= iter_bound && c.ok(); ++m) {
        const FactoredInteger& d = tri.entry(static_cast<size_t>(m), 1);
        c.count();
        if (!is_power_of_two(d.omega()))
            c.fail("m=" + std::to_string(m) + ": omega=" + std::to_string(d.omega()) +
                   " is not a power of two (iterated)");
        c.count();
        if (!(d == entry_closed_form(m, 1, table)))
            c.fail("m=" + std::to_string(m) + ": closed form and iteration disagree");
    }
    return c.r;
}

SuiteResult suite_thm2(uint64_t bound, PrimeTable&, unsigned threads) {
    if (bound == 0) bound = 256;
    Check c("thm2");
    const TriangleSlice tri = build_triangle(primes_start(static_cast<size_t>(bound)),
                                             static_cast<size_t>(bound), threads);
    for (size_t m = 0; m < tri.depth() && c.ok(); ++m) {
        const auto& row = tri.row(m);
        const size_t omega0 = row.front().omega();
        for (size_t j = 1; j < row.size(); ++j) {
            c.count();
            if (row[j].omega() != omega0) {
                c.fail("row m=" + std::to_string(m) + ": omega changes at n=" +
                       std::to_string(j + 1));
                break;
            }
        }
    }
    return c.r;
}

SuiteResult suite_thm4(uint64_t bound, PrimeTable&, unsigned) {
    if (bound == 0) bound = 256;
    Check c("thm4");
    for (uint64_t L = 1; L <= bound && c.ok(); L <<= 1) {
        for (uint64_t k = 0; k < L && c.ok(); ++k) {
            c.count();
            if (!(phi_iter(BitSequence::unit(k), L) == BitSequence::unit(k)))
                c.fail("k=" + std::to_string(k) + " does not return after " +
                       std::to_string(L) + " steps");
        }
    }
    return c.r;
}

SuiteResult suite_prop1(uint64_t bound, PrimeTable&, unsigned) {
    if (bound == 0) bound = 100;
    Check c("prop1");
    std::mt19937_64 rng(0x5eed0001ull);
    for (uint64_t i = 0; i < bound && c.ok(); ++i) {
        std::vector<uint64_t> sup;
        if (i > 0)  // keep the zero sequence as the first sample
            for (uint64_t idx = 0; idx < 64; ++idx)
                if (rng() & 1) sup.push_back(idx);
        const BitSequence w = BitSequence::from_sorted(std::move(sup));
        for (unsigned s = 1; s <= 6 && c.ok(); ++s) {
            const uint64_t shift = uint64_t(1) << s;
            std::vector<uint64_t> shifted;
            shifted.reserve(w.support().size());
            for (uint64_t v : w.support()) shifted.push_back(v + shift);
            std::vector<uint64_t> expect;
            std::set_symmetric_difference(w.support().begin(), w.support().end(),
                                          shifted.begin(), shifted.end(),
                                          std::back_inserter(expect));
            c.count();
            if (!(psi_iter(w, shift) == BitSequence::from_sorted(std::move(expect))))
                c.fail("sample " + std::to_string(i) + ", s=" + std::to_string(s));
        }
    }
    return c.r;
}

SuiteResult suite_prop2(uint64_t bound, PrimeTable&, unsigned) {
    if (bound == 0) bound = 128;
    Check c("prop2");
    for (uint64_t k = 0; k <= bound && c.ok(); ++k) {
        for (uint64_t m = 0; m <= bound && c.ok(); ++m) {
            const BitSequence w = psi_iter(BitSequence::unit(k), m);
            std::vector<char> bits(static_cast<size_t>(k + m + 1), 0);
            for (uint64_t v : w.support()) bits[static_cast<size_t>(v)] = 1;
            for (uint64_t n = 0; n <= bound; ++n) {
                const int got = n < bits.size() ? bits[static_cast<size_t>(n)] : 0;
                const int want = binomial_parity(m, static_cast<int64_t>(n) -
                                                        static_cast<int64_t>(k));
                c.count();
                if (got != want) {
                    c.fail("k=" + std::to_string(k) + " m=" + std::to_string(m) +
                           " n=" + std::to_string(n));
                    break;
                }
            }
        }
    }
    return c.r;
}

SuiteResult suite_prop3(uint64_t bound, PrimeTable&, unsigned) {
    if (bound == 0) bound = 1024;
    Check c("prop3");
    const uint64_t ks[] = {0, 1, 5, 26};
    for (uint64_t m = 0; m <= bound && c.ok(); ++m) {
        const uint64_t expect = uint64_t(1) << hamming_delta(m);
        c.count();
        if (sierpinski_row(m).offsets.size() != expect)
            c.fail("m=" + std::to_string(m) + ": row size != 2^delta");
        for (uint64_t k : ks) {
            c.count();
            if (psi_iter(BitSequence::unit(k), m).ones() != expect) {
                c.fail("k=" + std::to_string(k) + " m=" + std::to_string(m) +
                       ": support size != 2^delta");
                break;
            }
        }
    }
    return c.r;
}

SuiteResult suite_closed_vs_iter(uint64_t bound, PrimeTable& table, unsigned threads) {
    if (bound == 0) bound = 128;
    Check c("closed-vs-iter");
    table.ensure_count(static_cast<size_t>(bound));
    const TriangleSlice tri = build_triangle(primes_start(static_cast<size_t>(bound)),
                                             static_cast<size_t>(bound), threads);
    for (size_t m = 0; m < tri.depth() && c.ok(); ++m) {
        for (size_t n = 1; n <= tri.row_length(m); ++n) {
            c.count();
            if (!(tri.entry(m, n) == entry_closed_form(m, n, table))) {
                c.fail("m=" + std::to_string(m) + " n=" + std::to_string(n));
                break;
            }
        }
    }
    return c.r;
}

SuiteResult suite_delta(uint64_t bound, PrimeTable&, unsigned) {
    if (bound == 0) bound = 8;
    Check c("delta");
    const uint8_t prefix[16] = {0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4};
    for (uint64_t m = 0; m < 16; ++m) {
        c.count();
        if (hamming_delta(m) != prefix[m])
            c.fail("delta prefix mismatch at m=" + std::to_string(m));
    }
    for (uint64_t t = 0; t < (uint64_t(1) << 16) && c.ok(); ++t) {
        for (unsigned s = 1; s <= 8; ++s) {
            c.count();
            if (hamming_delta(t << s) != hamming_delta(t)) {
                c.fail("delta(t*2^s) != delta(t) at t=" + std::to_string(t) +
                       " s=" + std::to_string(s));
                break;
            }
        }
    }
    for (unsigned s = 1; s <= 16 && c.ok(); ++s) {
        const uint64_t block = uint64_t(1) << s;
        for (uint64_t j = 0; j < block; ++j) {
            c.count();
            if (hamming_delta(block + j) != hamming_delta(j) + 1) {
                c.fail("delta(2^s+j) != delta(j)+1 at s=" + std::to_string(s) +
                       " j=" + std::to_string(j));
                break;
            }
        }
    }
    for (unsigned t = 1; t <= bound && c.ok(); ++t) {
        const DeltaMatrix mat = delta_matrix(t);
        const size_t side = mat.side;
        for (size_t i = 0; i < side && c.ok(); ++i) {
            for (size_t j = 0; j < side; ++j) {
                c.count();
                if (mat.entry(i, j) != hamming_delta(i) + hamming_delta(j)) {
                    c.fail("t=" + std::to_string(t) + ": entry != delta(i)+delta(j)");
                    break;
                }
                c.count();
                if (mat.entry(i, j) != mat.entry(j, i)) {
                    c.fail("t=" + std::to_string(t) + ": matrix not symmetric");
                    break;
                }
                c.count();
                if (mat.entry(i, j) + mat.entry(side - 1 - j, side - 1 - i) != 2 * t) {
                    c.fail("t=" + std::to_string(t) + ": anti-diagonal sum != 2t");
                    break;
                }
            }
        }
    }
    if (c.ok()) {
        // 4x4 block motif of the order-4 square: every block is the
        // top-left block shifted by delta(I)+delta(J)
        const DeltaMatrix mat = delta_matrix(4);
        for (size_t bi = 0; bi < 4 && c.ok(); ++bi)
            for (size_t bj = 0; bj < 4; ++bj)
                for (size_t a = 0; a < 4; ++a)
                    for (size_t b = 0; b < 4; ++b) {
                        c.count();
                        if (mat.entry(4 * bi + a, 4 * bj + b) !=
                            mat.entry(a, b) + hamming_delta(bi) + hamming_delta(bj)) {
                            c.fail("block motif fails at block (" + std::to_string(bi) +
                                   "," + std::to_string(bj) + ")");
                            break;
                        }
                    }
    }
    return c.r;
}

SuiteResult suite_slices(uint64_t bound, PrimeTable&, unsigned threads) {
    if (bound == 0) bound = 64;
    Check c("slices");
    const size_t width = 2 * static_cast<size_t>(bound);  // keep rows wider than any support
    const TriangleSlice tri =
        build_triangle(primes_start(width), static_cast<size_t>(bound), threads);
    for (uint32_t k = 1; k <= bound && c.ok(); ++k) {
        const std::vector<BitSequence> rows = p_slice(tri, k, static_cast<size_t>(bound));
        c.count();
        if (!(rows.front() == BitSequence::unit(k - 1))) {
            c.fail("k=" + std::to_string(k) + ": row 0 is not unit(k-1)");
            continue;
        }
        BitSequence cur = rows.front();
        for (size_t m = 1; m < rows.size(); ++m) {
            cur = phi_step(cur);
            c.count();
            if (!(rows[m] == cur)) {
                c.fail("k=" + std::to_string(k) + " m=" + std::to_string(m) +
                       ": slice differs from iterated phi");
                break;
            }
        }
    }
    return c.r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "thm1", "thm2", "thm4", "prop1", "prop2",
        "prop3", "closed-vs-iter", "delta", "slices"};
    return names;
}

SuiteResult run_suite(const std::string& name, uint64_t bound, PrimeTable& table,
                      unsigned threads) {
    if (name == "thm1") return suite_thm1(bound, table, threads);
    if (name == "thm2") return suite_thm2(bound, table, threads);
    if (name == "thm4") return suite_thm4(bound, table, threads);
    if (name == "prop1") return suite_prop1(bound, table, threads);
    if (name == "prop2") return suite_prop2(bound, table, threads);
    if (name == "prop3") return suite_prop3(bound, table, threads);
    if (name == "closed-vs-iter") return suite_closed_vs_iter(bound, table, threads);
    if (name == "delta") return suite_delta(bound, table, threads);
    if (name == "slices") return suite_slices(bound, table, threads);
    throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_all_suites(PrimeTable& table, unsigned threads) {
    std::vector<SuiteResult> out;
    out.reserve(suite_names().size());
    for (const std::string& name : suite_names())
        out.push_back(run_suite(name, 0, table, threads));
    return out;
}

}  // namespace zgame

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "zgame/bitseq.hpp"
#include "zgame/errors.hpp"
#include "zgame/sequences.hpp"

using namespace zgame;

TEST_CASE("delta matrix") {
    SUBCASE("order 4") {
        const auto m = delta_matrix(4);
        REQUIRE(m.side == 16);
        const uint8_t first_row[16] = {0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4};
        for (size_t j = 0; j < 16; ++j) CHECK(m.entry(0, j) == first_row[j]);
        CHECK(m.entry(0, 15) == 4);
        for (size_t i = 0; i < 16; ++i)
            for (size_t j = 0; j < 16; ++j)
                REQUIRE(m.entry(i, j) + m.entry(15 - j, 15 - i) == 8);
    }
    SUBCASE("order 1") {
        const auto m = delta_matrix(1);
        CHECK(m.entry(0, 0) == 0);
        CHECK(m.entry(0, 1) == 1);
        CHECK(m.entry(1, 0) == 1);
        CHECK(m.entry(1, 1) == 2);
    }
    SUBCASE("identities up to order 8") {
        for (unsigned t = 1; t <= 8; ++t) {
            const auto m = delta_matrix(t);
            for (size_t i = 0; i < m.side; ++i)
                for (size_t j = 0; j < m.side; ++j) {
                    REQUIRE(m.entry(i, j) ==
                            oracles::naive_bit_count(i) + oracles::naive_bit_count(j));
                    REQUIRE(m.entry(i, j) == m.entry(j, i));
                    REQUIRE(m.entry(i, j) + m.entry(m.side - 1 - j, m.side - 1 - i) == 2 * t);
                }
        }
    }
    SUBCASE("bounds") {
        CHECK_THROWS_AS(delta_matrix(0), std::invalid_argument);
        CHECK_THROWS_AS(delta_matrix(13), limit_error);
    }
}

TEST_CASE("binary weight identities") {
    for (uint64_t t = 0; t < 2048; ++t)
        for (unsigned s = 1; s <= 8; ++s)
            REQUIRE(hamming_delta(t << s) == hamming_delta(t));
    for (unsigned s = 1; s <= 12; ++s)
        for (uint64_t j = 0; j < (uint64_t(1) << s); ++j)
            REQUIRE(hamming_delta((uint64_t(1) << s) + j) == hamming_delta(j) + 1);
}

TEST_CASE("delta sequence record") {
    const auto rec = delta_sequence(8);
    REQUIRE(rec.terms.size() == 8);
    CHECK(rec.terms[0] == 0);
    CHECK(rec.terms[7] == 3);
}

TEST_CASE("naturals left edge") {
    PrimeTable t(200);
    const auto rec = natural_left_edge(15, t);
    const long expect[15] = {1, 2, 3, 6, 5, 15, 105, 70, 1, 5, 33, 55, 65, 273, 1001};
    REQUIRE(rec.terms.size() == 15);
    for (size_t i = 0; i < 15; ++i) CHECK(rec.terms[i] == expect[i]);
    CHECK(rec.terms[0] == 1);
    CHECK(rec.terms[8] == 1);

    SUBCASE("stable under window extension") {
        const auto a = natural_left_edge(60, t);
        const auto b = natural_left_edge(110, t);
        for (size_t i = 0; i < 60; ++i) REQUIRE(a.terms[i] == b.terms[i]);
    }
    SUBCASE("zero count rejected") {
        CHECK_THROWS_AS(natural_left_edge(0, t), std::invalid_argument);
    }
}

TEST_CASE("sorted dedup") {
    SequenceRecord raw;
    raw.name = "raw";
    SUBCASE("empty") { CHECK(sorted_dedup(raw).terms.empty()); }
    SUBCASE("small") {
        raw.terms = {mpz_class(3), mpz_class(1), mpz_class(3), mpz_class(2)};
        const auto out = sorted_dedup(raw);
        REQUIRE(out.terms.size() == 3);
        CHECK(out.terms[0] == 1);
        CHECK(out.terms[1] == 2);
        CHECK(out.terms[2] == 3);
    }
    SUBCASE("first 500 natural left edge terms") {
        PrimeTable t(200);
        const auto sorted = sorted_dedup(natural_left_edge(500, t));
        const long prefix[12] = {1, 2, 3, 5, 6, 15, 17, 33, 55, 65, 70, 105};
        REQUIRE(sorted.terms.size() >= 12);
        for (size_t i = 0; i < 12; ++i) CHECK(sorted.terms[i] == prefix[i]);
    }
}

TEST_CASE("range extrema") {
    PrimeTable t(64);
    SUBCASE("first sixteen rows") {
        const auto ex = range_extrema(0, 15, t);
        CHECK(ex.min_d == 2);
        CHECK(ex.max_d == mpz_class("32589158477190044730"));
        CHECK(ex.min_omega == 1);
        CHECK(ex.max_omega == 16);
    }
    SUBCASE("single point") {
        const auto ex = range_extrema(0, 0, t);
        CHECK(ex.min_d == 2);
        CHECK(ex.max_d == 2);
        CHECK(ex.min_omega == 1);
        CHECK(ex.max_omega == 1);
    }
    SUBCASE("interior window") {
        const auto ex = range_extrema(8, 11, t);
        CHECK(ex.min_omega == 2);
        CHECK(ex.max_omega == 8);
    }
    SUBCASE("threads do not change the result") {
        const auto a = range_extrema(0, 300, t, 1);
        const auto b = range_extrema(0, 300, t, 4);
        CHECK(a.min_d == b.min_d);
        CHECK(a.max_d == b.max_d);
        CHECK(a.min_omega == b.min_omega);
        CHECK(a.max_omega == b.max_omega);
    }
    SUBCASE("bad range") { CHECK_THROWS_AS(range_extrema(3, 2, t), std::invalid_argument); }
}

TEST_CASE("range sums") {
    PrimeTable t(64);
    SUBCASE("omega sum over the first 16 rows") {
        // brute force first: sum of 2^delta(m) over m < 16
        uint64_t brute = 0;
        for (uint64_t m = 0; m < 16; ++m) brute += uint64_t(1) << oracles::naive_bit_count(m);
        REQUIRE(brute == 81);  // 3^4
        CHECK(range_sums(0, 15, t).sum_omega == 81);
    }
    SUBCASE("d sum over the first four rows") {
        CHECK(range_sums(0, 3, t).sum_d == 228);  // 2 + 6 + 10 + 210
    }
    SUBCASE("single point") {
        const auto s = range_sums(5, 5, t);
        CHECK(s.sum_d == 858);
        CHECK(s.sum_omega == 4);
    }
    SUBCASE("power-of-three identity, brute force vs range") {
        PrimeTable wide(260);
        uint64_t pow3 = 1;
        for (unsigned tt = 0; tt <= 8; ++tt) {
            uint64_t brute = 0;
            for (uint64_t m = 0; m < (uint64_t(1) << tt); ++m)
                brute += uint64_t(1) << oracles::naive_bit_count(m);
            REQUIRE(brute == pow3);
            REQUIRE(range_sums(0, (uint64_t(1) << tt) - 1, wide).sum_omega == pow3);
            pow3 *= 3;
        }
    }
    SUBCASE("threads do not change the sums") {
        const auto a = range_sums(0, 300, t, 1);
        const auto b = range_sums(0, 300, t, 4);
        CHECK(a.sum_d == b.sum_d);
        CHECK(a.sum_omega == b.sum_omega);
    }
}

TEST_CASE("b-file output") {
    std::ostringstream out;
    write_bfile(delta_sequence(4), 0, out);
    CHECK(out.str() == "0 0\n1 1\n2 1\n3 2\n");
    std::ostringstream shifted;
    write_bfile(delta_sequence(2), 1, shifted);
    CHECK(shifted.str() == "1 0\n2 1\n");
}

#ifndef ZGAME_PRIMES_HPP
#define ZGAME_PRIMES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zgame {

// 1-based table of primes: prime(1) == 2, prime(2) == 3. Backed by a
// segmented sieve that grows by doubling. Growth is the single-writer
// operation; lookups are safe to share read-only across threads.
class PrimeTable {
public:
    static constexpr size_t kDefaultCeiling = 10'000'000;  // prime count, not values

    explicit PrimeTable(size_t initial_count = 64);

    size_t count() const { return primes_.size(); }
    uint64_t largest() const { return primes_.empty() ? 0 : primes_.back(); }

    uint64_t prime(size_t k) const;  // 1-based; out_of_range beyond count()
    std::optional<size_t> index_of(uint64_t value) const;

    void ensure_count(size_t k);            // limit_error beyond the ceiling
    void ensure_value(uint64_t value);      // grow until largest() >= value

    size_t ceiling() const { return ceiling_; }
    void set_ceiling(size_t max_count) { ceiling_ = max_count; }

    // Cache file: "ZGPRIMT1" magic, uint64 count, then count raw uint64
    // primes in host byte order. Loading cross-checks the leading 100
    // entries against a fresh sieve and rejects anything inconsistent;
    // returns false without touching the table in that case.
    bool load_cache(const std::string& path);
    void save_cache(const std::string& path) const;

private:
    void sieve_to(uint64_t new_limit);

    std::vector<uint64_t> primes_;
    uint64_t sieve_limit_ = 1;  // every prime <= sieve_limit_ is present
    size_t ceiling_ = kDefaultCeiling;
};

PrimeTable build_table(size_t count);

// Plain sieve of Eratosthenes; the reference oracle for cache validation
// and tests.
std::vector<uint64_t> simple_sieve(uint64_t limit);

}  // namespace zgame

#endif  // ZGAME_PRIMES_HPP

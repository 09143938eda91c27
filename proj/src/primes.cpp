#include "zgame/primes.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "zgame/errors.hpp"

namespace zgame {

namespace {

constexpr uint64_t kBootstrapLimit = 1 << 16;
constexpr uint64_t kSegment = 1 << 20;
constexpr char kCacheMagic[8] = {'Z', 'G', 'P', 'R', 'I', 'M', 'T', '1'};

}  // namespace

std::vector<uint64_t> simple_sieve(uint64_t limit) {
    std::vector<uint64_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        if (i <= limit / i)
            for (uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

PrimeTable::PrimeTable(size_t initial_count) {
    ensure_count(std::max<size_t>(initial_count, 1));
}

uint64_t PrimeTable::prime(size_t k) const {
    if (k == 0) throw std::invalid_argument("PrimeTable::prime: index is 1-based");
    if (k > primes_.size())
        throw std::out_of_range("PrimeTable::prime: index beyond table, grow it first");
    return primes_[k - 1];
}

std::optional<size_t> PrimeTable::index_of(uint64_t value) const {
    auto it = std::lower_bound(primes_.begin(), primes_.end(), value);
    if (it == primes_.end() || *it != value) return std::nullopt;
    return static_cast<size_t>(it - primes_.begin()) + 1;
}

void PrimeTable::sieve_to(uint64_t new_limit) {
    if (new_limit <= sieve_limit_) return;
    if (sieve_limit_ < kBootstrapLimit) {
        primes_ = simple_sieve(kBootstrapLimit);
        sieve_limit_ = kBootstrapLimit;
        if (primes_.size() > ceiling_)
            throw limit_error("PrimeTable: prime count ceiling exceeded");
        if (new_limit <= sieve_limit_) return;
    }
    while (sieve_limit_ < new_limit) {
        const uint64_t lo = sieve_limit_ + 1;
        const uint64_t hi = std::min(new_limit, sieve_limit_ + kSegment);
        std::vector<bool> composite(hi - lo + 1, false);
        for (uint64_t p : primes_) {
            if (p > hi / p) break;
            uint64_t start = ((lo + p - 1) / p) * p;
            if (start < p * p) start = p * p;
            for (uint64_t j = start; j <= hi; j += p) composite[j - lo] = true;
        }
        for (uint64_t v = lo; v <= hi; ++v) {
            if (composite[v - lo]) continue;
            primes_.push_back(v);
            if (primes_.size() > ceiling_)
                throw limit_error("PrimeTable: prime count ceiling exceeded");
        }
        sieve_limit_ = hi;
    }
}

void PrimeTable::ensure_count(size_t k) {
    if (k > ceiling_) throw limit_error("PrimeTable: requested count exceeds ceiling");
    while (primes_.size() < k)
        sieve_to(std::max<uint64_t>(sieve_limit_ * 2, kBootstrapLimit));
}

void PrimeTable::ensure_value(uint64_t value) {
    if (value > sieve_limit_) sieve_to(value);
}

bool PrimeTable::load_cache(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    char magic[8];
    if (!in.read(magic, sizeof magic) || std::memcmp(magic, kCacheMagic, sizeof magic) != 0)
        return false;
    uint64_t count = 0;
    if (!in.read(reinterpret_cast<char*>(&count), sizeof count)) return false;
    if (count == 0 || count > ceiling_) return false;
    std::vector<uint64_t> loaded(count);
    if (!in.read(reinterpret_cast<char*>(loaded.data()),
                 static_cast<std::streamsize>(count * sizeof(uint64_t))))
        return false;
    for (size_t i = 1; i < loaded.size(); ++i)
        if (loaded[i] <= loaded[i - 1]) return false;
    const size_t probe = std::min<size_t>(100, loaded.size());
    const std::vector<uint64_t> ref = simple_sieve(600);  // p_100 = 541
    if (ref.size() < probe) return false;
    for (size_t i = 0; i < probe; ++i)
        if (loaded[i] != ref[i]) return false;
    primes_ = std::move(loaded);
    sieve_limit_ = primes_.back();
    return true;
}

void PrimeTable::save_cache(const std::string& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("PrimeTable: cannot write cache file " + path);
    out.write(kCacheMagic, sizeof kCacheMagic);
    const uint64_t count = primes_.size();
    out.write(reinterpret_cast<const char*>(&count), sizeof count);
    out.write(reinterpret_cast<const char*>(primes_.data()),
              static_cast<std::streamsize>(count * sizeof(uint64_t)));
    if (!out) throw std::runtime_error("PrimeTable: short write to cache file " + path);
}

PrimeTable build_table(size_t count) {
    return PrimeTable(count);
}

}  // namespace zgame

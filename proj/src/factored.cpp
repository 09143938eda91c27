#include "zgame/factored.hpp"

#include <algorithm>
#include <stdexcept>

#include "zgame/errors.hpp"

namespace zgame {

FactoredInteger FactoredInteger::prime(uint32_t index) {
    if (index == 0) throw std::invalid_argument("FactoredInteger: prime index is 1-based");
    FactoredInteger f;
    f.factors_ = {{index, 1}};
    return f;
}

FactoredInteger FactoredInteger::from_factors(std::vector<PrimePower> factors) {
    std::erase_if(factors, [](const PrimePower& f) { return f.exponent == 0; });
    for (const PrimePower& f : factors)
        if (f.index == 0) throw std::invalid_argument("FactoredInteger: prime index is 1-based");
    std::sort(factors.begin(), factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.index < b.index; });
    for (size_t i = 0; i + 1 < factors.size(); ++i)
        if (factors[i].index == factors[i + 1].index)
            throw std::invalid_argument("FactoredInteger: duplicate prime index");
    FactoredInteger out;
    out.factors_ = std::move(factors);
    return out;
}

uint32_t FactoredInteger::nu(uint32_t index) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), index,
                               [](const PrimePower& f, uint32_t i) { return f.index < i; });
    if (it == factors_.end() || it->index != index) return 0;
    return it->exponent;
}

bool FactoredInteger::squarefree() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const PrimePower& f) { return f.exponent == 1; });
}

uint32_t FactoredInteger::max_index() const {
    return factors_.empty() ? 0 : factors_.back().index;
}

mpz_class FactoredInteger::value(const PrimeTable& table) const {
    mpz_class v = 1;
    mpz_class pp;
    for (const PrimePower& f : factors_) {
        mpz_ui_pow_ui(pp.get_mpz_t(), table.prime(f.index), f.exponent);
        v *= pp;
    }
    return v;
}

std::string FactoredInteger::decimal(const PrimeTable& table) const {
    return value(table).get_str();
}

std::string FactoredInteger::factor_string(const PrimeTable& table) const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const PrimePower& f : factors_) {
        if (!out.empty()) out += "·";
        out += std::to_string(table.prime(f.index));
        if (f.exponent > 1) {
            out += '^';
            out += std::to_string(f.exponent);
        }
    }
    return out;
}

FactoredInteger FactoredInteger::from_value(uint64_t value, PrimeTable& table) {
    mpz_class v;
    mpz_set_ui(v.get_mpz_t(), static_cast<unsigned long>(value));
    return from_value(v, table);
}

FactoredInteger FactoredInteger::from_value(const mpz_class& value, PrimeTable& table) {
    if (value <= 0) throw std::invalid_argument("FactoredInteger: value must be positive");
    mpz_class rest = value;
    std::vector<PrimePower> factors;
    for (size_t i = 1; rest > 1; ++i) {
        table.ensure_count(i);
        const unsigned long p = static_cast<unsigned long>(table.prime(i));
        mpz_class square;
        mpz_ui_pow_ui(square.get_mpz_t(), p, 2);
        if (square > rest) break;
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            uint32_t e = 0;
            do {
                mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
                ++e;
            } while (mpz_divisible_ui_p(rest.get_mpz_t(), p));
            factors.push_back({static_cast<uint32_t>(i), e});
        }
    }
    if (rest > 1) {
        // no divisor at or below sqrt(rest), so rest itself is prime
        if (!rest.fits_ulong_p())
            throw limit_error("FactoredInteger: prime cofactor exceeds table coverage");
        const uint64_t p = rest.get_ui();
        table.ensure_value(p);
        const auto idx = table.index_of(p);
        if (!idx) throw limit_error("FactoredInteger: prime cofactor missing from table");
        factors.push_back({static_cast<uint32_t>(*idx), 1});
    }
    FactoredInteger out;
    out.factors_ = std::move(factors);
    return out;
}

FactoredInteger z_op(const FactoredInteger& a, const FactoredInteger& b) {
    std::vector<PrimePower> out;
    out.reserve(a.factors_.size() + b.factors_.size());
    auto ia = a.factors_.begin(), ea = a.factors_.end();
    auto ib = b.factors_.begin(), eb = b.factors_.end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->index < ib->index)) {
            out.push_back(*ia++);
        } else if (ia == ea || ib->index < ia->index) {
            out.push_back(*ib++);
        } else {
            const uint32_t d = ia->exponent > ib->exponent ? ia->exponent - ib->exponent
                                                           : ib->exponent - ia->exponent;
            if (d != 0) out.push_back({ia->index, d});
            ++ia;
            ++ib;
        }
    }
    FactoredInteger r;
    r.factors_ = std::move(out);
    return r;
}

}  // namespace zgame

#include "rootpair/numtheory.hpp"

#include <algorithm>

#include "rootpair/errors.hpp"

namespace rootpair {

namespace {
constexpr uint64_t kFactorizeCap = 1'000'000'000'000ULL;
} // namespace

Factorization factorize(uint64_t n) {
    if (n == 0) {
        throw usage_error("factorize: n must be positive");
    }
    if (n > kFactorizeCap) {
        throw usage_error("factorize: n exceeds the 10^12 trial-division cap");
    }
    Factorization out;
    out.value = n;
    auto strip = [&](uint64_t q) {
        uint32_t e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        if (e > 0) {
            out.factors.emplace_back(q, e);
        }
    };
    strip(2);
    for (uint64_t q = 3; q * q <= n; q += 2) {
        strip(q);
    }
    if (n > 1) {
        out.factors.emplace_back(n, 1);
    }
    return out;
}

uint64_t euler_phi(const Factorization& f) {
    uint64_t phi = 1;
    for (auto [q, e] : f.factors) {
        phi *= q - 1;
        for (uint32_t i = 1; i < e; ++i) {
            phi *= q;
        }
    }
    return phi;
}

int mobius(const Factorization& f) {
    for (auto [q, e] : f.factors) {
        (void)q;
        if (e >= 2) {
            return 0;
        }
    }
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

uint32_t omega(const Factorization& f) {
    return static_cast<uint32_t>(f.factors.size());
}

std::vector<uint64_t> primes_in_range(uint64_t lo, uint64_t hi) {
    constexpr uint64_t kSieveCap = 100'000'000;
    if (hi > kSieveCap) {
        throw usage_error("primes_in_range: hi exceeds the 10^8 sieve cap");
    }
    std::vector<uint64_t> primes;
    if (hi < 2 || lo > hi) {
        return primes;
    }
    std::vector<uint8_t> composite(hi + 1, 0);
    for (uint64_t q = 2; q * q <= hi; ++q) {
        if (!composite[q]) {
            for (uint64_t t = q * q; t <= hi; t += q) {
                composite[t] = 1;
            }
        }
    }
    for (uint64_t n = std::max<uint64_t>(lo, 2); n <= hi; ++n) {
        if (!composite[n]) {
            primes.push_back(n);
        }
    }
    return primes;
}

std::vector<uint64_t> divisors(const Factorization& f) {
    std::vector<uint64_t> divs{1};
    for (auto [q, e] : f.factors) {
        const size_t base = divs.size();
        uint64_t qk = 1;
        for (uint32_t i = 1; i <= e; ++i) {
            qk *= q;
            for (size_t j = 0; j < base; ++j) {
                divs.push_back(divs[j] * qk);
            }
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace rootpair

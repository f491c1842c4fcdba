#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace rootpair {

/// Prime factorization of a positive integer, primes ascending.
struct Factorization {
    uint64_t value = 1;
    std::vector<std::pair<uint64_t, uint32_t>> factors; // (prime, exponent), exponent >= 1
};

/// Factor n by trial division. Accepts 1 <= n <= 10^12; factorize(1) has no factors.
Factorization factorize(uint64_t n);

/// Euler totient of the factored value; euler_phi(factorize(1)) == 1.
uint64_t euler_phi(const Factorization& f);

/// Moebius function: 0 if any squared prime divides, else (-1)^{#primes}.
int mobius(const Factorization& f);

/// Number of distinct prime divisors.
uint32_t omega(const Factorization& f);

/// All divisors of the factored value, ascending.
std::vector<uint64_t> divisors(const Factorization& f);

/// Primes in [lo, hi], ascending, by a plain sieve. hi is capped at 10^8.
std::vector<uint64_t> primes_in_range(uint64_t lo, uint64_t hi);

} // namespace rootpair

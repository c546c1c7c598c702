#pragma once

#include <cstdint>
#include <vector>

namespace sievewalk {

// Primes up to and including `limit`.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// Smallest-prime-factor table for [0, limit]; spf[0] = spf[1] = 0.
std::vector<std::uint32_t> spf_table(std::uint32_t limit);

// Mobius function on [0, limit]; mu[0] = 0.
std::vector<std::int8_t> mobius_table(std::uint32_t limit);

// Distinct prime factors, ascending. Trial division; fine at desk scale.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// floor(n^(1/k)) for k >= 1.
std::uint64_t integer_root(std::uint64_t n, unsigned k);

} // namespace sievewalk

#pragma once

#include <cstdint>
#include <span>

namespace anforge {

/// All primes below 2^22 in increasing order, sieved once.
std::span<const std::uint32_t> small_primes();

/// Index into small_primes() of the first prime strictly greater than n.
std::size_t first_prime_index_above(std::uint64_t n);

bool is_prime(std::uint64_t n);

}  // namespace anforge

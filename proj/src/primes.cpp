#include "anforge/primes.hpp"

#include <algorithm>
#include <vector>

namespace anforge {

namespace {

std::vector<std::uint32_t> sieve(std::uint32_t limit)
{
    std::vector<bool> composite(limit, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i < limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j < limit; j += i) composite[j] = true;
    }
    return out;
}

}  // namespace

std::span<const std::uint32_t> small_primes()
{
    static const std::vector<std::uint32_t> table = sieve(1U << 22);
    return table;
}

std::size_t first_prime_index_above(std::uint64_t n)
{
    auto primes = small_primes();
    auto it = std::upper_bound(primes.begin(), primes.end(), n);
    return static_cast<std::size_t>(it - primes.begin());
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace anforge

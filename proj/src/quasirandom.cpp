#include "vz0/quasirandom.hpp"

#include <stdexcept>

namespace vz0 {

double radical_inverse(std::uint64_t n, unsigned base) {
    if (base < 2) throw std::invalid_argument("radical_inverse: base must be >= 2");
    const std::uint64_t n_max = (std::uint64_t{1} << 63) - 2;
    if (n > n_max) throw std::out_of_range("radical_inverse: n exceeds 2^63 - 2");
    // Accumulate the digit-reversed value as an exact integer over base^k and
    // divide once, so the result is the correctly rounded rational (summing
    // scaled digits instead accumulates rounding error).
    unsigned __int128 reversed = 0;
    unsigned __int128 denom = 1;
    while (n > 0) {
        reversed = reversed * base + n % base;
        denom *= base;
        n /= base;
    }
    return static_cast<double>(reversed) / static_cast<double>(denom);
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    if (n < 2) throw std::out_of_range("primes_up_to: n must be >= 2");
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t i = 2; i * i <= n; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t k = i * i; k <= n; k += i) composite[k] = true;
    }
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (!composite[i]) primes.push_back(i);
    }
    return primes;
}

}  // namespace vz0

#ifndef VZ0_QUASIRANDOM_HPP
#define VZ0_QUASIRANDOM_HPP

#include <cstdint>
#include <vector>

namespace vz0 {

// Van der Corput radical inverse: the value of n's base-`base` digits
// mirrored about the radix point. Result lies in [0, 1).
// Throws std::out_of_range for n > 2^63 - 2 and std::invalid_argument for
// base < 2.
double radical_inverse(std::uint64_t n, unsigned base);

// All primes in [2, n], ascending (Sieve of Eratosthenes).
// Throws std::out_of_range for n < 2.
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

}  // namespace vz0

#endif

#pragma once

#include <cstdint>
#include <vector>

namespace wqmc {

// Ascending primes <= limit (plain Eratosthenes); limit >= 2.
std::vector<std::int64_t> sieve(std::int64_t limit);

// Deterministic primality by trial division; valid for 0 <= n <= 2^31 - 1.
bool is_prime(std::int64_t n);

// The band P_m = { ceil(m/2) < p <= m : p prime }, ascending. Nonempty for
// every m >= 2 (Bertrand's postulate).
struct PrimeBand {
    std::int64_t m = 0;
    std::vector<std::int64_t> primes;
};
PrimeBand prime_band(std::int64_t m);

// Empirical envelope of the band density: c_hat and C_hat are the min and max
// of |P_m| log(m) / m over m in [m_lo, m_hi], so
//   c_hat * m/log(m) <= |P_m| <= C_hat * m/log(m)
// holds for every m in the range by construction. Bound calculators default
// to these in place of analytic prime-counting constants, which keeps every
// number they print checkable against a sieve.
struct DensityConstants {
    double c_hat = 0.0;
    double C_hat = 0.0;
    std::int64_t m_lo = 0;
    std::int64_t m_hi = 0;
};
DensityConstants density_constants(std::int64_t m_lo, std::int64_t m_hi);

} // namespace wqmc

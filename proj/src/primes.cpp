#include "wqmc/primes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wqmc {

std::vector<std::int64_t> sieve(std::int64_t limit) {
    if (limit < 2) throw std::invalid_argument("sieve: limit must be >= 2");
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    std::vector<std::int64_t> primes;
    for (std::int64_t i = 2; i <= limit; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        primes.push_back(i);
        for (std::int64_t j = i * i; j <= limit; j += i) {
            composite[static_cast<std::size_t>(j)] = true;
        }
    }
    return primes;
}

bool is_prime(std::int64_t n) {
    if (n > std::numeric_limits<std::int32_t>::max()) {
        throw std::invalid_argument("is_prime: argument exceeds 2^31 - 1");
    }
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t q = 3; q * q <= n; q += 2) {
        if (n % q == 0) return false;
    }
    return true;
}

PrimeBand prime_band(std::int64_t m) {
    if (m < 2) throw std::invalid_argument("prime_band: m must be >= 2");
    const std::int64_t lo = (m + 1) / 2; // ceil(m/2), exclusive
    PrimeBand band;
    band.m = m;
    for (std::int64_t p = lo + 1; p <= m; ++p) {
        if (is_prime(p)) band.primes.push_back(p);
    }
    return band;
}

DensityConstants density_constants(std::int64_t m_lo, std::int64_t m_hi) {
    if (m_lo < 2 || m_lo > m_hi) {
        throw std::invalid_argument("density_constants: need 2 <= m_lo <= m_hi");
    }
    const std::vector<std::int64_t> primes = sieve(m_hi);
    DensityConstants dc;
    dc.m_lo = m_lo;
    dc.m_hi = m_hi;
    dc.c_hat = std::numeric_limits<double>::infinity();
    dc.C_hat = 0.0;
    for (std::int64_t m = m_lo; m <= m_hi; ++m) {
        const std::int64_t lo = (m + 1) / 2;
        const auto above = std::upper_bound(primes.begin(), primes.end(), lo);
        const auto upto = std::upper_bound(primes.begin(), primes.end(), m);
        const auto count = static_cast<double>(upto - above);
        const double ratio = count * std::log(static_cast<double>(m)) / static_cast<double>(m);
        dc.c_hat = std::min(dc.c_hat, ratio);
        dc.C_hat = std::max(dc.C_hat, ratio);
    }
    return dc;
}

} // namespace wqmc

#include "ruledcent/arith.hpp"

#include <numeric>

namespace ruledcent {

std::int64_t mod(std::int64_t x, std::int64_t m)
{
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

std::int64_t gcd(std::int64_t x, std::int64_t y) { return std::gcd(x, y); }

std::int64_t gcd(std::int64_t x, std::int64_t y, std::int64_t z)
{
    return std::gcd(std::gcd(x, y), z);
}

std::optional<std::int64_t> inverse_mod(std::int64_t x, std::int64_t m)
{
    // extended Euclid on (x mod m, m)
    std::int64_t r0 = m, r1 = mod(x, m);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1)
        return std::nullopt;
    return mod(t0, m);
}

std::vector<std::int64_t> solve_linear_congruence(std::int64_t a, std::int64_t c, std::int64_t m)
{
    std::vector<std::int64_t> out;
    std::int64_t g = std::gcd(mod(a, m), m);
    if (mod(c, g) != 0)
        return out;
    std::int64_t m2 = m / g;
    std::int64_t x0 = 0;
    if (m2 > 1) {
        auto inv = inverse_mod(mod(a, m) / g, m2);
        x0 = mod((mod(c, m) / g) % m2 * *inv, m2);
    }
    for (std::int64_t i = 0; i < g; ++i)
        out.push_back(x0 + i * m2);
    return out;
}

} // namespace ruledcent

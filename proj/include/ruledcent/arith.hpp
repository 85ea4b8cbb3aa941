#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace ruledcent {

// least nonnegative residue
std::int64_t mod(std::int64_t x, std::int64_t m);
std::int64_t gcd(std::int64_t x, std::int64_t y);
std::int64_t gcd(std::int64_t x, std::int64_t y, std::int64_t z);
std::optional<std::int64_t> inverse_mod(std::int64_t x, std::int64_t m);

// All x in [0, m) with a*x = c (mod m).
std::vector<std::int64_t> solve_linear_congruence(std::int64_t a, std::int64_t c, std::int64_t m);

} // namespace ruledcent

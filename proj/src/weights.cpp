#include "ruledcent/weights.hpp"

#include <algorithm>

#include "ruledcent/arith.hpp"

namespace ruledcent {

char point_name(FixedPoint p) { return "PQRS"[static_cast<int>(p)]; }

WeightPair make_pair_mod(std::int64_t x, std::int64_t y, std::int64_t n)
{
    x = mod(x, n);
    y = mod(y, n);
    return {std::min(x, y), std::max(x, y)};
}

WeightTable weights(const CyclicAction& x)
{
    const std::int64_t n = x.n, a = x.a, b = x.b, ar = mod(x.a * x.r, x.n);
    return {{make_pair_mod(a, b, n), make_pair_mod(a, -b, n), make_pair_mod(-a, ar - b, n),
             make_pair_mod(-a, -ar + b, n)}};
}

OrderedWeights other_end_weights(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t n)
{
    return {mod(-p, n), mod(p * r + q, n)};
}

bool check_edge_constraint(std::int64_t alpha, std::int64_t beta, std::int64_t k, std::int64_t e, std::int64_t n)
{
    std::int64_t d = mod(alpha - beta, n);
    std::int64_t ek = mod(e * k, n);
    return d == ek || d == mod(-ek, n);
}

std::array<EdgeWeights, 4> edge_weights(const CyclicAction& x)
{
    const std::int64_t n = x.n, a = x.a, b = x.b, ar = mod(x.a * x.r, x.n);
    using enum FixedPoint;
    return {{
        {P, Q, mod(b, n), mod(a, n), mod(-b, n), mod(a, n)},               // fiber
        {Q, R, mod(a, n), mod(-b, n), mod(-a, n), mod(ar - b, n)},          // section of self-intersection -r
        {R, S, mod(ar - b, n), mod(-a, n), mod(b - ar, n), mod(-a, n)},    // fiber
        {S, P, mod(-a, n), mod(b - ar, n), mod(a, n), mod(b, n)},          // section of self-intersection +r
    }};
}

std::vector<FixedPoint> unique_weight_points(const CyclicAction& x)
{
    WeightTable t = weights(x);
    std::vector<FixedPoint> out;
    for (FixedPoint p : all_fixed_points) {
        bool unique = std::none_of(all_fixed_points.begin(), all_fixed_points.end(),
                                   [&](FixedPoint q) { return q != p && t[q] == t[p]; });
        if (unique)
            out.push_back(p);
    }
    return out;
}

std::string to_string(const WeightPair& w)
{
    return "{" + std::to_string(w.lo) + "," + std::to_string(w.hi) + "}";
}

} // namespace ruledcent

#include "ruledcent/strata.hpp"

#include "ruledcent/arith.hpp"
#include "ruledcent/error.hpp"

namespace ruledcent {

std::int64_t stratum_codim(std::int64_t n, std::int64_t b, std::int64_t s)
{
    if (s < 2)
        return 0;
    // smallest positive j = b, then every n-th
    std::int64_t first = mod(b, n);
    if (first == 0)
        first = n;
    if (first > s - 1)
        return 0;
    return (s - 1 - first) / n + 1;
}

std::int64_t codim_oracle_even(std::int64_t n, std::int64_t b, std::int64_t k)
{
    std::int64_t count = 0;
    for (std::int64_t m = 1 - k; m <= k - 1; ++m)
        if (mod(m + (k - b), n) == 0)
            ++count;
    return count;
}

std::int64_t codim_oracle_odd(std::int64_t n, std::int64_t b, std::int64_t k)
{
    const std::int64_t s = 2 * k + 1;
    std::int64_t count = 0;
    for (std::int64_t m = 0; m <= s - 2; ++m)
        if (mod((k - m) + (k - b), n) == 0)
            ++count;
    return count;
}

static std::int64_t real_codim(std::int64_t r) { return r == 0 ? 0 : 2 * (r - 1); }

std::vector<Stratum> stratification(const ActionClass& c, const CyclicAction& x)
{
    if (!c.resolved())
        throw Error(ErrorCode::UnresolvedClass, "stratification is not known for " + class_label(c));
    std::vector<Stratum> out;
    const bool normalized = c.normalized.has_value();
    for (const ToricExtension& e : c.extensions->tori) {
        std::int64_t codim = normalized ? stratum_codim(x.n, e.circle_b, e.r) : 0;
        out.push_back({e.r, e.circle_b, codim, real_codim(e.r), codim == 0});
    }
    return out;
}

std::vector<Stratum> stratification(const SymplecticForm& form, const CyclicAction& x)
{
    return stratification(classify(form, x), x);
}

} // namespace ruledcent

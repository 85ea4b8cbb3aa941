#include "ruledcent/extensions.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <utility>

#include "ruledcent/arith.hpp"
#include "ruledcent/error.hpp"

namespace ruledcent {

std::string to_string(Provenance p)
{
    switch (p) {
    case Provenance::SameTorus: return "same-torus";
    case Provenance::Via2bMinusR: return "2b-r";
    case Provenance::ViaRMinus2b: return "r-2b";
    case Provenance::ViaPlus2n: return "r-2b+2n";
    }
    return "?";
}

std::string to_string(Completeness c)
{
    return c == Completeness::Complete ? "complete" : "lower-bound";
}

std::vector<std::int64_t> ExtensionSet::r_values() const
{
    std::vector<std::int64_t> out;
    for (const auto& t : tori)
        out.push_back(t.r);
    std::sort(out.begin(), out.end());
    return out;
}

ExtensionSet circle_toric_extensions(const SymplecticForm& form, std::int64_t a, std::int64_t b, std::int64_t r)
{
    require_hamiltonian(form, r);
    if (gcd(a, b) != 1)
        throw Error(ErrorCode::NotEffective, "circle parameters need gcd(a, b) = 1");
    ExtensionSet out{{{r, b, Provenance::SameTorus}}, Completeness::Complete};
    if ((a != 1 && a != -1) || b == 0 || b == a * r)
        return out;
    if (a == -1)
        b += r; // normalizer: (-1, b) ~ (1, b + r)

    const std::int64_t eps = r % 2;
    const std::int64_t d = 2 * b - r;
    if (Rational(std::abs(d) + eps) >= Rational(2) * form.lambda)
        return out;

    ToricExtension e{std::abs(d), b, Provenance::Via2bMinusR};
    if (b < 0 || (b < r && d < 0)) {
        e.circle_b = -b;
        e.provenance = Provenance::ViaRMinus2b;
    }
    out.tori.push_back(e);
    return out;
}

ExtensionSet cyclic_toric_extensions(const SymplecticForm& form, const CyclicAction& x)
{
    require_hamiltonian(form, x.r);
    ExtensionSet out{{{x.r, x.b, Provenance::SameTorus}}, Completeness::Complete};
    if (gcd(x.a, x.n) != 1)
        return out;

    const CyclicAction y = reparametrize_to_a_one(x);
    const std::int64_t n = y.n, b = y.b, r = y.r;
    const Rational two_lambda = Rational(2) * form.lambda;
    out.tori.front().circle_b = b;

    if (r == 0)
        throw Error(ErrorCode::OutOfRegime, "r = 0 with gcd(a, n) = 1 is not covered");
    const bool odd = form.surface == SurfaceKind::NonTrivialBundle;
    const std::int64_t shift = odd ? 1 : 0;
    if (Rational(n) < two_lambda || !(two_lambda > Rational(r + shift)))
        throw Error(ErrorCode::OutOfRegime, "outside n >= 2 lambda > r" + std::string(odd ? "+1" : ""));
    if (!odd && r < 2)
        throw Error(ErrorCode::OutOfRegime, "r < 2");
    if (!odd && 2 * b == r)
        throw Error(ErrorCode::OutOfRegime, "2b = r");

    const std::pair<std::int64_t, Provenance> candidates[] = {
        {2 * b - r, Provenance::Via2bMinusR},
        {r - 2 * b, Provenance::ViaRMinus2b},
        {r - 2 * b + 2 * n, Provenance::ViaPlus2n},
    };
    for (auto [c, prov] : candidates) {
        if (c + shift <= 0 || !(Rational(c + shift) < two_lambda) || c == r)
            continue;
        std::int64_t bp = prov == Provenance::Via2bMinusR ? b : mod(-b, n);
        out.tori.push_back({c, bp, prov});
        break; // at most one candidate lies in range
    }
    return out;
}

ExtensionSet cyclic_extensions_via_circle_chain(const SymplecticForm& form, const CyclicAction& x)
{
    require_hamiltonian(form, x.r);
    ExtensionSet out{{{x.r, x.b, Provenance::SameTorus}}, Completeness::LowerBound};
    if (gcd(x.a, x.n) != 1)
        return out;

    const CyclicAction y = reparametrize_to_a_one(x);
    const std::int64_t n = y.n;
    const Rational bound = Rational(2) * form.lambda + Rational(n);

    std::set<std::pair<std::int64_t, std::int64_t>> seen{{y.r, y.b}};
    std::vector<std::pair<std::int64_t, std::int64_t>> queue{{y.r, y.b}};
    std::set<std::int64_t> reached{y.r};
    out.tori.front().circle_b = y.b;

    while (!queue.empty()) {
        auto [rc, bc] = queue.back();
        queue.pop_back();
        const std::int64_t jmax = bound.floor() / n + 1;
        for (std::int64_t j = -jmax; j <= jmax; ++j) {
            const std::int64_t beta = bc + j * n;
            if (Rational(std::abs(beta)) > bound)
                continue;
            for (const ToricExtension& e : circle_toric_extensions(form, 1, beta, rc).tori) {
                if (e.provenance == Provenance::SameTorus)
                    continue;
                std::pair<std::int64_t, std::int64_t> st{e.r, mod(e.circle_b, n)};
                if (!seen.insert(st).second)
                    continue;
                queue.push_back(st);
                if (reached.insert(e.r).second)
                    out.tori.push_back({e.r, st.second, e.provenance});
            }
        }
    }
    std::sort(out.tori.begin() + 1, out.tori.end(),
              [](const ToricExtension& p, const ToricExtension& q) { return p.r < q.r; });
    return out;
}

} // namespace ruledcent

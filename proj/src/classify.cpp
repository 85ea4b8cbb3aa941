#include "ruledcent/classify.hpp"

#include "ruledcent/arith.hpp"
#include "ruledcent/error.hpp"

namespace ruledcent {

std::string to_string(ClassName c)
{
    static const char* names[] = {"H0", "H1", "H2", "H3", "Z0", "Z1", "Z2",
                                  "Z3", "OH0", "OH1", "OH2", "OH3", "Unresolved"};
    return names[static_cast<int>(c)];
}

std::string to_string(UnresolvedReason r)
{
    static const char* names[] = {"R1", "R2", "R3", "R4", "R5", "Rboundary"};
    return names[static_cast<int>(r)];
}

std::string describe(UnresolvedReason r)
{
    switch (r) {
    case UnresolvedReason::R1:
        return "two toric extensions, but the action lies in an excluded family "
               "(n = 2r, or n = 2r+2 with b = r+1 or b = 2r+1)";
    case UnresolvedReason::R2: return "normalized action has 2b - r = n";
    case UnresolvedReason::R3: return "n < 2*lambda, or 2*lambda does not exceed r (r+1 on the odd surface)";
    case UnresolvedReason::R4: return "normalized action has 2b = r";
    case UnresolvedReason::R5: return "r = 0 with gcd(a, n) = 1 and lambda > 1";
    case UnresolvedReason::Rboundary: return "n = 2*lambda and a second torus candidate is in range";
    }
    return "";
}

std::string class_label(const ActionClass& c)
{
    if (c.reason)
        return "Unresolved(" + to_string(*c.reason) + ")";
    return to_string(c.name);
}

namespace {

ActionClass unresolved(UnresolvedReason why, std::optional<CyclicAction> normalized = std::nullopt)
{
    return {ClassName::Unresolved, why, normalized, std::nullopt};
}

ActionClass resolved(ClassName c, ExtensionSet ext, std::optional<CyclicAction> normalized = std::nullopt)
{
    return {c, std::nullopt, normalized, std::move(ext)};
}

ClassName odd_variant(ClassName c, bool odd)
{
    if (!odd)
        return c;
    switch (c) {
    case ClassName::H0: return ClassName::OH0;
    case ClassName::H1: return ClassName::OH1;
    case ClassName::H2: return ClassName::OH2;
    case ClassName::H3: return ClassName::OH3;
    default: return c;
    }
}

} // namespace

ActionClass classify(const SymplecticForm& form, const CyclicAction& x)
{
    require_hamiltonian(form, x.r);
    const bool odd = form.surface == SurfaceKind::NonTrivialBundle;
    const std::int64_t n = x.n;
    const bool unit = gcd(x.a, n) == 1;
    const ExtensionSet single{{{x.r, x.b, Provenance::SameTorus}}, Completeness::Complete};

    if (x.r != 0 && !unit)
        return resolved(odd_variant(ClassName::H0, odd), single);

    if (x.r == 0) {
        if (form.lambda == Rational(1)) {
            if (n == 2)
                return resolved(ClassName::Z3, single);
            if (mod(2 * x.a, n) != 0 && mod(2 * x.b, n) != 0)
                return resolved(ClassName::Z1, single);
            return resolved(ClassName::Z2, single);
        }
        if (!unit)
            return resolved(ClassName::Z0, single);
        return unresolved(UnresolvedReason::R5);
    }

    const CyclicAction y = reparametrize_to_a_one(x);
    const std::int64_t b = y.b, r = y.r;
    const Rational two_lambda = Rational(2) * form.lambda;
    const std::int64_t bound_r = odd ? r + 1 : r;
    if (Rational(n) < two_lambda || !(two_lambda > Rational(bound_r)))
        return unresolved(UnresolvedReason::R3, y);
    if (2 * b == r)
        return unresolved(UnresolvedReason::R4, y);
    if (2 * b - r == n)
        return unresolved(UnresolvedReason::R2, y);

    ExtensionSet ext = cyclic_toric_extensions(form, y);
    if (!ext.two_tori()) {
        ClassName c = (b == 0 || b == r) ? ClassName::H3 : ClassName::H1;
        return resolved(odd_variant(c, odd), std::move(ext), y);
    }
    const bool excluded = n == 2 * r || (n == 2 * r + 2 && (b == r + 1 || b == 2 * r + 1));
    if (excluded)
        return unresolved(UnresolvedReason::R1, y);
    if (Rational(n) == two_lambda)
        return unresolved(UnresolvedReason::Rboundary, y);
    return resolved(odd_variant(ClassName::H2, odd), std::move(ext), y);
}

FixedPointKind fixed_point_structure(const CyclicAction& x)
{
    const bool surface = x.a == 0 || x.b == 0 || x.b == mod(x.a * x.r, x.n);
    return surface ? FixedPointKind::ContainsFixedSurface : FixedPointKind::IsolatedOnly;
}

} // namespace ruledcent

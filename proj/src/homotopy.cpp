#include "ruledcent/homotopy.hpp"

#include "ruledcent/arith.hpp"
#include "ruledcent/error.hpp"

namespace ruledcent {

std::string to_string(HomotopyType t)
{
    switch (t) {
    case HomotopyType::Torus2: return "Torus2";
    case HomotopyType::Torus2xZ2: return "Torus2xZ2";
    case HomotopyType::Torus2xZ8: return "Torus2xZ8";
    case HomotopyType::S1xSO3: return "S1xSO3";
    case HomotopyType::S1xSO3xZ2: return "S1xSO3xZ2";
    case HomotopyType::U2: return "U2";
    case HomotopyType::OmegaS3xT3: return "OmegaS3xT3";
    }
    return "?";
}

std::string display_name(HomotopyType t)
{
    switch (t) {
    case HomotopyType::Torus2: return "T^2";
    case HomotopyType::Torus2xZ2: return "T^2 x Z_2";
    case HomotopyType::Torus2xZ8: return "T^2 x Z_8";
    case HomotopyType::S1xSO3: return "S^1 x SO(3)";
    case HomotopyType::S1xSO3xZ2: return "S^1 x SO(3) x Z_2";
    case HomotopyType::U2: return "U(2)";
    case HomotopyType::OmegaS3xT3: return "Omega S^3 x S^1 x S^1 x S^1";
    }
    return "?";
}

int component_count(HomotopyType t)
{
    switch (t) {
    case HomotopyType::Torus2xZ2:
    case HomotopyType::S1xSO3xZ2: return 2;
    case HomotopyType::Torus2xZ8: return 8;
    default: return 1;
    }
}

CentralizerType centralizer_type(const ActionClass& c, const CyclicAction& x, const SymplecticForm& form)
{
    if (!c.resolved())
        throw Error(ErrorCode::UnresolvedClass, "centralizer is not known for " + class_label(c));
    const std::int64_t n = x.n, a = x.a, b = x.b;
    using enum HomotopyType;
    switch (c.name) {
    case ClassName::H0:
    case ClassName::OH0:
        if (a == 0)
            return {form.surface == SurfaceKind::TrivialBundle ? S1xSO3 : U2, std::nullopt};
        if (n == 2 * a)
            return {Torus2xZ2, std::nullopt};
        return {Torus2, std::nullopt};
    case ClassName::H1:
    case ClassName::H3:
    case ClassName::OH1:
    case ClassName::OH3:
        return {Torus2, std::nullopt};
    case ClassName::H2:
    case ClassName::OH2: {
        const auto& t = c.extensions->tori;
        return {OmegaS3xT3, PushoutPresentation{t[0].r, t[1].r, 1, t[0].circle_b, 1, t[1].circle_b}};
    }
    case ClassName::Z1:
        // a = +-b; with gcd(a,b) = 1 these are (1,1), (1,n-1), (n-1,1)
        if (mod(a - b, n) == 0 || mod(a + b, n) == 0)
            return {Torus2xZ2, std::nullopt};
        return {Torus2, std::nullopt};
    case ClassName::Z2:
        if (a != 0 && b != 0)
            return {Torus2xZ2, std::nullopt};
        return {S1xSO3xZ2, std::nullopt};
    case ClassName::Z3:
        if (a == 1 && b == 1)
            return {Torus2xZ8, std::nullopt};
        return {S1xSO3xZ2, std::nullopt};
    case ClassName::Z0:
        if (a == 0 || b == 0)
            return {S1xSO3xZ2, std::nullopt};
        if (mod(2 * a, n) != 0 && mod(2 * b, n) != 0)
            return {Torus2, std::nullopt};
        return {Torus2xZ2, std::nullopt};
    case ClassName::Unresolved: break;
    }
    throw Error(ErrorCode::UnresolvedClass, "no centralizer for " + class_label(c));
}

namespace {

using Series = std::vector<std::int64_t>;

Series multiply(const Series& p, const Series& q, int max_deg)
{
    Series out(static_cast<std::size_t>(max_deg) + 1, 0);
    for (std::size_t i = 0; i < p.size() && i <= static_cast<std::size_t>(max_deg); ++i)
        for (std::size_t j = 0; j < q.size() && i + j <= static_cast<std::size_t>(max_deg); ++j)
            out[i + j] += p[i] * q[j];
    return out;
}

// rational homology of S^d truncated at max_deg
Series sphere(int d) { Series s(static_cast<std::size_t>(d) + 1, 0); s[0] = 1; s[static_cast<std::size_t>(d)] = 1; return s; }

} // namespace

std::vector<std::int64_t> poincare_coeffs(HomotopyType t, int max_deg)
{
    if (max_deg < 0)
        return {};
    Series one{1};
    Series s;
    switch (t) {
    case HomotopyType::Torus2:
    case HomotopyType::Torus2xZ2:
    case HomotopyType::Torus2xZ8:
        s = multiply(sphere(1), sphere(1), max_deg);
        break;
    case HomotopyType::S1xSO3:
    case HomotopyType::S1xSO3xZ2:
    case HomotopyType::U2:
        // SO(3) and SU(2) are rational 3-spheres
        s = multiply(sphere(1), sphere(3), max_deg);
        break;
    case HomotopyType::OmegaS3xT3: {
        Series loop(static_cast<std::size_t>(max_deg) + 1, 0); // H_*(Omega S^3) = Q[x_2]
        for (int d = 0; d <= max_deg; d += 2)
            loop[static_cast<std::size_t>(d)] = 1;
        s = multiply(multiply(multiply(loop, sphere(1), max_deg), sphere(1), max_deg), sphere(1), max_deg);
        break;
    }
    }
    s.resize(static_cast<std::size_t>(max_deg) + 1, 0);
    for (auto& v : s)
        v *= component_count(t);
    return s;
}

std::string to_string(WeylGroup w)
{
    switch (w) {
    case WeylGroup::D1: return "D1";
    case WeylGroup::D2: return "D2";
    case WeylGroup::D4: return "D4";
    }
    return "?";
}

WeylGroup weyl_group(const SymplecticForm& form, std::int64_t r)
{
    require_hamiltonian(form, r);
    if (r == 0)
        return form.lambda == Rational(1) ? WeylGroup::D4 : WeylGroup::D2;
    return WeylGroup::D1;
}

} // namespace ruledcent

#include "ruledcent/domain.hpp"

#include "ruledcent/arith.hpp"
#include "ruledcent/error.hpp"

namespace ruledcent {

std::string_view surface_name(SurfaceKind s)
{
    return s == SurfaceKind::TrivialBundle ? "s2xs2" : "cp2blowup";
}

SurfaceKind parse_surface(std::string_view text)
{
    if (text == "s2xs2")
        return SurfaceKind::TrivialBundle;
    if (text == "cp2blowup")
        return SurfaceKind::NonTrivialBundle;
    throw Error(ErrorCode::ParseError, "unknown surface '" + std::string(text) + "' (expected s2xs2 or cp2blowup)");
}

LambdaSplit decompose_lambda(const Rational& lambda)
{
    if (lambda < Rational(1))
        throw Error(ErrorCode::BelowNormalization, "lambda = " + lambda.to_pretty() + " is below 1");
    std::int64_t ell = lambda.ceil() - 1;
    return {ell, lambda - Rational(ell)};
}

SymplecticForm make_form(SurfaceKind surface, const Rational& lambda)
{
    if (surface == SurfaceKind::TrivialBundle ? lambda < Rational(1) : lambda <= Rational(1))
        throw Error(ErrorCode::InvalidLambda,
                    "lambda = " + lambda.to_pretty() + " is not allowed on " + std::string(surface_name(surface))
                        + (surface == SurfaceKind::TrivialBundle ? " (need lambda >= 1)" : " (need lambda > 1)"));
    return {surface, lambda};
}

static bool parity_ok(SurfaceKind s, std::int64_t r)
{
    return (mod(r, 2) == 0) == (s == SurfaceKind::TrivialBundle);
}

CyclicAction make_action(SurfaceKind surface, std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t r)
{
    if (n < 2)
        throw Error(ErrorCode::TrivialGroup, "n = " + std::to_string(n) + " does not give a nontrivial group");
    if (r < 0) {
        b = -b;
        r = -r;
    }
    if (!parity_ok(surface, r))
        throw Error(ErrorCode::ParityMismatch,
                    "r = " + std::to_string(r) + " has the wrong parity for " + std::string(surface_name(surface)));
    a = mod(a, n);
    b = mod(b, n);
    if (gcd(a, b, n) != 1)
        throw Error(ErrorCode::NotEffective,
                    "gcd(a, b, n) = " + std::to_string(gcd(a, b, n)) + ", the action is not effective");
    return {surface, n, a, b, r};
}

std::vector<std::string> action_warnings(const CyclicAction& x)
{
    std::vector<std::string> w;
    if (gcd(x.a, x.b) != 1)
        w.push_back("gcd(a, b) = " + std::to_string(gcd(x.a, x.b)) + " but gcd(a, b, n) = 1; accepted as effective");
    return w;
}

bool is_hamiltonian_torus(const SymplecticForm& form, std::int64_t r)
{
    if (r < 0 || !parity_ok(form.surface, r))
        throw Error(ErrorCode::ParityMismatch,
                    "r = " + std::to_string(r) + " has the wrong parity for " + std::string(surface_name(form.surface)));
    std::int64_t k = r / 2;
    return r % 2 == 0 ? form.lambda > Rational(k) : form.lambda > Rational(k + 1);
}

void require_hamiltonian(const SymplecticForm& form, std::int64_t r)
{
    if (!is_hamiltonian_torus(form, r))
        throw Error(ErrorCode::NotHamiltonian,
                    "no Hamiltonian torus T_" + std::to_string(r) + " at lambda = " + form.lambda.to_pretty());
}

std::int64_t max_hamiltonian_r(const SymplecticForm& form)
{
    std::int64_t ell = decompose_lambda(form.lambda).ell;
    return form.surface == SurfaceKind::TrivialBundle ? 2 * ell : 2 * ell - 1;
}

CyclicAction reparametrize_to_a_one(const CyclicAction& x)
{
    auto inv = inverse_mod(x.a, x.n);
    if (!inv)
        throw Error(ErrorCode::NotInvertible,
                    "a = " + std::to_string(x.a) + " is not invertible mod " + std::to_string(x.n));
    return {x.surface, x.n, 1 % x.n, mod(*inv * x.b, x.n), x.r};
}

CyclicAction normalizer_flip(const CyclicAction& x)
{
    return {x.surface, x.n, mod(-x.a, x.n), mod(x.b - mod(x.a * x.r, x.n), x.n), x.r};
}

bool same_cyclic_subgroup(std::int64_t n, std::int64_t a1, std::int64_t b1, std::int64_t a2, std::int64_t b2)
{
    for (std::int64_t k = 1; k < n; ++k) {
        if (gcd(k, n) != 1)
            continue;
        if (mod(a1 - a2 * k, n) == 0 && mod(b1 - b2 * k, n) == 0)
            return true;
    }
    return false;
}

} // namespace ruledcent

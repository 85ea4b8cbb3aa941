#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ruledcent/rational.hpp"

namespace ruledcent {

enum class SurfaceKind { TrivialBundle, NonTrivialBundle };

std::string_view surface_name(SurfaceKind s);      // "s2xs2" | "cp2blowup"
SurfaceKind parse_surface(std::string_view text);  // throws ParseError

// lambda = ell + delta, 0 < delta <= 1
struct LambdaSplit {
    std::int64_t ell;
    Rational delta;
};
LambdaSplit decompose_lambda(const Rational& lambda);

struct SymplecticForm {
    SurfaceKind surface;
    Rational lambda;
};

// Trivial bundle needs lambda >= 1, the other one lambda > 1.
SymplecticForm make_form(SurfaceKind surface, const Rational& lambda);

/* Z_n acting on the Hirzebruch surface W_r by
   zeta . [w : z1 : z2] = [w : zeta^a z1 : zeta^b z2].
   a, b are least nonnegative residues mod n; r >= 0 with the parity of the surface. */
struct CyclicAction {
    SurfaceKind surface;
    std::int64_t n;
    std::int64_t a;
    std::int64_t b;
    std::int64_t r;

    friend bool operator==(const CyclicAction&, const CyclicAction&) = default;
};

// Reduces a, b mod n.  Negative r becomes (a, -b; -r).
CyclicAction make_action(SurfaceKind surface, std::int64_t n, std::int64_t a,
                         std::int64_t b, std::int64_t r);

// Non-fatal notices about an accepted action (currently: gcd(a,b) != 1).
std::vector<std::string> action_warnings(const CyclicAction& x);

bool is_hamiltonian_torus(const SymplecticForm& form, std::int64_t r);
void require_hamiltonian(const SymplecticForm& form, std::int64_t r);

// Largest r of the right parity that still carries a Hamiltonian torus.
std::int64_t max_hamiltonian_r(const SymplecticForm& form);

CyclicAction reparametrize_to_a_one(const CyclicAction& x);
CyclicAction normalizer_flip(const CyclicAction& x);

bool same_cyclic_subgroup(std::int64_t n, std::int64_t a1, std::int64_t b1,
                          std::int64_t a2, std::int64_t b2);

} // namespace ruledcent

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ruledcent/domain.hpp"

namespace ruledcent {

enum class Provenance { SameTorus, Via2bMinusR, ViaRMinus2b, ViaPlus2n };
std::string to_string(Provenance p);

/* One Hamiltonian torus T_r' containing the group, together with the
   parameter b' such that the group sits in T_r' as (1, b').  For circle
   extensions b' is an integer, for cyclic ones a residue mod n. */
struct ToricExtension {
    std::int64_t r;
    std::int64_t circle_b;
    Provenance provenance;
    friend bool operator==(const ToricExtension&, const ToricExtension&) = default;
};

enum class Completeness { Complete, LowerBound };
std::string to_string(Completeness c);

struct ExtensionSet {
    std::vector<ToricExtension> tori; // defining torus first, then by r
    Completeness completeness = Completeness::Complete;

    std::vector<std::int64_t> r_values() const;
    bool two_tori() const { return tori.size() == 2; }
};

// Circle S^1(a,b;r) with gcd(a,b) = 1 inside T_r.
ExtensionSet circle_toric_extensions(const SymplecticForm& form, std::int64_t a, std::int64_t b, std::int64_t r);

// The cyclic group itself; throws OutOfRegime where the count is not known.
ExtensionSet cyclic_toric_extensions(const SymplecticForm& form, const CyclicAction& x);

// Tori reachable by chaining circle extensions through lifts of the group.
ExtensionSet cyclic_extensions_via_circle_chain(const SymplecticForm& form, const CyclicAction& x);

} // namespace ruledcent

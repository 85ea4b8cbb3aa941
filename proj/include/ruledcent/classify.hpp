#pragma once

#include <optional>
#include <string>

#include "ruledcent/domain.hpp"
#include "ruledcent/extensions.hpp"

namespace ruledcent {

enum class ClassName { H0, H1, H2, H3, Z0, Z1, Z2, Z3, OH0, OH1, OH2, OH3, Unresolved };

enum class UnresolvedReason { R1, R2, R3, R4, R5, Rboundary };

struct ActionClass {
    ClassName name;
    std::optional<UnresolvedReason> reason;  // set iff name == Unresolved
    std::optional<CyclicAction> normalized;  // a = 1 form when gcd(a, n) = 1 and r != 0
    std::optional<ExtensionSet> extensions;  // set for every resolved class

    bool resolved() const { return name != ClassName::Unresolved; }
    bool two_tori() const { return name == ClassName::H2 || name == ClassName::OH2; }
};

std::string to_string(ClassName c);
std::string to_string(UnresolvedReason r);
std::string describe(UnresolvedReason r);
// "H2", "Unresolved(R1)"
std::string class_label(const ActionClass& c);

ActionClass classify(const SymplecticForm& form, const CyclicAction& x);

enum class FixedPointKind { IsolatedOnly, ContainsFixedSurface };
FixedPointKind fixed_point_structure(const CyclicAction& x);

} // namespace ruledcent

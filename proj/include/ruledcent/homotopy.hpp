#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ruledcent/classify.hpp"

namespace ruledcent {

enum class HomotopyType { Torus2, Torus2xZ2, Torus2xZ8, S1xSO3, S1xSO3xZ2, U2, OmegaS3xT3 };

std::string to_string(HomotopyType t);   // "Torus2xZ2"
std::string display_name(HomotopyType t); // "T^2 x Z_2"
int component_count(HomotopyType t);

// T_r <- S^1 -> T_r'
struct PushoutPresentation {
    std::int64_t r;
    std::int64_t r_prime;
    std::int64_t circle_a;
    std::int64_t circle_b;
    std::int64_t circle_a_prime;
    std::int64_t circle_b_prime;
};

struct CentralizerType {
    HomotopyType type;
    std::optional<PushoutPresentation> pushout;
};

CentralizerType centralizer_type(const ActionClass& c, const CyclicAction& x, const SymplecticForm& form);

// Rational Betti numbers b_0..b_max_deg of the homotopy type.
std::vector<std::int64_t> poincare_coeffs(HomotopyType t, int max_deg);

enum class WeylGroup { D1, D2, D4 };
std::string to_string(WeylGroup w);
WeylGroup weyl_group(const SymplecticForm& form, std::int64_t r);

} // namespace ruledcent

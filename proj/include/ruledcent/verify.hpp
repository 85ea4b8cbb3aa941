#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ruledcent/moves.hpp"

namespace ruledcent {

struct CheckResult {
    std::string name;
    bool ok;
    std::string detail; // summary, or the first counterexample
};

CheckResult check_group_presentation(std::span<const std::int64_t> ns, const MoveGenerators& gens);
CheckResult check_orbit_sweep(std::int64_t n_max);
CheckResult check_codim_sweep(std::int64_t n_max, std::int64_t k_max);
CheckResult check_poincare(int max_deg);
CheckResult check_fixtures(std::string_view fixtures_json);

// fixture table compiled into the library
std::string_view builtin_fixtures();

} // namespace ruledcent

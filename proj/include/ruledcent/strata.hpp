#pragma once

#include <cstdint>
#include <vector>

#include "ruledcent/classify.hpp"

namespace ruledcent {

// #{ j in 1..s-1 : j = b (mod n) }
std::int64_t stratum_codim(std::int64_t n, std::int64_t b, std::int64_t s);

// Same count read off the isotropy representation on H^{0,1}, s = 2k.
std::int64_t codim_oracle_even(std::int64_t n, std::int64_t b, std::int64_t k);
// s = 2k+1
std::int64_t codim_oracle_odd(std::int64_t n, std::int64_t b, std::int64_t k);

struct Stratum {
    std::int64_t r;
    std::int64_t b_in_torus;
    std::int64_t complex_codim;
    std::int64_t real_codim_nonequivariant;
    bool is_open;
};

std::vector<Stratum> stratification(const SymplecticForm& form, const CyclicAction& x);
std::vector<Stratum> stratification(const ActionClass& c, const CyclicAction& x);

} // namespace ruledcent

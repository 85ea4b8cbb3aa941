#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ruledcent/domain.hpp"

namespace ruledcent {

enum class FixedPoint { P, Q, R, S };
inline constexpr std::array<FixedPoint, 4> all_fixed_points{FixedPoint::P, FixedPoint::Q, FixedPoint::R,
                                                            FixedPoint::S};
char point_name(FixedPoint p);

// unordered pair of residues mod n, stored sorted
struct WeightPair {
    std::int64_t lo;
    std::int64_t hi;
    friend bool operator==(const WeightPair&, const WeightPair&) = default;
    friend auto operator<=>(const WeightPair&, const WeightPair&) = default;
};
WeightPair make_pair_mod(std::int64_t x, std::int64_t y, std::int64_t n);

struct WeightTable {
    std::array<WeightPair, 4> at; // indexed by FixedPoint
    const WeightPair& operator[](FixedPoint p) const { return at[static_cast<int>(p)]; }
    friend bool operator==(const WeightTable&, const WeightTable&) = default;
};

// P{a,b} Q{a,-b} R{-a,ar-b} S{-a,-ar+b}
WeightTable weights(const CyclicAction& x);

/* Weights at one end of an invariant sphere of self-intersection -r, given the
   tangent weight p and normal weight q at the other end. */
struct OrderedWeights {
    std::int64_t tangent;
    std::int64_t normal;
};
OrderedWeights other_end_weights(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t n);

// alpha - beta = +-e*k (mod n)
bool check_edge_constraint(std::int64_t alpha, std::int64_t beta, std::int64_t k, std::int64_t e, std::int64_t n);

/* Ordered weights along one invariant sphere of the moment polytope.
   `from`/`to` follow the polytope edge order P->Q->R->S->P. */
struct EdgeWeights {
    FixedPoint from;
    FixedPoint to;
    std::int64_t tangent_from;
    std::int64_t normal_from;
    std::int64_t tangent_to;
    std::int64_t normal_to;
};
std::array<EdgeWeights, 4> edge_weights(const CyclicAction& x);

// Points whose weight multiset differs from those of the three others.
std::vector<FixedPoint> unique_weight_points(const CyclicAction& x);

std::string to_string(const WeightPair& w);

} // namespace ruledcent

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "ruledcent/domain.hpp"
#include "ruledcent/rational.hpp"
#include "ruledcent/weights.hpp"

namespace ruledcent {

struct Vertex {
    FixedPoint name;
    Rational x;
    Rational y;
};

// homology class xB + yF
struct CurveClass {
    std::int64_t b_coef;
    std::int64_t f_coef;
};
std::string label(const CurveClass& c);        // "B", "B-2F", "F"
std::int64_t self_intersection(const CurveClass& c, SurfaceKind s);

struct Edge {
    FixedPoint from;
    FixedPoint to;
    CurveClass curve;
};

// Trapezoid P, Q, R, S with edges P-Q, Q-R, R-S, S-P.
struct MomentPolytope {
    SurfaceKind surface;
    Rational lambda;
    std::int64_t r;
    std::array<Vertex, 4> vertices;
    std::array<Edge, 4> edges;

    Rational area() const; // shoelace
};

MomentPolytope moment_polytope(const SymplecticForm& form, std::int64_t r);

std::string render_svg(const MomentPolytope& p, const std::optional<WeightTable>& decorations = std::nullopt);
std::string render_json(const MomentPolytope& p);

} // namespace ruledcent

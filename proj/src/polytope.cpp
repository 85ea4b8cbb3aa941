#include "ruledcent/polytope.hpp"

#include <sstream>

#include "json.hpp"

namespace ruledcent {

std::string label(const CurveClass& c)
{
    std::string s;
    auto term = [&](std::int64_t coef, char sym) {
        if (coef == 0)
            return;
        if (coef < 0)
            s += "-";
        else if (!s.empty())
            s += "+";
        std::int64_t m = coef < 0 ? -coef : coef;
        if (m != 1)
            s += std::to_string(m);
        s += sym;
    };
    term(c.b_coef, 'B');
    term(c.f_coef, 'F');
    return s.empty() ? "0" : s;
}

std::int64_t self_intersection(const CurveClass& c, SurfaceKind s)
{
    // trivial bundle: B.B = 0; non-trivial: B is a line, B.B = 1.  B.F = 1, F.F = 0.
    const std::int64_t bb = s == SurfaceKind::TrivialBundle ? 0 : 1;
    return c.b_coef * c.b_coef * bb + 2 * c.b_coef * c.f_coef;
}

MomentPolytope moment_polytope(const SymplecticForm& form, std::int64_t r)
{
    require_hamiltonian(form, r);
    const std::int64_t k = r / 2;
    const bool odd = r % 2 == 1;
    const Rational& l = form.lambda;
    const std::int64_t top = odd ? k + 1 : k;
    using enum FixedPoint;
    MomentPolytope p{form.surface, l, r,
                     {{{P, 0, 0}, {Q, 0, 1}, {R, l - Rational(top), 1}, {S, l + Rational(k), 0}}},
                     {{{P, Q, {0, 1}}, {Q, R, {1, -top}}, {R, S, {0, 1}}, {S, P, {1, k}}}}};
    return p;
}

Rational MomentPolytope::area() const
{
    Rational twice = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Vertex& u = vertices[i];
        const Vertex& v = vertices[(i + 1) % vertices.size()];
        twice = twice + u.x * v.y - v.x * u.y;
    }
    Rational a = twice / Rational(2);
    return a < Rational(0) ? -a : a;
}

namespace {

std::string num(const Rational& x) { return to_decimal(x * Rational(100), 4); }

const Vertex& vertex(const MomentPolytope& p, FixedPoint f) { return p.vertices[static_cast<int>(f)]; }

} // namespace

std::string render_svg(const MomentPolytope& p, const std::optional<WeightTable>& decorations)
{
    Rational xmin = p.vertices[0].x, xmax = xmin, ymin = p.vertices[0].y, ymax = ymin;
    for (const Vertex& v : p.vertices) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    const Rational padx = (xmax - xmin) / Rational(10), pady = (ymax - ymin) / Rational(10);
    const Rational vx = xmin - padx, vy = ymin - pady;
    const Rational vw = xmax - xmin + Rational(2) * padx, vh = ymax - ymin + Rational(2) * pady;

    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << num(vx) << ' ' << num(vy) << ' '
      << num(vw) << ' ' << num(vh) << "\">\n";
    o << "  <polygon points=\"";
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
        o << (i ? " " : "") << num(p.vertices[i].x) << ',' << num(p.vertices[i].y);
    o << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

    for (const Edge& e : p.edges) {
        const Vertex& u = vertex(p, e.from);
        const Vertex& v = vertex(p, e.to);
        Rational mx = (u.x + v.x) / Rational(2), my = (u.y + v.y) / Rational(2);
        o << "  <text x=\"" << num(mx) << "\" y=\"" << num(my) << "\" font-size=\"6\" text-anchor=\"middle\">"
          << label(e.curve) << "</text>\n";
    }
    for (const Vertex& v : p.vertices) {
        o << "  <text x=\"" << num(v.x) << "\" y=\"" << num(v.y) << "\" font-size=\"6\">" << point_name(v.name);
        if (decorations)
            o << ' ' << to_string((*decorations)[v.name]);
        o << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

std::string render_json(const MomentPolytope& p)
{
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (const Vertex& v : p.vertices)
        j["vertices"].push_back({{"name", std::string(1, point_name(v.name))},
                                 {"x", v.x.to_string()},
                                 {"y", v.y.to_string()}});
    j["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : p.edges)
        j["edges"].push_back({{"from", std::string(1, point_name(e.from))},
                              {"to", std::string(1, point_name(e.to))},
                              {"label", label(e.curve)}});
    return j.dump(2) + "\n";
}

} // namespace ruledcent

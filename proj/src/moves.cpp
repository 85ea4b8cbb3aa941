#include "ruledcent/moves.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ruledcent/arith.hpp"
#include "ruledcent/error.hpp"

namespace ruledcent {

std::strong_ordering operator<=>(const TripleMod& x, const TripleMod& y)
{
    if (auto c = x.n <=> y.n; c != 0) return c;
    if (auto c = x.r <=> y.r; c != 0) return c;
    if (auto c = x.a <=> y.a; c != 0) return c;
    return x.b <=> y.b;
}

TripleMod make_triple(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t r)
{
    if (n < 2)
        throw Error(ErrorCode::TrivialGroup, "n must be at least 2");
    return {n, mod(a, n), mod(b, n), mod(r, 2 * n)};
}

bool in_restricted_domain(const TripleMod& t)
{
    return mod(t.r, 2 * t.n) != 0 && gcd(t.a, t.n) == 1;
}

std::string move_name(Move m)
{
    return "c" + std::to_string(static_cast<int>(m) + 1);
}

static TripleMod c1(const TripleMod& t) { return make_triple(t.n, -t.a, -t.b, t.r); }
static TripleMod c2(const TripleMod& t) { return make_triple(t.n, -t.a, t.b - t.r * t.a, t.r); }
static TripleMod c3(const TripleMod& t) { return make_triple(t.n, t.a, -t.b, -t.r); }

static std::vector<std::int64_t> c6_solutions(const TripleMod& t)
{
    const std::int64_t m = 2 * t.n;
    return solve_linear_congruence(t.a, mod(2 * t.b - t.r * t.a, m), m);
}

std::vector<TripleMod> apply_move(Move m, const TripleMod& t)
{
    switch (m) {
    case Move::C1: return {c1(t)};
    case Move::C2: return {c2(t)};
    case Move::C3: return {c3(t)};
    case Move::C4:
        if (t.r != 0)
            throw Error(ErrorCode::NotApplicable, "c4 needs r = 0 (mod 2n)");
        return {make_triple(t.n, -t.b, -t.a, 0)};
    case Move::C5:
        if (gcd(t.a, t.n) != 1)
            throw Error(ErrorCode::NotApplicable, "c5 needs gcd(a, n) = 1");
        return {t};
    case Move::C6: {
        if (gcd(t.a, t.n) != 1)
            throw Error(ErrorCode::NotApplicable, "c6 needs gcd(a, n) = 1");
        auto sol = c6_solutions(t);
        if (sol.empty())
            throw Error(ErrorCode::NoSolution, "a r' = 2b - ra has no solution mod 2n");
        std::vector<TripleMod> out;
        for (std::int64_t r2 : sol)
            out.push_back({t.n, t.a, t.b, r2});
        return out;
    }
    }
    throw Error(ErrorCode::NotApplicable, "unknown move");
}

TripleMod c6_parity_preserving(const TripleMod& t)
{
    for (const TripleMod& s : apply_move(Move::C6, t))
        if (mod(s.r - t.r, 2) == 0)
            return s;
    throw Error(ErrorCode::NoSolution, "no parity preserving solution for c6");
}

std::vector<TripleMod> orbit(const TripleMod& t0)
{
    TripleMod t = make_triple(t0.n, t0.a, t0.b, t0.r);
    if (!in_restricted_domain(t))
        throw Error(ErrorCode::NotApplicable, "orbit needs r != 0 (mod 2n) and gcd(a, n) = 1");
    std::set<TripleMod> seen{t};
    std::vector<TripleMod> queue{t};
    while (!queue.empty()) {
        TripleMod cur = queue.back();
        queue.pop_back();
        for (const TripleMod& nxt : {c1(cur), c2(cur), c3(cur), c6_parity_preserving(cur)})
            if (seen.insert(nxt).second)
                queue.push_back(nxt);
    }
    return {seen.begin(), seen.end()};
}

TripleMod canonical_representative(const TripleMod& t) { return orbit(t).front(); }

std::string to_string(Equivalence e)
{
    switch (e) {
    case Equivalence::Yes: return "Yes";
    case Equivalence::No: return "No";
    case Equivalence::Unknown: return "Unknown";
    }
    return "Unknown";
}

// a = +-1 with r and 2b - ar both nonzero mod 2n
static bool lemma_applies(const TripleMod& t)
{
    std::int64_t m = 2 * t.n;
    std::int64_t sa;
    if (t.a == 1 % t.n)
        sa = 1;
    else if (t.a == t.n - 1)
        sa = -1;
    else
        return false;
    return mod(t.r, m) != 0 && mod(2 * t.b - sa * t.r, m) != 0;
}

Equivalence smoothly_equivalent(const TripleMod& t1, const TripleMod& t2)
{
    // the lemma only needs its hypotheses on the triple whose orbit is enumerated
    const TripleMod* base = lemma_applies(t1) ? &t1 : lemma_applies(t2) ? &t2 : nullptr;
    if (!base)
        return Equivalence::Unknown;
    const TripleMod& other = base == &t1 ? t2 : t1;
    if (t1.n != t2.n)
        return Equivalence::No;
    auto o = orbit(*base);
    return std::binary_search(o.begin(), o.end(), make_triple(other.n, other.a, other.b, other.r)) ? Equivalence::Yes
                                                                                                : Equivalence::No;
}

MoveGenerators standard_generators()
{
    return {c1, c2, c3, c6_parity_preserving};
}

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& p, const Perm& q) // p after q
{
    Perm out(q.size());
    for (std::size_t i = 0; i < q.size(); ++i)
        out[i] = p[static_cast<std::size_t>(q[i])];
    return out;
}

Perm identity(std::size_t size)
{
    Perm id(size);
    for (std::size_t i = 0; i < size; ++i)
        id[i] = static_cast<int>(i);
    return id;
}

Perm power(const Perm& p, int k)
{
    Perm out = identity(p.size());
    for (int i = 0; i < k; ++i)
        out = compose(p, out);
    return out;
}

constexpr std::size_t order_cap = 128;

} // namespace

GroupPresentationReport verify_group_presentation(std::span<const std::int64_t> sample_n, const MoveGenerators& gens)
{
    GroupPresentationReport rep;
    bool all_divide = !sample_n.empty();
    std::set<std::string> failed;
    for (std::int64_t n : sample_n) {
        if (n < 3 || n % 2 == 0)
            throw Error(ErrorCode::InvalidDomain, "group presentation check needs odd n >= 3, got " + std::to_string(n));
        std::vector<TripleMod> pts;
        for (std::int64_t a = 1; a < n; ++a)
            if (gcd(a, n) == 1)
                for (std::int64_t b = 0; b < n; ++b)
                    for (std::int64_t r = 0; r < 2 * n; ++r)
                        pts.push_back({n, a, b, r});
        std::map<TripleMod, int> index;
        for (std::size_t i = 0; i < pts.size(); ++i)
            index[pts[i]] = static_cast<int>(i);

        auto as_perm = [&](const MoveFn& f, const char* name) {
            Perm p(pts.size());
            for (std::size_t i = 0; i < pts.size(); ++i) {
                auto it = index.find(f(pts[i]));
                if (it == index.end())
                    throw Error(ErrorCode::InvalidDomain, std::string(name) + " leaves the a-unit domain");
                p[i] = it->second;
            }
            return p;
        };
        Perm p1 = as_perm(gens.c1, "c1"), p2 = as_perm(gens.c2, "c2"), p3 = as_perm(gens.c3, "c3"),
             p6 = as_perm(gens.c6, "c6");
        Perm id = identity(pts.size());
        Perm p26 = compose(p2, p6);

        auto check = [&](const Perm& lhs, const Perm& rhs, const std::string& name) {
            if (lhs != rhs)
                failed.insert(name + " fails at n=" + std::to_string(n));
        };
        check(power(p1, 2), id, "c1^2 = id");
        check(power(p2, 2), id, "c2^2 = id");
        check(power(p6, 2), id, "c6^2 = id");
        check(power(compose(p1, p2), 2), id, "(c1c2)^2 = id");
        check(power(compose(p1, p6), 2), id, "(c1c6)^2 = id");
        check(power(p26, 4), id, "(c2c6)^4 = id");
        check(power(p26, 2), p3, "c3 = (c2c6)^2");

        // closure of <c1, c2, c6>
        std::set<Perm> group{id};
        std::vector<Perm> frontier{id};
        bool capped = false;
        while (!frontier.empty() && !capped) {
            std::vector<Perm> next;
            for (const Perm& g : frontier)
                for (const Perm* s : {&p1, &p2, &p6}) {
                    Perm h = compose(*s, g);
                    if (group.insert(h).second) {
                        next.push_back(std::move(h));
                        if (group.size() > order_cap) {
                            capped = true;
                            break;
                        }
                    }
                }
            frontier = std::move(next);
        }
        std::int64_t order = capped ? 0 : static_cast<std::int64_t>(group.size());
        rep.orders.push_back(order);
        if (order == 16)
            rep.reached_16 = true;
        if (order == 0 || 16 % order != 0)
            all_divide = false;
    }
    rep.failed_relations.assign(failed.begin(), failed.end());
    rep.passed = rep.reached_16 && all_divide && rep.failed_relations.empty();

    std::string s;
    for (std::size_t i = 0; i < sample_n.size(); ++i) {
        s += "n=" + std::to_string(sample_n[i]) + ": order ";
        s += rep.orders[i] == 0 ? ">" + std::to_string(order_cap) : std::to_string(rep.orders[i]);
        s += i + 1 < sample_n.size() ? "; " : "";
    }
    for (const std::string& f : rep.failed_relations)
        s += "; relation " + f;
    rep.summary = s;
    return rep;
}

} // namespace ruledcent

#include <algorithm>

#include "doctest.h"

#include "ruledcent/arith.hpp"
#include "ruledcent/weights.hpp"

using namespace ruledcent;

constexpr auto T = SurfaceKind::TrivialBundle;
constexpr auto N = SurfaceKind::NonTrivialBundle;
using enum FixedPoint;

static CyclicAction act(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t r)
{
    return make_action(r % 2 == 0 ? T : N, n, a, b, r);
}

TEST_CASE("weight table")
{
    WeightTable t = weights(act(7, 1, 3, 2));
    CHECK(t[P] == WeightPair{1, 3});
    CHECK(t[Q] == WeightPair{1, 4});
    CHECK(t[R] == WeightPair{6, 6});
    CHECK(t[S] == WeightPair{1, 6});
}

TEST_CASE("unique weight points")
{
    CHECK(unique_weight_points(act(5, 1, 2, 0)) == std::vector<FixedPoint>{P, Q, R, S});
    CHECK(unique_weight_points(act(3, 1, 1, 0)) == std::vector<FixedPoint>{P, R});
    CHECK(unique_weight_points(act(2, 1, 1, 0)).empty());
}

TEST_CASE("uniqueness criterion at r = 0")
{
    for (std::int64_t n = 2; n <= 20; ++n)
        for (std::int64_t a = 0; a < n; ++a)
            for (std::int64_t b = 0; b < n; ++b) {
                if (gcd(a, b, n) != 1)
                    continue;
                auto u = unique_weight_points(act(n, a, b, 0));
                auto has = [&](FixedPoint p) { return std::find(u.begin(), u.end(), p) != u.end(); };
                bool base = mod(2 * a, n) != 0 && mod(2 * b, n) != 0;
                bool pr = base && mod(a + b, n) != 0;
                bool qs = base && mod(a - b, n) != 0;
                CHECK(has(P) == pr);
                CHECK(has(R) == pr);
                CHECK(has(Q) == qs);
                CHECK(has(S) == qs);
            }
}

TEST_CASE("edge weights agree with the table and the transport rule")
{
    for (std::int64_t n = 2; n <= 11; ++n)
        for (std::int64_t a = 0; a < n; ++a)
            for (std::int64_t b = 0; b < n; ++b)
                for (std::int64_t r = 0; r <= 7; ++r) {
                    if (gcd(a, b, n) != 1)
                        continue;
                    auto x = act(n, a, b, r);
                    WeightTable t = weights(x);
                    auto e = edge_weights(x);
                    // selfintersections of P-Q, Q-R, R-S, S-P
                    const std::int64_t self[] = {0, -r, 0, r};
                    for (int i = 0; i < 4; ++i) {
                        CHECK(t[e[i].from] == make_pair_mod(e[i].tangent_from, e[i].normal_from, n));
                        CHECK(t[e[i].to] == make_pair_mod(e[i].tangent_to, e[i].normal_to, n));
                        auto far = other_end_weights(e[i].tangent_from, e[i].normal_from, -self[i], n);
                        CHECK(far.tangent == e[i].tangent_to);
                        CHECK(far.normal == e[i].normal_to);
                        CHECK(check_edge_constraint(e[i].normal_from, e[i].normal_to, e[i].tangent_from, self[i], n));
                    }
                }
}

TEST_CASE("check_edge_constraint")
{
    CHECK(check_edge_constraint(5, 1, 2, 2, 7));
    CHECK(check_edge_constraint(1, 5, 2, 2, 7));
    CHECK_FALSE(check_edge_constraint(3, 1, 2, 2, 7));
    CHECK(check_edge_constraint(3, 3, 5, 0, 7));
}

TEST_CASE("reparametrization scales every weight by a^-1")
{
    for (std::int64_t n = 2; n <= 13; ++n)
        for (std::int64_t a = 1; a < n; ++a) {
            auto inv = inverse_mod(a, n);
            if (!inv)
                continue;
            for (std::int64_t b = 0; b < n; ++b)
                for (std::int64_t r = 0; r <= 5; ++r) {
                    auto x = act(n, a, b, r);
                    WeightTable t = weights(x);
                    WeightTable u = weights(reparametrize_to_a_one(x));
                    for (FixedPoint p : all_fixed_points)
                        CHECK(u[p] == make_pair_mod(*inv * t[p].lo, *inv * t[p].hi, n));
                }
        }
}

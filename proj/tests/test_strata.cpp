#include "doctest.h"

#include "ruledcent/arith.hpp"
#include "ruledcent/error.hpp"
#include "ruledcent/strata.hpp"

using namespace ruledcent;

constexpr auto T = SurfaceKind::TrivialBundle;
constexpr auto N = SurfaceKind::NonTrivialBundle;

static std::int64_t count_direct(std::int64_t n, std::int64_t b, std::int64_t s)
{
    std::int64_t c = 0;
    for (std::int64_t j = 1; j <= s - 1; ++j)
        if (mod(j - b, n) == 0)
            ++c;
    return c;
}

TEST_CASE("stratum_codim examples")
{
    CHECK(stratum_codim(8, 3, 4) == 1);
    CHECK(stratum_codim(8, 3, 2) == 0);
    CHECK(stratum_codim(2, 1, 6) == 3);
    CHECK(codim_oracle_even(7, 1, 2) == 1);
    CHECK(codim_oracle_even(7, 5, 2) == 0);
    CHECK(codim_oracle_odd(8, 2, 1) == 1);
    CHECK(codim_oracle_odd(5, 4, 1) == 0);
}

TEST_CASE("closed form, direct count and both oracles agree")
{
    for (std::int64_t n = 2; n <= 30; ++n)
        for (std::int64_t b = -n; b < 2 * n; ++b)
            for (std::int64_t s = 0; s <= 25; ++s) {
                std::int64_t c = stratum_codim(n, b, s);
                CHECK(c == count_direct(n, b, s));
                if (s >= 2 && s % 2 == 0)
                    CHECK(c == codim_oracle_even(n, b, s / 2));
                if (s % 2 == 1)
                    CHECK(c == codim_oracle_odd(n, b, s / 2));
            }
}

TEST_CASE("stratification of worked examples")
{
    auto f = make_form(T, Rational(3));
    auto st = stratification(f, make_action(T, 8, 1, 3, 2));
    REQUIRE(st.size() == 2);
    CHECK(st[0].r == 2);
    CHECK(st[0].complex_codim == 0);
    CHECK(st[0].is_open);
    CHECK(st[1].r == 4);
    CHECK(st[1].complex_codim == 1);
    CHECK(st[1].real_codim_nonequivariant == 6);

    auto g = stratification(make_form(T, Rational(7, 2)), make_action(T, 8, 1, 6, 2));
    REQUIRE(g.size() == 2);
    CHECK(g[1].r == 6);
    CHECK(g[1].b_in_torus == 2);
    CHECK(g[0].complex_codim == 0);
    CHECK(g[1].complex_codim == 1);

    auto h = stratification(make_form(T, Rational(5, 2)), make_action(T, 6, 2, 1, 2));
    REQUIRE(h.size() == 1);
    CHECK(h[0].complex_codim == 0);

    CHECK_THROWS_AS(stratification(make_form(T, Rational(2)), make_action(T, 3, 2, 1, 0)), Error);
}

TEST_CASE("stratum shapes over a grid")
{
    const Rational lambdas[] = {Rational(1), Rational(3, 2), Rational(2), Rational(5, 2), Rational(3), Rational(7, 2),
                                Rational(4)};
    for (SurfaceKind s : {T, N})
        for (const Rational& l : lambdas) {
            if (s == N && l == Rational(1))
                continue;
            auto form = make_form(s, l);
            for (std::int64_t n = 2; n <= 18; ++n)
                for (std::int64_t r = s == T ? 0 : 1; r <= max_hamiltonian_r(form); r += 2)
                    for (std::int64_t a = 0; a < n; ++a)
                        for (std::int64_t b = 0; b < n; ++b) {
                            if (gcd(a, b, n) != 1)
                                continue;
                            auto x = make_action(s, n, a, b, r);
                            auto c = classify(form, x);
                            if (!c.resolved())
                                continue;
                            auto st = stratification(c, x);
                            if (c.two_tori()) {
                                REQUIRE(st.size() == 2);
                                CHECK(st[0].complex_codim + st[1].complex_codim == 1);
                                CHECK(st[0].complex_codim * st[1].complex_codim == 0);
                            } else {
                                REQUIRE(st.size() == 1);
                                CHECK(st[0].complex_codim == 0);
                                CHECK(st[0].is_open);
                            }
                            for (const auto& t : st)
                                CHECK(t.real_codim_nonequivariant == (t.r == 0 ? 0 : 2 * (t.r - 1)));
                        }
        }
}

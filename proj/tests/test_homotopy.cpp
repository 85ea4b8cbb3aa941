#include "doctest.h"

#include "ruledcent/arith.hpp"
#include "ruledcent/homotopy.hpp"
#include "ruledcent/strata.hpp"

using namespace ruledcent;

constexpr auto T = SurfaceKind::TrivialBundle;
constexpr auto N = SurfaceKind::NonTrivialBundle;

static HomotopyType type_of(SurfaceKind s, Rational l, std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t r)
{
    auto f = make_form(s, l);
    auto x = make_action(s, n, a, b, r);
    return centralizer_type(classify(f, x), x, f).type;
}

using enum HomotopyType;

TEST_CASE("centralizer table lookups")
{
    CHECK(type_of(T, Rational(5, 2), 6, 2, 1, 2) == Torus2);
    CHECK(type_of(T, 3, 4, 2, 1, 2) == Torus2xZ2);
    CHECK(type_of(T, 2, 5, 0, 1, 2) == S1xSO3);
    CHECK(type_of(N, 3, 5, 0, 1, 3) == U2);
    CHECK(type_of(T, 3, 8, 1, 3, 2) == OmegaS3xT3);
    CHECK(type_of(T, 1, 5, 1, 1, 0) == Torus2xZ2);
    CHECK(type_of(T, 1, 5, 1, 4, 0) == Torus2xZ2);
    CHECK(type_of(T, 1, 5, 4, 1, 0) == Torus2xZ2);
    CHECK(type_of(T, 1, 5, 2, 2, 0) == Torus2xZ2); // same subgroup as (1,1)
    CHECK(type_of(T, 1, 5, 1, 2, 0) == Torus2);
    CHECK(type_of(T, 1, 2, 1, 1, 0) == Torus2xZ8);
    CHECK(type_of(T, 1, 2, 0, 1, 0) == S1xSO3xZ2);
    CHECK(type_of(T, 1, 6, 3, 1, 0) == Torus2xZ2);
    CHECK(type_of(T, 1, 6, 0, 1, 0) == S1xSO3xZ2);
    CHECK(type_of(T, 2, 9, 3, 1, 0) == Torus2);
    CHECK(type_of(T, Rational(3, 2), 6, 3, 1, 0) == Torus2xZ2);
    CHECK(type_of(T, 2, 3, 0, 1, 0) == S1xSO3xZ2);
}

TEST_CASE("pushout data for H2")
{
    auto f = make_form(T, Rational(3));
    auto x = make_action(T, 8, 1, 3, 2);
    auto ct = centralizer_type(classify(f, x), x, f);
    REQUIRE(ct.pushout.has_value());
    CHECK(ct.pushout->r == 2);
    CHECK(ct.pushout->r_prime == 4);
    CHECK(ct.pushout->circle_b == 3);
    CHECK(ct.pushout->circle_b_prime == 3);
}

TEST_CASE("centralizer depends only on the subgroup and has two strata exactly for OmegaS3xT3")
{
    const Rational lambdas[] = {Rational(1), Rational(3, 2), Rational(2), Rational(5, 2), Rational(3)};
    for (SurfaceKind s : {T, N})
        for (const Rational& l : lambdas) {
            if (s == N && l == Rational(1))
                continue;
            auto form = make_form(s, l);
            for (std::int64_t n = 2; n <= 14; ++n)
                for (std::int64_t r = s == T ? 0 : 1; r <= max_hamiltonian_r(form); r += 2)
                    for (std::int64_t a = 0; a < n; ++a)
                        for (std::int64_t b = 0; b < n; ++b) {
                            if (gcd(a, b, n) != 1)
                                continue;
                            auto x = make_action(s, n, a, b, r);
                            auto c = classify(form, x);
                            if (!c.resolved())
                                continue;
                            auto t = centralizer_type(c, x, form).type;
                            CHECK((t == OmegaS3xT3) == (stratification(c, x).size() == 2));
                            for (std::int64_t k = 2; k < n; ++k) {
                                if (gcd(k, n) != 1)
                                    continue;
                                auto y = make_action(s, n, k * a, k * b, r);
                                auto cy = classify(form, y);
                                CHECK(centralizer_type(cy, y, form).type == t);
                            }
                        }
        }
}

TEST_CASE("poincare coefficients")
{
    CHECK(poincare_coeffs(OmegaS3xT3, 10) == std::vector<std::int64_t>{1, 3, 4, 4, 4, 4, 4, 4, 4, 4, 4});
    CHECK(poincare_coeffs(Torus2, 4) == std::vector<std::int64_t>{1, 2, 1, 0, 0});
    CHECK(poincare_coeffs(Torus2xZ2, 3) == std::vector<std::int64_t>{2, 4, 2, 0});
    CHECK(poincare_coeffs(Torus2xZ8, 2) == std::vector<std::int64_t>{8, 16, 8});
    CHECK(poincare_coeffs(S1xSO3, 5) == std::vector<std::int64_t>{1, 1, 0, 1, 1, 0});
    CHECK(poincare_coeffs(U2, 5) == std::vector<std::int64_t>{1, 1, 0, 1, 1, 0});
    CHECK(poincare_coeffs(S1xSO3xZ2, 4) == std::vector<std::int64_t>{2, 2, 0, 2, 2});
    CHECK(poincare_coeffs(Torus2, 0) == std::vector<std::int64_t>{1});
    CHECK(poincare_coeffs(Torus2, -1).empty());
    // Euler characteristic: zero for every positive-dimensional compact group
    for (HomotopyType t : {Torus2, Torus2xZ2, Torus2xZ8, S1xSO3, S1xSO3xZ2, U2}) {
        auto p = poincare_coeffs(t, 6);
        std::int64_t chi = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            chi += (i % 2 ? -1 : 1) * p[i];
        CHECK(chi == 0);
        CHECK(p[0] == component_count(t));
    }
}

TEST_CASE("weyl group")
{
    CHECK(weyl_group(make_form(T, Rational(1)), 0) == WeylGroup::D4);
    CHECK(weyl_group(make_form(T, Rational(2)), 0) == WeylGroup::D2);
    CHECK(weyl_group(make_form(T, Rational(2)), 2) == WeylGroup::D1);
    CHECK(weyl_group(make_form(N, Rational(2)), 1) == WeylGroup::D1);
    CHECK_THROWS(weyl_group(make_form(T, Rational(2)), 4));
}

#include <algorithm>
#include <set>

#include "doctest.h"

#include "ruledcent/arith.hpp"
#include "ruledcent/error.hpp"
#include "ruledcent/extensions.hpp"
#include "ruledcent/weights.hpp"

using namespace ruledcent;

constexpr auto T = SurfaceKind::TrivialBundle;
constexpr auto N = SurfaceKind::NonTrivialBundle;

static SymplecticForm form(SurfaceKind s, std::int64_t p, std::int64_t q = 1) { return make_form(s, Rational(p, q)); }

using RSet = std::vector<std::int64_t>;

TEST_CASE("circle extensions, worked cases")
{
    auto f = form(T, 3);
    auto e = circle_toric_extensions(f, 1, 3, 2);
    CHECK(e.r_values() == RSet{2, 4});
    CHECK(e.tori[1].circle_b == 3); // b > r
    CHECK(e.completeness == Completeness::Complete);

    CHECK(circle_toric_extensions(f, 2, 1, 2).r_values() == RSet{2});
    CHECK(circle_toric_extensions(f, 1, 0, 2).r_values() == RSet{2});
    CHECK(circle_toric_extensions(f, 1, 2, 2).r_values() == RSet{2});
    CHECK(circle_toric_extensions(f, -1, -2, 2).r_values() == RSet{2}); // b = ar

    // r > b > 0 with 2b - r < 0: the circle sits in T_{r-2b} as (1,-b)
    auto g = circle_toric_extensions(form(T, 4), 1, 1, 6);
    CHECK(g.r_values() == RSet{4, 6});
    CHECK(g.tori[1].circle_b == -1);
    // r > b, 2b - r > 0: (1,b)
    auto h = circle_toric_extensions(form(T, 4), 1, 4, 6);
    CHECK(h.r_values() == RSet{2, 6});
    CHECK(h.tori[1].circle_b == 4);
    // b < 0: (1,-b)
    auto k = circle_toric_extensions(form(T, 4), 1, -1, 2);
    CHECK(k.r_values() == RSet{2, 4});
    CHECK(k.tori[1].circle_b == 1);

    // bound is strict: |2b - r| + eps < 2 lambda
    CHECK(circle_toric_extensions(form(T, 2), 1, 3, 2).r_values() == RSet{2});
    CHECK(circle_toric_extensions(form(N, 3), 1, 3, 1).r_values() == RSet{1});
    CHECK(circle_toric_extensions(form(N, 7, 2), 1, 3, 1).r_values() == RSet{1, 5});
    CHECK_THROWS_AS(circle_toric_extensions(f, 1, 3, 6), Error);
}

/* Oracle: a circle S^1(1,b') in T_s is equivalent to S^1(1,b) in T_r only if the
   integer weight collections agree.  Search all s, b' directly. */
static std::multiset<std::pair<std::int64_t, std::int64_t>> circle_weights(std::int64_t b, std::int64_t r)
{
    auto p = [](std::int64_t x, std::int64_t y) { return std::make_pair(std::min(x, y), std::max(x, y)); };
    return {p(1, b), p(1, -b), p(-1, r - b), p(-1, b - r)};
}

TEST_CASE("circle extension matches the weight-search oracle")
{
    for (std::int64_t two_l = 3; two_l <= 12; ++two_l) {
        Rational l(two_l, 2);
        for (SurfaceKind s : {T, N}) {
            if (s == N && two_l <= 2)
                continue;
            auto f = make_form(s, l);
            for (std::int64_t r = s == T ? 0 : 1; r <= max_hamiltonian_r(f); r += 2)
                for (std::int64_t b = -15; b <= 15; ++b) {
                    if (b == 0 || b == r)
                        continue;
                    auto e = circle_toric_extensions(f, 1, b, r);
                    std::set<std::int64_t> want{r};
                    for (std::int64_t s2 = s == T ? 0 : 1; s2 <= max_hamiltonian_r(f); s2 += 2)
                        for (std::int64_t b2 = -20; b2 <= 20; ++b2)
                            if (s2 != r && circle_weights(b2, s2) == circle_weights(b, r))
                                want.insert(s2);
                    auto got = e.r_values();
                    CHECK(std::set<std::int64_t>(got.begin(), got.end()) == want);
                    if (e.two_tori())
                        CHECK(circle_weights(e.tori[1].circle_b, e.tori[1].r) == circle_weights(b, r));
                }
        }
    }
}

TEST_CASE("a = -1 goes through the normalizer")
{
    auto f = form(T, 4);
    for (std::int64_t r = 0; r <= 6; r += 2)
        for (std::int64_t b = -9; b <= 9; ++b) {
            if (gcd(1, b) != 1)
                continue;
            CHECK(circle_toric_extensions(f, -1, b, r).r_values() == circle_toric_extensions(f, 1, b + r, r).r_values());
        }
}

TEST_CASE("cyclic extensions, worked cases")
{
    auto e = cyclic_toric_extensions(form(T, 3), make_action(T, 8, 1, 3, 2));
    CHECK(e.r_values() == RSet{2, 4});
    CHECK(e.tori[1].circle_b == 3);
    CHECK(e.tori[1].provenance == Provenance::Via2bMinusR);

    auto g = cyclic_toric_extensions(form(T, 7, 2), make_action(T, 8, 1, 6, 2));
    CHECK(g.r_values() == RSet{2, 6});
    CHECK(g.tori[1].circle_b == 2);
    CHECK(g.tori[1].provenance == Provenance::ViaPlus2n);

    CHECK(cyclic_toric_extensions(form(T, 3), make_action(T, 8, 1, 0, 2)).r_values() == RSet{2});
    CHECK(cyclic_toric_extensions(form(T, 5, 2), make_action(T, 6, 2, 1, 2)).r_values() == RSet{2});

    auto regime = [](SymplecticForm f, CyclicAction x) {
        try {
            cyclic_toric_extensions(f, x);
        } catch (const Error& err) {
            return err.code() == ErrorCode::OutOfRegime;
        }
        return false;
    };
    CHECK(regime(form(T, 5), make_action(T, 8, 1, 3, 2)));   // n < 2 lambda
    CHECK(regime(form(T, 3), make_action(T, 8, 1, 1, 2)));   // 2b = r
    CHECK(regime(form(T, 3), make_action(T, 7, 1, 1, 0)));   // r = 0
    CHECK_FALSE(regime(form(N, 5, 2), make_action(N, 5, 1, 1, 3))); // n = 2 lambda > r + 1
}

// candidates decided by brute force over all tori T_s for which some b' reproduces the weights mod n
TEST_CASE("cyclic extensions agree with the circle extension of the underlying circle")
{
    for (std::int64_t two_l = 3; two_l <= 8; ++two_l) {
        Rational l(two_l, 2);
        for (SurfaceKind s : {T, N}) {
            if (s == N && two_l <= 2)
                continue;
            auto f = make_form(s, l);
            for (std::int64_t n = 2; n <= 16; ++n) {
                if (Rational(n) < Rational(2) * l)
                    continue;
                for (std::int64_t r = s == T ? 2 : 1; r <= max_hamiltonian_r(f); r += 2)
                    for (std::int64_t b = 0; b < n; ++b) {
                        if (2 * b == r)
                            continue;
                        auto x = make_action(s, n, 1, b, r);
                        auto e = cyclic_toric_extensions(f, x);
                        if (!e.two_tori())
                            continue;
                        const auto& t = e.tori[1];
                        std::int64_t lift = t.provenance == Provenance::ViaPlus2n ? b - n : b;
                        auto c = circle_toric_extensions(f, 1, lift, r);
                        REQUIRE(c.two_tori());
                        CHECK(c.tori[1].r == t.r);
                        CHECK(mod(c.tori[1].circle_b, n) == t.circle_b);
                        // equivariant symplectomorphism preserves the weights mod n
                        auto w0 = weights(x).at, w1 = weights(make_action(s, n, 1, t.circle_b, t.r)).at;
                        std::sort(w0.begin(), w0.end());
                        std::sort(w1.begin(), w1.end());
                        CHECK(w0 == w1);
                    }
            }
        }
    }
}

TEST_CASE("circle chain")
{
    auto f = form(T, 7, 2);
    auto e = cyclic_extensions_via_circle_chain(f, make_action(T, 2, 1, 1, 2));
    CHECK(e.completeness == Completeness::LowerBound);
    CHECK(e.r_values() == RSet{0, 2, 4, 6});
    CHECK(cyclic_extensions_via_circle_chain(form(T, 5, 2), make_action(T, 6, 2, 1, 2)).r_values() == RSet{2});

    // with lambda large, Z_n(1,1;2) reaches every T_{2kn} below 2 lambda
    auto big = form(T, 30);
    for (std::int64_t n = 3; n <= 9; ++n) {
        auto got = cyclic_extensions_via_circle_chain(big, make_action(T, n, 1, 1, 2)).r_values();
        for (std::int64_t k = 1; 2 * k * n < 60; ++k)
            CHECK(std::binary_search(got.begin(), got.end(), 2 * k * n));
    }
}

TEST_CASE("chain contains the cyclic answer")
{
    for (std::int64_t two_l = 4; two_l <= 8; ++two_l) {
        auto f = make_form(T, Rational(two_l, 2));
        for (std::int64_t n = 2; n <= 14; ++n) {
            if (Rational(n) < Rational(two_l))
                continue;
            for (std::int64_t r = 2; r <= max_hamiltonian_r(f); r += 2)
                for (std::int64_t b = 0; b < n; ++b) {
                    if (2 * b == r)
                        continue;
                    auto x = make_action(T, n, 1, b, r);
                    auto c = cyclic_toric_extensions(f, x).r_values();
                    auto ch = cyclic_extensions_via_circle_chain(f, x).r_values();
                    CHECK(std::includes(ch.begin(), ch.end(), c.begin(), c.end()));
                }
        }
    }
}

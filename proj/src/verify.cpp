#include "ruledcent/verify.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

#include "fixtures_data.hpp"
#include "ruledcent/arith.hpp"
#include "ruledcent/classify.hpp"
#include "ruledcent/error.hpp"
#include "ruledcent/homotopy.hpp"
#include "ruledcent/strata.hpp"

namespace ruledcent {

std::string_view builtin_fixtures() { return detail::fixtures_json; }

CheckResult check_group_presentation(std::span<const std::int64_t> ns, const MoveGenerators& gens)
{
    GroupPresentationReport rep = verify_group_presentation(ns, gens);
    return {"group presentation", rep.passed, rep.summary};
}

CheckResult check_orbit_sweep(std::int64_t n_max)
{
    std::int64_t count = 0;
    for (std::int64_t n = 2; n <= n_max; ++n) {
        const std::int64_t m = 2 * n;
        for (std::int64_t sa : {1, -1}) {
            if (sa == -1 && n == 2)
                continue; // -1 = 1
            for (std::int64_t b = 0; b < n; ++b)
                for (std::int64_t r = 1; r < m; ++r) {
                    const std::int64_t d = mod(2 * b - sa * r, m);
                    if (d == 0)
                        continue;
                    const std::set<std::int64_t> expected{mod(r, m), mod(-r, m), d, mod(-d, m)};
                    const auto o = orbit(make_triple(n, sa, b, r));
                    std::set<std::int64_t> got;
                    for (const TripleMod& t : o)
                        got.insert(t.r);
                    ++count;
                    if (got != expected || o.size() > 16)
                        return {"orbit sweep", false,
                                "Z_" + std::to_string(n) + "(" + std::to_string(sa) + "," + std::to_string(b) + ";"
                                    + std::to_string(r) + "): orbit size " + std::to_string(o.size())
                                    + ", r' set mismatch"};
                }
        }
    }
    return {"orbit sweep", true, std::to_string(count) + " triples, n <= " + std::to_string(n_max)};
}

CheckResult check_codim_sweep(std::int64_t n_max, std::int64_t k_max)
{
    std::int64_t count = 0;
    for (std::int64_t n = 2; n <= n_max; ++n)
        for (std::int64_t b = 0; b < n; ++b)
            for (std::int64_t k = 0; k <= k_max; ++k) {
                auto fail = [&](std::int64_t s, std::int64_t got, std::int64_t want) {
                    return CheckResult{"codim sweep", false,
                                       "n=" + std::to_string(n) + " b=" + std::to_string(b) + " s="
                                           + std::to_string(s) + ": formula " + std::to_string(got) + ", oracle "
                                           + std::to_string(want)};
                };
                if (k >= 1) {
                    auto got = stratum_codim(n, b, 2 * k), want = codim_oracle_even(n, b, k);
                    if (got != want)
                        return fail(2 * k, got, want);
                    ++count;
                }
                auto got = stratum_codim(n, b, 2 * k + 1), want = codim_oracle_odd(n, b, k);
                if (got != want)
                    return fail(2 * k + 1, got, want);
                ++count;
            }
    return {"codim sweep", true, std::to_string(count) + " cases, n <= " + std::to_string(n_max)};
}

CheckResult check_poincare(int max_deg)
{
    // (1+t)^2/(1-t): partial sums of 1, 2, 1
    std::vector<std::int64_t> want;
    for (int d = 0; d <= max_deg; ++d)
        want.push_back(d == 0 ? 1 : d == 1 ? 3 : 4);
    auto got = poincare_coeffs(HomotopyType::OmegaS3xT3, max_deg);
    if (got != want)
        return {"poincare", false, "OmegaS3xT3 coefficients differ from (1+t)^2/(1-t)"};
    return {"poincare", true, "OmegaS3xT3 to degree " + std::to_string(max_deg)};
}

CheckResult check_fixtures(std::string_view fixtures_json)
{
    nlohmann::json rows;
    try {
        rows = nlohmann::json::parse(fixtures_json);
    } catch (const nlohmann::json::exception& e) {
        return {"fixtures", false, std::string("cannot parse fixture table: ") + e.what()};
    }
    int passed = 0;
    for (const auto& row : rows) {
        const std::string tag = row.value("row", std::string("?"));
        try {
            SymplecticForm form = make_form(parse_surface(row.at("surface").get<std::string>()),
                                            Rational::parse(row.at("lambda").get<std::string>()));
            CyclicAction x = make_action(form.surface, row.at("n"), row.at("a"), row.at("b"), row.at("r"));
            ActionClass c = classify(form, x);
            std::string cls = class_label(c);
            std::string cz = c.resolved() ? to_string(centralizer_type(c, x, form).type) : "";
            if (cls != row.at("class").get<std::string>() || cz != row.at("centralizer").get<std::string>())
                return {"fixtures", false, "row '" + tag + "': got " + cls + " / " + cz};
        } catch (const Error& e) {
            return {"fixtures", false, "row '" + tag + "': " + std::string(error_name(e.code())) + ": " + e.what()};
        }
        ++passed;
    }
    return {"fixtures", true, std::to_string(passed) + " table rows"};
}

} // namespace ruledcent

#include "ruledcent/record.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "ruledcent/arith.hpp"
#include "ruledcent/error.hpp"

namespace ruledcent {

using json = nlohmann::ordered_json;

ClassificationRecord build_record(const SymplecticForm& form, const CyclicAction& x)
{
    require_hamiltonian(form, x.r);
    ClassificationRecord rec{form, x, true, true, weights(x), {}, classify(form, x), {}, std::nullopt,
                             action_warnings(x)};
    if (rec.cls.resolved()) {
        rec.extensions = *rec.cls.extensions;
        rec.strata = stratification(rec.cls, x);
        rec.centralizer = centralizer_type(rec.cls, x, form);
    } else {
        try {
            rec.extensions = cyclic_toric_extensions(form, x);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::OutOfRegime)
                throw;
            rec.extensions = cyclic_extensions_via_circle_chain(form, x);
        }
    }
    return rec;
}

static json action_json(const CyclicAction& y)
{
    return {{"n", y.n}, {"a", y.a}, {"b", y.b}, {"r", y.r}};
}

json to_json(const ClassificationRecord& rec, int poincare_degree)
{
    json j;
    j["input"] = {{"surface", std::string(surface_name(rec.form.surface))},
                  {"lambda", rec.form.lambda.to_string()},
                  {"n", rec.action.n},
                  {"a", rec.action.a},
                  {"b", rec.action.b},
                  {"r", rec.action.r}};
    j["effective"] = rec.effective;
    j["hamiltonian"] = rec.hamiltonian;
    json w;
    for (FixedPoint p : all_fixed_points)
        w[std::string(1, point_name(p))] = {rec.weights[p].lo, rec.weights[p].hi};
    j["weights"] = w;

    json tori = json::array();
    for (const ToricExtension& e : rec.extensions.tori)
        tori.push_back({{"r", e.r}, {"circle_b", e.circle_b}, {"provenance", to_string(e.provenance)}});
    j["extensions"] = {{"completeness", to_string(rec.extensions.completeness)}, {"tori", tori}};

    json c;
    c["name"] = to_string(rec.cls.name);
    if (rec.cls.reason) {
        c["reason_code"] = to_string(*rec.cls.reason);
        c["reason"] = describe(*rec.cls.reason);
    }
    c["normalized"] = rec.cls.normalized ? action_json(*rec.cls.normalized) : json(nullptr);
    j["class"] = c;

    json strata = json::array();
    for (const Stratum& s : rec.strata)
        strata.push_back({{"r", s.r},
                          {"b_in_torus", s.b_in_torus},
                          {"complex_codim", s.complex_codim},
                          {"real_codim_nonequivariant", s.real_codim_nonequivariant},
                          {"open", s.is_open}});
    j["strata"] = strata;

    if (rec.centralizer) {
        const CentralizerType& ct = *rec.centralizer;
        json cz;
        cz["type"] = to_string(ct.type);
        cz["display"] = display_name(ct.type);
        cz["components"] = component_count(ct.type);
        cz["poincare"] = poincare_coeffs(ct.type, poincare_degree);
        if (ct.pushout) {
            const PushoutPresentation& p = *ct.pushout;
            cz["pushout"] = {{"r", p.r},
                             {"r_prime", p.r_prime},
                             {"circle", {p.circle_a, p.circle_b}},
                             {"circle_prime", {p.circle_a_prime, p.circle_b_prime}}};
        }
        j["centralizer"] = cz;
    } else {
        j["centralizer"] = nullptr;
    }
    j["warnings"] = rec.warnings;
    return j;
}

static std::string join(const std::vector<std::int64_t>& v, const char* sep)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

std::string to_text(const ClassificationRecord& rec, bool color)
{
    const char* on = color ? (rec.cls.resolved() ? "\x1b[1;32m" : "\x1b[1;33m") : "";
    const char* off = color ? "\x1b[0m" : "";
    const CyclicAction& x = rec.action;
    std::ostringstream o;
    o << "action      Z_" << x.n << "(" << x.a << "," << x.b << ";" << x.r << ") on "
      << surface_name(rec.form.surface) << ", lambda = " << rec.form.lambda.to_pretty() << "\n";
    o << "class       " << on << class_label(rec.cls) << off << "\n";
    if (rec.cls.reason)
        o << "reason      " << describe(*rec.cls.reason) << "\n";
    if (rec.cls.normalized)
        o << "normalized  Z_" << x.n << "(1," << rec.cls.normalized->b << ";" << x.r << ")\n";
    o << "weights    ";
    for (FixedPoint p : all_fixed_points)
        o << ' ' << point_name(p) << to_string(rec.weights[p]);
    o << "\n";
    o << "extensions  " << (rec.extensions.completeness == Completeness::LowerBound ? ">= " : "") << "{"
      << join(rec.extensions.r_values(), ", ") << "}\n";
    for (const Stratum& s : rec.strata)
        o << "stratum     r=" << s.r << " b=" << s.b_in_torus << " codim " << s.complex_codim
          << (s.is_open ? " (open)" : "") << "\n";
    if (rec.centralizer) {
        o << "centralizer " << display_name(rec.centralizer->type);
        if (rec.centralizer->pushout) {
            const auto& p = *rec.centralizer->pushout;
            o << ", pushout T_" << p.r << " <- S^1 -> T_" << p.r_prime;
        }
        o << "\n";
    }
    for (const std::string& w : rec.warnings)
        o << "warning     " << w << "\n";
    return o.str();
}

static ScanRow make_row(const SymplecticForm& form, std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t r)
{
    CyclicAction x = make_action(form.surface, n, a, b, r);
    ClassificationRecord rec = build_record(form, x);
    ScanRow row{n, a, b, r, class_label(rec.cls), {}, {}, {}, {}};
    row.extensions = (rec.extensions.completeness == Completeness::LowerBound ? ">=" : "")
                     + join(rec.extensions.r_values(), ";");
    std::vector<std::int64_t> codims;
    for (const Stratum& s : rec.strata)
        codims.push_back(s.complex_codim);
    row.codims = join(codims, ";");
    if (rec.centralizer) {
        row.centralizer = to_string(rec.centralizer->type);
        row.components = std::to_string(component_count(rec.centralizer->type));
    }
    return row;
}

std::vector<ScanRow> scan(const SymplecticForm& form, std::int64_t n_lo, std::int64_t n_hi, std::int64_t r_max,
                          unsigned threads)
{
    if (n_lo < 2 || n_hi < n_lo)
        throw Error(ErrorCode::TrivialGroup, "n range must satisfy 2 <= lo <= hi");
    r_max = std::min(r_max, max_hamiltonian_r(form));
    const std::int64_t r0 = form.surface == SurfaceKind::TrivialBundle ? 0 : 1;
    const std::size_t count = static_cast<std::size_t>(n_hi - n_lo + 1);
    std::vector<std::vector<ScanRow>> per_n(count);

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            const std::int64_t n = n_lo + static_cast<std::int64_t>(i);
            for (std::int64_t r = r0; r <= r_max; r += 2)
                for (std::int64_t a = 0; a < n; ++a)
                    for (std::int64_t b = 0; b < n; ++b)
                        if (gcd(a, b, n) == 1)
                            per_n[i].push_back(make_row(form, n, a, b, r));
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(work);
    work();
    pool.clear();

    std::vector<ScanRow> rows;
    for (auto& v : per_n)
        rows.insert(rows.end(), v.begin(), v.end());
    std::sort(rows.begin(), rows.end(), [](const ScanRow& p, const ScanRow& q) {
        return std::tie(p.n, p.r, p.a, p.b) < std::tie(q.n, q.r, q.a, q.b);
    });
    return rows;
}

static std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string scan_csv(const SymplecticForm& form, const std::vector<ScanRow>& rows)
{
    std::ostringstream o;
    o << "surface,lambda,n,a,b,r,effective,class,extensions,codims,centralizer,components\r\n";
    const std::string surface(surface_name(form.surface));
    const std::string lambda = form.lambda.to_string();
    for (const ScanRow& row : rows)
        o << surface << ',' << csv_field(lambda) << ',' << row.n << ',' << row.a << ',' << row.b << ',' << row.r
          << ",true," << csv_field(row.cls) << ',' << csv_field(row.extensions) << ',' << csv_field(row.codims)
          << ',' << csv_field(row.centralizer) << ',' << csv_field(row.components) << "\r\n";
    return o.str();
}

} // namespace ruledcent

#include "ruledcent/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "ruledcent/error.hpp"
#include "ruledcent/polytope.hpp"
#include "ruledcent/record.hpp"
#include "ruledcent/verify.hpp"

namespace ruledcent::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct ActionArgs {
    std::string surface;
    std::string lambda;
    std::int64_t n = 0, a = 0, b = 0, r = 0;
    std::string format = "text";
};

void add_action(CLI::App* cmd, ActionArgs& args, bool need_surface, bool need_lambda)
{
    auto* s = cmd->add_option("--surface", args.surface, "s2xs2 or cp2blowup");
    if (need_surface)
        s->required();
    auto* l = cmd->add_option("--lambda", args.lambda, "symplectic parameter, integer or p/q");
    if (need_lambda)
        l->required();
    cmd->add_option("--n", args.n, "group order")->required();
    cmd->add_option("--a", args.a, "weight on the first coordinate")->required();
    cmd->add_option("--b", args.b, "weight on the second coordinate")->required();
    cmd->add_option("--r", args.r, "Hirzebruch index")->required();
}

void add_format(CLI::App* cmd, std::string& format, std::vector<std::string> choices)
{
    format = choices.front();
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember(choices));
}

SurfaceKind surface_of(const std::string& name, std::int64_t r)
{
    if (!name.empty())
        return parse_surface(name);
    return r % 2 == 0 ? SurfaceKind::TrivialBundle : SurfaceKind::NonTrivialBundle;
}

bool write_output(const std::string& path, const std::string& data, std::ostream& out, std::ostream& err)
{
    if (path.empty()) {
        out << data;
        return true;
    }
    std::ofstream f(path, std::ios::binary);
    f << data;
    if (!f) {
        err << "cannot write " << path << "\n";
        return false;
    }
    return true;
}

int cmd_classify(const ActionArgs& args, bool strict, std::ostream& out, const Context& ctx)
{
    SymplecticForm form = make_form(parse_surface(args.surface), Rational::parse(args.lambda));
    CyclicAction x = make_action(form.surface, args.n, args.a, args.b, args.r);
    ClassificationRecord rec = build_record(form, x);
    if (args.format == "json")
        out << to_json(rec).dump(2) << "\n";
    else
        out << to_text(rec, ctx.color);
    return strict && !rec.cls.resolved() ? UnresolvedStrict : Ok;
}

int cmd_scan(const std::string& surface, const std::string& lambda, const std::string& range,
             std::optional<std::int64_t> r_max, unsigned threads, const std::string& path, std::ostream& out,
             std::ostream& err)
{
    SymplecticForm form = make_form(parse_surface(surface), Rational::parse(lambda));
    auto dots = range.find("..");
    if (dots == std::string::npos)
        throw Error(ErrorCode::ParseError, "--n-range must look like lo..hi");
    std::int64_t lo = 0, hi = 0;
    try {
        lo = std::stoll(range.substr(0, dots));
        hi = std::stoll(range.substr(dots + 2));
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "--n-range must look like lo..hi");
    }
    auto rows = scan(form, lo, hi, r_max.value_or(max_hamiltonian_r(form)), threads);
    return write_output(path, scan_csv(form, rows), out, err) ? Ok : InvalidInput;
}

int cmd_verify(const std::vector<std::int64_t>& ns, const std::string& fixtures_path, std::ostream& out,
               const Context& ctx)
{
    std::string fixtures(builtin_fixtures());
    if (!fixtures_path.empty()) {
        std::ifstream f(fixtures_path, std::ios::binary);
        if (!f)
            throw Error(ErrorCode::ParseError, "cannot read " + fixtures_path);
        fixtures.assign(std::istreambuf_iterator<char>(f), {});
    }
    std::vector<CheckResult> results;
    results.push_back(check_group_presentation(ns, ctx.verify_generators.value_or(standard_generators())));
    results.push_back(check_orbit_sweep(12));
    results.push_back(check_codim_sweep(40, 10));
    results.push_back(check_poincare(10));
    results.push_back(check_fixtures(fixtures));
    bool ok = true;
    for (const CheckResult& r : results) {
        out << (r.ok ? "ok   " : "FAIL ") << r.name << ": " << r.detail << "\n";
        ok = ok && r.ok;
    }
    return ok ? Ok : VerifyFailed;
}

int cmd_polytope(const ActionArgs& args, const std::string& path, std::optional<std::int64_t> n,
                 std::optional<std::int64_t> a, std::optional<std::int64_t> b, std::ostream& out, std::ostream& err)
{
    SymplecticForm form = make_form(surface_of(args.surface, args.r), Rational::parse(args.lambda));
    MomentPolytope p = moment_polytope(form, args.r);
    std::optional<WeightTable> deco;
    if (n || a || b) {
        if (!(n && a && b))
            throw Error(ErrorCode::ParseError, "decorations need all of --n, --a, --b");
        deco = weights(make_action(form.surface, *n, *a, *b, args.r));
    }
    std::string data = args.format == "json" ? render_json(p) : render_svg(p, deco);
    return write_output(path, data, out, err) ? Ok : InvalidInput;
}

int cmd_weights(const ActionArgs& args, std::ostream& out)
{
    CyclicAction x = make_action(surface_of(args.surface, args.r), args.n, args.a, args.b, args.r);
    WeightTable t = weights(x);
    if (args.format == "json") {
        ojson j;
        for (FixedPoint p : all_fixed_points)
            j[std::string(1, point_name(p))] = {t[p].lo, t[p].hi};
        out << j.dump(2) << "\n";
    } else {
        for (FixedPoint p : all_fixed_points)
            out << point_name(p) << ' ' << to_string(t[p]) << "\n";
    }
    return Ok;
}

int cmd_orbit(const ActionArgs& args, std::ostream& out)
{
    auto o = orbit(make_triple(args.n, args.a, args.b, args.r));
    if (args.format == "json") {
        ojson j = ojson::array();
        for (const TripleMod& t : o)
            j.push_back({{"a", t.a}, {"b", t.b}, {"r", t.r}});
        out << j.dump(2) << "\n";
    } else {
        for (const TripleMod& t : o)
            out << "(" << t.a << "," << t.b << ";" << t.r << ")\n";
    }
    return Ok;
}

int cmd_extensions(const ActionArgs& args, bool chain, std::ostream& out)
{
    SymplecticForm form = make_form(parse_surface(args.surface), Rational::parse(args.lambda));
    CyclicAction x = make_action(form.surface, args.n, args.a, args.b, args.r);
    ExtensionSet e = chain ? cyclic_extensions_via_circle_chain(form, x) : cyclic_toric_extensions(form, x);
    if (args.format == "json") {
        ojson tori = ojson::array();
        for (const ToricExtension& t : e.tori)
            tori.push_back({{"r", t.r}, {"circle_b", t.circle_b}, {"provenance", to_string(t.provenance)}});
        out << ojson{{"completeness", to_string(e.completeness)}, {"tori", tori}}.dump(2) << "\n";
    } else {
        for (const ToricExtension& t : e.tori)
            out << "T_" << t.r << "  (1," << t.circle_b << ")  " << to_string(t.provenance) << "\n";
        out << to_string(e.completeness) << "\n";
    }
    return Ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Context& ctx)
{
    CLI::App app{"Centralizers of cyclic group actions on Hirzebruch surfaces", "ruledcent"};
    app.require_subcommand(1);

    ActionArgs cl;
    bool strict = false;
    auto* classify_cmd = app.add_subcommand("classify", "classify one action");
    add_action(classify_cmd, cl, true, true);
    add_format(classify_cmd, cl.format, {"text", "json"});
    classify_cmd->add_flag("--strict", strict, "exit 3 when the class is unresolved");

    std::string sc_surface, sc_lambda, sc_range, sc_out;
    std::optional<std::int64_t> sc_rmax;
    unsigned sc_threads = std::max(1u, std::thread::hardware_concurrency());
    auto* scan_cmd = app.add_subcommand("scan", "classify every effective action in a range, as CSV");
    scan_cmd->add_option("--surface", sc_surface)->required();
    scan_cmd->add_option("--lambda", sc_lambda)->required();
    scan_cmd->add_option("--n-range", sc_range, "lo..hi")->required();
    scan_cmd->add_option("--r-max", sc_rmax);
    scan_cmd->add_option("--threads", sc_threads)->check(CLI::PositiveNumber);
    scan_cmd->add_option("--out", sc_out, "CSV path (stdout if omitted)");

    std::vector<std::int64_t> vf_n{5, 7, 9, 11};
    std::string vf_fixtures;
    auto* verify_cmd = app.add_subcommand("verify", "run the built-in consistency checks");
    verify_cmd->add_option("--n", vf_n, "odd group orders for the move-group check")->delimiter(',');
    verify_cmd->add_option("--fixtures", vf_fixtures, "fixture table (JSON) to check instead of the built-in one");

    ActionArgs po;
    std::string po_out;
    std::optional<std::int64_t> po_n, po_a, po_b;
    auto* poly_cmd = app.add_subcommand("polytope", "moment polytope as SVG or JSON");
    poly_cmd->add_option("--surface", po.surface);
    poly_cmd->add_option("--lambda", po.lambda)->required();
    poly_cmd->add_option("--r", po.r)->required();
    poly_cmd->add_option("--n", po_n, "decorate vertices with weights of Z_n(a,b;r)");
    poly_cmd->add_option("--a", po_a);
    poly_cmd->add_option("--b", po_b);
    poly_cmd->add_option("--out", po_out);
    add_format(poly_cmd, po.format, {"svg", "json"});

    ActionArgs we;
    auto* weights_cmd = app.add_subcommand("weights", "isotropy weights at the four fixed points");
    add_action(weights_cmd, we, false, false);
    weights_cmd->remove_option(weights_cmd->get_option("--lambda"));
    add_format(weights_cmd, we.format, {"text", "json"});

    ActionArgs ob;
    auto* orbit_cmd = app.add_subcommand("orbit", "orbit of (a,b;r) under the moves");
    orbit_cmd->add_option("--n", ob.n)->required();
    orbit_cmd->add_option("--a", ob.a)->required();
    orbit_cmd->add_option("--b", ob.b)->required();
    orbit_cmd->add_option("--r", ob.r)->required();
    add_format(orbit_cmd, ob.format, {"text", "json"});

    ActionArgs ex;
    bool chain = false;
    auto* ext_cmd = app.add_subcommand("extensions", "Hamiltonian tori containing the group");
    add_action(ext_cmd, ex, true, true);
    ext_cmd->add_flag("--chain", chain, "lower bound by chaining circle extensions");
    add_format(ext_cmd, ex.format, {"text", "json"});

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return InvalidInput;
    }

    try {
        if (classify_cmd->parsed())
            return cmd_classify(cl, strict, out, ctx);
        if (scan_cmd->parsed())
            return cmd_scan(sc_surface, sc_lambda, sc_range, sc_rmax, sc_threads, sc_out, out, err);
        if (verify_cmd->parsed())
            return cmd_verify(vf_n, vf_fixtures, out, ctx);
        if (poly_cmd->parsed())
            return cmd_polytope(po, po_out, po_n, po_a, po_b, out, err);
        if (weights_cmd->parsed())
            return cmd_weights(we, out);
        if (orbit_cmd->parsed())
            return cmd_orbit(ob, out);
        if (ext_cmd->parsed())
            return cmd_extensions(ex, chain, out);
    } catch (const Error& e) {
        err << error_name(e.code()) << ": " << e.what() << "\n";
        return InvalidInput;
    }
    return InvalidInput;
}

} // namespace ruledcent::cli

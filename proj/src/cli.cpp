#include "toricnc/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <CLI11.hpp>

#include "toricnc/formats.hpp"
#include "toricnc/verify.hpp"

namespace toricnc {

namespace {

enum class Format { text, json_out, csv };

Format to_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "json") return Format::json_out;
    if (name == "csv") return Format::csv;
    throw std::invalid_argument("unknown format: " + name);
}

// TORICNC_FORMAT seeds the default; an explicit --format overwrites the same
// storage, and unknown env values surface later through to_format
void add_format_option(CLI::App* cmd, std::string& storage) {
    if (const char* env = std::getenv("TORICNC_FORMAT"); env != nullptr && *env != '\0')
        storage = env;
    cmd->add_option("--format", storage, "Output format (text, json, csv)")
        ->check(CLI::IsMember({"text", "json", "csv"}));
}

template <typename T>
std::string joined(const std::vector<T>& v) {
    std::ostringstream os;
    for (size_t t = 0; t < v.size(); ++t) {
        if (t > 0) os << ',';
        os << v[t];
    }
    return os.str();
}

void emit_poly(Format fmt, const Poly& p, std::ostream& out) {
    switch (fmt) {
        case Format::text:
            out << p.text() << "\n";
            break;
        case Format::json_out: {
            json j;
            j["f"] = poly_json(p);
            out << j.dump() << "\n";
            break;
        }
        case Format::csv:
            out << poly_csv(p) << "\n";
            break;
    }
}

IntervalFamily wt_family(int d, int k) {
    if (k < 0 || k > d + 1) throw std::invalid_argument("k out of range");
    if (k == 0) return IntervalFamily::full_star(d);
    if (k == d + 1) return IntervalFamily::empty(d);
    return IntervalFamily(d, {{k, d}});
}

Poly table1_row(int d, const std::string& method, int guard_nc) {
    if (d < 1) {
        // degenerate rows, straight from the poset definition
        if (d < 0) return toric_g(cube_boundary_complex(0));
        if (method == "gessel" || method == "all") return g_cube(0, GMethod::gessel);
        return g_cube(0, GMethod::recursion);
    }
    if (method == "recursion") return g_cube(d, GMethod::recursion);
    if (method == "nc") return g_cube(d, GMethod::nc, guard_nc);
    if (method == "all") {
        const Poly ges = g_cube(d, GMethod::gessel);
        if (d <= kCubePosetMaxDim && g_cube(d, GMethod::recursion) != ges)
            throw std::logic_error("g routes disagree");
        if (d <= guard_nc && g_cube(d, GMethod::nc, guard_nc) != ges)
            throw std::logic_error("g routes disagree");
        return ges;
    }
    return g_cube(d, GMethod::gessel);
}

int cmd_g(int max_d, const std::string& method, int guard_nc, Format fmt, std::ostream& out) {
    std::vector<std::pair<int, Poly>> rows;
    for (int d = -1; d <= max_d; ++d) rows.emplace_back(d, table1_row(d, method, guard_nc));
    switch (fmt) {
        case Format::text:
            for (const auto& [d, p] : rows) out << "d=" << d << ": " << p.text() << "\n";
            break;
        case Format::json_out: {
            json j;
            j["max_d"] = max_d;
            json arr = json::array();
            for (const auto& [d, p] : rows) {
                json row;
                row["d"] = d;
                row["g"] = poly_json(p);
                arr.push_back(std::move(row));
            }
            j["rows"] = std::move(arr);
            out << j.dump() << "\n";
            break;
        }
        case Format::csv:
            for (const auto& [d, p] : rows) out << poly_csv(p) << "\n";
            break;
    }
    return 0;
}

int cmd_q(int d, Format fmt, std::ostream& out) {
    const QTable t = q_table(d);
    switch (fmt) {
        case Format::text:
            for (int k = 0; k <= d + 1; ++k) out << "k=" << k << ": " << t.q[k].text() << "\n";
            break;
        case Format::json_out:
            out << qtable_json(t).dump() << "\n";
            break;
        case Format::csv:
            for (const auto& q : t.q) out << poly_csv(q) << "\n";
            break;
    }
    return 0;
}

int cmd_c(int d, int i, int j, const std::optional<std::string>& family_str, int guard_nc,
          Format fmt, std::ostream& out) {
    const Poly formula = c_poly(d, i, j);
    std::optional<IntervalFamily> family;
    std::optional<Poly> enumerated;
    if (family_str) {
        family = parse_family(d, *family_str);
        if (family->interval_count() != i || family->uncovered_count() != j)
            throw std::invalid_argument("family type does not match --i/--j");
        enumerated = c_poly_nc(*family, guard_nc);
    }
    switch (fmt) {
        case Format::text:
            out << "formula: " << formula.text() << "\n";
            if (enumerated) out << "enumeration: " << enumerated->text() << "\n";
            break;
        case Format::json_out: {
            json jj;
            jj["d"] = d;
            jj["i"] = i;
            jj["j"] = j;
            jj["formula"] = poly_json(formula);
            if (family) {
                jj["family"] = family_text(*family);
                jj["enumeration"] = poly_json(*enumerated);
            }
            out << jj.dump() << "\n";
            break;
        }
        case Format::csv:
            out << poly_csv(formula) << "\n";
            if (enumerated) out << poly_csv(*enumerated) << "\n";
            break;
    }
    return 0;
}

int cmd_nc_list(int d, int guard_nc, Format fmt, std::ostream& out) {
    const auto all = enumerate_nc(d, guard_nc);
    if (fmt == Format::json_out) {
        json j;
        j["d"] = d;
        j["count"] = all.size();
        json arr = json::array();
        for (const auto& pi : all) arr.push_back(partition_text(pi));
        j["partitions"] = std::move(arr);
        out << j.dump() << "\n";
    } else {
        for (const auto& pi : all) out << partition_text(pi) << "\n";
    }
    return 0;
}

int cmd_nc_alpha(int d, const std::string& ptext, Format fmt, std::ostream& out) {
    const NcPartition pi = parse_partition(ptext);
    if (pi.d != d) throw std::invalid_argument("partition does not match --d");
    const NcPartition a = alpha(pi);
    if (fmt == Format::json_out) {
        json j;
        j["d"] = d;
        j["partition"] = partition_text(pi);
        j["alpha"] = partition_text(a);
        out << j.dump() << "\n";
    } else {
        out << partition_text(a) << "\n";
    }
    return 0;
}

int cmd_nc_weights(int d, const std::optional<std::string>& ptext,
                   const std::optional<std::string>& family_str, const std::optional<int>& k,
                   int guard_nc, Format fmt, std::ostream& out) {
    if (family_str.has_value() == k.has_value())
        throw std::invalid_argument("exactly one of --family or --k is required");
    const IntervalFamily s = family_str ? parse_family(d, *family_str) : wt_family(d, *k);

    json j;
    j["d"] = d;
    if (family_str)
        j["family"] = family_text(s);
    else
        j["k"] = *k;

    if (ptext) {
        const NcPartition pi = parse_partition(*ptext);
        if (pi.d != d) throw std::invalid_argument("partition does not match --d");
        const int e = k ? weight_k_exponent(pi, *k) : weight_exponent(pi, s);
        switch (fmt) {
            case Format::text:
                out << Poly::monomial(1, e).text() << "\n";
                break;
            case Format::json_out:
                j["partition"] = partition_text(pi);
                j["exponent"] = e;
                out << j.dump() << "\n";
                break;
            case Format::csv:
                out << e << "\n";
                break;
        }
        return 0;
    }

    std::vector<Rat> tally(static_cast<size_t>(d) + 2);
    for (const auto& pi : enumerate_nc(d, guard_nc))
        tally[k ? weight_k_exponent(pi, *k) : weight_exponent(pi, s)] += 1;
    const Poly total{std::move(tally)};
    switch (fmt) {
        case Format::text:
            out << total.text() << "\n";
            break;
        case Format::json_out:
            j["total"] = poly_json(total);
            out << j.dump() << "\n";
            break;
        case Format::csv:
            out << poly_csv(total) << "\n";
            break;
    }
    return 0;
}

int cmd_adin(const std::string& fstr, Format fmt, std::ostream& out) {
    const FVector fv = parse_fvector(fstr);
    const AdinH h = adin_h_from_f(fv);
    switch (fmt) {
        case Format::text:
            out << "short: " << joined(h.short_h) << "\n";
            out << "long: " << joined(h.long_h) << "\n";
            out << "normalized: " << joined(h.normalized) << "\n";
            break;
        case Format::json_out: {
            json j;
            j["d"] = h.d;
            j["f"] = fvector_json(fv);
            json sh = json::array();
            for (const auto& e : h.short_h) sh.push_back(int_json(e));
            json lh = json::array();
            for (const auto& e : h.long_h) lh.push_back(int_json(e));
            json nh = json::array();
            for (const auto& e : h.normalized) nh.push_back(rat_json(e));
            j["short"] = std::move(sh);
            j["long"] = std::move(lh);
            j["normalized"] = std::move(nh);
            out << j.dump() << "\n";
            break;
        }
        case Format::csv:
            out << joined(h.short_h) << "\n";
            out << joined(h.long_h) << "\n";
            out << joined(h.normalized) << "\n";
            break;
    }
    return 0;
}

int cmd_verify(const std::string& suite, int max_d, int guard_nc, int guard_family, Format fmt,
               std::ostream& out, std::ostream& err) {
    VerifyOptions vo;
    vo.max_d = max_d;
    vo.guard_nc = guard_nc;
    vo.guard_family = guard_family;
    const VerificationReport r = run_suite(suite, vo);
    switch (fmt) {
        case Format::text:
            out << "suite: " << r.suite << "\n";
            out << "checks: " << r.checks << "\n";
            out << "failures: " << r.failures.size() << "\n";
            for (const auto& f : r.failures)
                out << "FAIL " << f.check << " [" << f.inputs << "]: " << f.lhs
                    << " != " << f.rhs << "\n";
            break;
        case Format::json_out: {
            json j;
            j["suite"] = r.suite;
            j["checks"] = r.checks;
            json arr = json::array();
            for (const auto& f : r.failures) {
                json jf;
                jf["check"] = f.check;
                jf["inputs"] = f.inputs;
                jf["lhs"] = f.lhs;
                jf["rhs"] = f.rhs;
                arr.push_back(std::move(jf));
            }
            j["failures"] = std::move(arr);
            out << j.dump() << "\n";
            break;
        }
        case Format::csv:
            out << "suite,checks,failures\n";
            out << r.suite << ',' << r.checks << ',' << r.failures.size() << "\n";
            break;
    }
    err << "wall_ms: " << r.wall_ms << "\n";
    return r.failures.empty() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Toric f/g polynomials of cubical complexes and noncrossing partition models"};
    app.name("toricnc");
    app.require_subcommand(1);

    struct {
        int max_d = 4;
        std::string method = "gessel";
        int guard = kNcRouteGuard;
        std::string fmt = "text";
    } g;
    auto* g_cmd = app.add_subcommand("g", "Cube boundary g polynomials for d = -1..max-d");
    g_cmd->add_option("--max-d", g.max_d, "Largest cube dimension")->required();
    g_cmd->add_option("--method", g.method, "recursion, gessel, nc, or all (nc applies from d=1)")
        ->check(CLI::IsMember({"recursion", "gessel", "nc", "all"}));
    g_cmd->add_option("--guard-nc", g.guard, "Enumeration guard for the nc route");
    add_format_option(g_cmd, g.fmt);

    struct {
        int d = 0;
        std::string fmt = "text";
    } q;
    auto* q_cmd = app.add_subcommand("q", "Toric contributions Q of one normalized h unit");
    q_cmd->add_option("--d", q.d, "Complex dimension")->required()->check(CLI::Range(0, 1000));
    add_format_option(q_cmd, q.fmt);

    struct {
        int d = 0;
        int i = 0;
        int j = 0;
        int guard = kNcRouteGuard;
        std::string fmt = "text";
    } c;
    std::string c_family;
    auto* c_cmd = app.add_subcommand("c", "Toric contribution C of a shelling component type");
    c_cmd->add_option("--d", c.d, "Complex dimension")->required();
    c_cmd->add_option("--i", c.i, "Interval count of the component type")->required();
    c_cmd->add_option("--j", c.j, "Uncovered count of the component type")->required();
    auto* c_family_opt =
        c_cmd->add_option("--family", c_family, "Interval family for the enumeration route");
    c_cmd->add_option("--guard-nc", c.guard, "Enumeration guard");
    add_format_option(c_cmd, c.fmt);

    auto* nc_cmd = app.add_subcommand("nc", "Noncrossing partition toolbox");
    nc_cmd->require_subcommand(1);

    struct {
        int d = 0;
        int guard = kNcRouteGuard;
        std::string fmt = "text";
    } ncl;
    auto* list_cmd = nc_cmd->add_subcommand("list", "Enumerate NC(d) in canonical order");
    list_cmd->add_option("--d", ncl.d, "Ground set size")->required();
    list_cmd->add_option("--guard-nc", ncl.guard, "Enumeration guard");
    add_format_option(list_cmd, ncl.fmt);

    struct {
        int d = 0;
        std::string partition;
        std::string fmt = "text";
    } nca;
    auto* alpha_cmd = nc_cmd->add_subcommand("alpha", "Image under the canonical involution");
    alpha_cmd->add_option("--d", nca.d, "Ground set size")->required();
    alpha_cmd->add_option("--partition", nca.partition, "Partition, e.g. \"(136)(2)(4)(5)\"")
        ->required();
    add_format_option(alpha_cmd, nca.fmt);

    struct {
        int d = 0;
        std::string partition;
        std::string family;
        int k = 0;
        int guard = kNcRouteGuard;
        std::string fmt = "text";
    } ncw;
    auto* w_cmd = nc_cmd->add_subcommand(
        "weights", "Weight exponent of one partition, or the census over NC(d)");
    w_cmd->add_option("--d", ncw.d, "Ground set size")->required();
    auto* w_pi_opt = w_cmd->add_option("--partition", ncw.partition, "Restrict to one partition");
    auto* w_family_opt = w_cmd->add_option("--family", ncw.family, "Interval family weight");
    auto* w_k_opt = w_cmd->add_option("--k", ncw.k, "Abbreviated weight index, 0..d+1");
    w_cmd->add_option("--guard-nc", ncw.guard, "Enumeration guard");
    add_format_option(w_cmd, ncw.fmt);

    struct {
        std::string f;
        std::string fmt = "text";
    } ad;
    auto* adin_cmd = app.add_subcommand("adin", "Short, long and normalized cubical h-vectors");
    adin_cmd->add_option("--f", ad.f, "Face counts, e.g. \"8,12,6\"")->required();
    add_format_option(adin_cmd, ad.fmt);

    struct {
        std::string f;
        std::string cvector;
        int cube = 0;
        int cube_boundary = 0;
        int d = 0;
        std::string fmt = "text";
    } tf;
    auto* tf_cmd = app.add_subcommand("toric-f", "Toric f polynomial of a cubical complex");
    auto* tf_f_opt = tf_cmd->add_option("--f", tf.f, "Face counts, e.g. \"8,12,6\"");
    auto* tf_cv_opt =
        tf_cmd->add_option("--cvector", tf.cvector, "File of shelling counts: lines \"i j count\"");
    auto* tf_cube_opt = tf_cmd->add_option("--cube", tf.cube, "Solid cube of this dimension");
    auto* tf_cb_opt =
        tf_cmd->add_option("--cube-boundary", tf.cube_boundary, "Cube boundary of this dimension");
    auto* tf_d_opt = tf_cmd->add_option("--d", tf.d, "Complex dimension (with --cvector)");
    add_format_option(tf_cmd, tf.fmt);

    struct {
        std::string suite;
        int max_d = 6;
        int guard_nc = kNcRouteGuard;
        int guard_family = 8;
        std::string fmt = "text";
    } v;
    auto* v_cmd = app.add_subcommand("verify", "Run an invariant suite");
    v_cmd->add_option("--suite", v.suite, "Suite name")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    v_cmd->add_option("--max-d", v.max_d, "Largest dimension to sweep");
    v_cmd->add_option("--guard-nc", v.guard_nc, "Cap for NC(d) enumeration sweeps");
    v_cmd->add_option("--guard-family", v.guard_family, "Cap for interval-family sweeps");
    add_format_option(v_cmd, v.fmt);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (g_cmd->parsed()) return cmd_g(g.max_d, g.method, g.guard, to_format(g.fmt), out);
        if (q_cmd->parsed()) return cmd_q(q.d, to_format(q.fmt), out);
        if (c_cmd->parsed()) {
            std::optional<std::string> fam;
            if (c_family_opt->count() > 0) fam = c_family;
            return cmd_c(c.d, c.i, c.j, fam, c.guard, to_format(c.fmt), out);
        }
        if (nc_cmd->parsed()) {
            if (list_cmd->parsed()) return cmd_nc_list(ncl.d, ncl.guard, to_format(ncl.fmt), out);
            if (alpha_cmd->parsed())
                return cmd_nc_alpha(nca.d, nca.partition, to_format(nca.fmt), out);
            if (w_cmd->parsed()) {
                std::optional<std::string> pi;
                std::optional<std::string> fam;
                std::optional<int> k;
                if (w_pi_opt->count() > 0) pi = ncw.partition;
                if (w_family_opt->count() > 0) fam = ncw.family;
                if (w_k_opt->count() > 0) k = ncw.k;
                return cmd_nc_weights(ncw.d, pi, fam, k, ncw.guard, to_format(ncw.fmt), out);
            }
        }
        if (adin_cmd->parsed()) return cmd_adin(ad.f, to_format(ad.fmt), out);
        if (tf_cmd->parsed()) {
            const int sources = (tf_f_opt->count() > 0) + (tf_cv_opt->count() > 0) +
                                (tf_cube_opt->count() > 0) + (tf_cb_opt->count() > 0);
            if (sources != 1)
                throw std::invalid_argument(
                    "exactly one of --f, --cvector, --cube, --cube-boundary is required");
            Poly f;
            if (tf_f_opt->count() > 0) {
                f = toric_f_cubical(parse_fvector(tf.f));
            } else if (tf_cv_opt->count() > 0) {
                if (tf_d_opt->count() == 0)
                    throw std::invalid_argument("--cvector requires --d");
                std::ifstream in(tf.cvector);
                if (!in) throw std::invalid_argument("cannot open c-vector file");
                f = toric_f_from_shelling(parse_cvector_file(tf.d, in));
            } else if (tf_cube_opt->count() > 0) {
                f = toric_f(cube_complex(tf.cube));
            } else {
                f = toric_f(cube_boundary_complex(tf.cube_boundary));
            }
            emit_poly(to_format(tf.fmt), f, out);
            return 0;
        }
        if (v_cmd->parsed())
            return cmd_verify(v.suite, v.max_d, v.guard_nc, v.guard_family, to_format(v.fmt),
                              out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace toricnc

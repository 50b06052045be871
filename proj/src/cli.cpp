#include "arclift/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <array>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "arclift/newton.hpp"
#include "arclift/pathology.hpp"
#include "arclift/text.hpp"
#include "arclift/weierstrass.hpp"

namespace arclift::cli {

namespace {

using json = nlohmann::ordered_json;

// One result as ordered key/value pairs, printed either as "key: value"
// lines or as a JSON object.
struct Report {
    json doc = json::object();
    std::vector<std::string> lines;
    bool ok = true;

    void field(const std::string& key, const std::string& value) {
        doc[key] = value;
        lines.push_back(key + ": " + value);
    }
    void field(const std::string& key, std::size_t value) {
        doc[key] = value;
        lines.push_back(key + ": " + std::to_string(value));
    }
};

std::string verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
    return out;
}

std::string format_arc(const std::vector<TruncatedSeries>& v) {
    std::vector<std::string> parts;
    for (const auto& s : v) parts.push_back(text::format_series(s));
    return join(parts, "; ");
}

json arc_json(const std::vector<TruncatedSeries>& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(text::format_series(s));
    return a;
}

const std::string& need(const std::optional<std::string>& v, const char* flag) {
    if (!v) throw Error(ErrorKind::invalid_argument, std::string("missing ") + flag);
    return *v;
}

Ring need_ring(const Invocation& inv, const char* fallback = nullptr) {
    if (inv.ring) return text::parse_ring(*inv.ring);
    if (fallback) return text::parse_ring(fallback);
    throw Error(ErrorKind::invalid_argument, "missing --ring");
}

// Rows of a three-column table with aligned columns.
std::vector<std::string> table(const std::vector<std::array<std::string, 3>>& rows) {
    std::array<std::size_t, 3> width{};
    for (const auto& r : rows)
        for (std::size_t i = 0; i < 3; ++i) width[i] = std::max(width[i], r[i].size());
    std::vector<std::string> out;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < 3; ++i) {
            std::string cell = r[i];
            if (i < 2) cell.resize(width[i], ' ');
            line += (i ? " | " : "") + cell;
        }
        out.push_back(line);
    }
    return out;
}

Report do_prepare(const Invocation& inv) {
    const Ring ring = need_ring(inv);
    const TruncatedSeries x = text::parse_series(ring, need(inv.series, "--series"), inv.precision);
    const StrictFactorization f = strict_prepare(x);
    const text::FactorizationRecord rec{f.u, f.q, f.certificate, f.precision};
    Report r;
    r.doc["u"] = text::format_series(rec.u);
    r.doc["q"] = text::format_monic(rec.q);
    r.doc["n"] = rec.n;
    r.doc["N"] = rec.precision;
    r.lines.push_back(text::format_factorization(rec));
    return r;
}

Report do_divide(const Invocation& inv) {
    const Ring ring = need_ring(inv);
    Report r;
    if (inv.by) {
        const TruncatedSeries a = text::parse_series(ring, need(inv.series, "--series"), inv.precision);
        const TruncatedSeries b = text::parse_series(ring, *inv.by, inv.precision);
        r.field("quotient", text::format_laurent(laurent_divide(a, b)));
        return r;
    }
    const MonicPoly q = text::parse_monic(ring, need(inv.poly, "--poly"));
    if (inv.power) {
        auto res = divides_power_of_t(q, *inv.power);
        if (auto* nd = std::get_if<NoDivide>(&res))
            throw Error(ErrorKind::no_divide, "t^" + std::to_string(*inv.power) + " is not divisible by q",
                        text::format_low(nd->remainder));
        r.field("cofactor", text::format_monic(std::get<MonicPoly>(res)));
        return r;
    }
    const TruncatedSeries f = text::parse_series(ring, need(inv.series, "--series"), inv.precision);
    const WeierstrassDivision div = weierstrass_divide(f, q);
    r.field("h", text::format_series(div.h));
    r.field("a", text::format_low(div.a));
    r.field("exact", div.exact ? "true" : "false");
    return r;
}

Report do_lift(const Invocation& inv) {
    const Ring ring = need_ring(inv);
    const PolyMap f = text::parse_map(ring, need(inv.map, "--map"));
    const auto x = text::parse_arc(ring, need(inv.arc, "--arc"), inv.precision);
    if (inv.precision)
        for (const auto& c : x)
            if (c.precision() < *inv.precision)
                throw Error(ErrorKind::insufficient_precision, "arc component known to fewer than N coefficients");
    std::vector<TruncatedSeries> xs;
    for (const auto& c : x) xs.push_back(inv.precision ? c.truncated(*inv.precision) : c);
    const ArcLift lift = arc_lift(f, xs);
    Report r;
    r.doc["v1"] = arc_json(lift.v1);
    r.doc["v0"] = arc_json(lift.v0);
    r.doc["x_new"] = arc_json(lift.x_new);
    r.doc["N'"] = lift.precision;
    r.doc["residual_order"] = lift.residual_order;
    r.lines = {"v1: " + format_arc(lift.v1), "v0: " + format_arc(lift.v0), "x_new: " + format_arc(lift.x_new),
               "N': " + std::to_string(lift.precision), "residual_order: " + std::to_string(lift.residual_order)};
    return r;
}

Report do_fiber(const Invocation& inv) {
    const Ring ring = need_ring(inv);
    const MonicPoly q = text::parse_monic(ring, need(inv.poly, "--poly"));
    if (!inv.precision) throw Error(ErrorKind::invalid_argument, "missing --N");
    const auto basis = s_fiber_basis(q, *inv.precision);
    Report r;
    r.field("dimension", basis.size());
    json vs = json::array();
    for (const auto& b : basis) {
        const std::string a = text::format_low(b.a);
        const std::string v = text::format_series(b.v);
        vs.push_back({{"a", a}, {"v", v}});
        r.lines.push_back("{a: " + a + ", v: " + v + "}");
    }
    r.doc["basis"] = vs;
    return r;
}

Report do_patho(const Invocation& inv) {
    const Ring k = need_ring(inv, "Fp(7)");
    Report r;
    std::vector<std::array<std::string, 3>> rows{{"identity", "level", "verdict"}};
    json jrows = json::array();
    auto add_row = [&](const std::string& identity, std::size_t level, bool ok) {
        rows.push_back({identity, std::to_string(level), verdict(ok)});
        jrows.push_back({{"identity", identity}, {"level", level}, {"verdict", verdict(ok)}});
        r.ok = r.ok && ok;
    };
    if (inv.check == "identities") {
        if (inv.bound > 12) throw Error(ErrorKind::invalid_argument, "--bound must be at most 12");
        const RingElement c = text::parse_element(k, inv.c);
        for (const auto& row : check_identities(k, inv.bound, c)) add_row(row.identity, row.level, row.holds);
    } else if (inv.check == "sawed") {
        const SawedCompletion s = sawed_completion(k, inv.n);
        for (const auto& g : s.generators)
            add_row(g.name + " = " + to_string(g.factorization), g.factorization.level(), g.verified);
        add_row("dim R1/p0^" + std::to_string(s.n) + " = " + std::to_string(s.n), 0, s.dimension == s.n);
        r.doc["dimension"] = s.dimension;
        r.doc["basis"] = s.basis;
        r.lines.push_back("R1/p0^" + std::to_string(s.n) + " = k[q0]/q0^" + std::to_string(s.n));
        r.lines.push_back("basis: " + join(s.basis, ", "));
    } else if (inv.check == "xy") {
        const std::size_t n = inv.precision.value_or(10);
        if (n > 12) throw Error(ErrorKind::invalid_argument, "--N must be at most 12");
        const XyCounterexample xy = xy_arc_counterexample(k, n);
        for (std::size_t i = 0; i < xy.product.size(); ++i) {
            std::string expr = "q0*x" + std::to_string(i);
            if (i > 0) expr = "x" + std::to_string(i - 1) + " + " + expr;
            add_row("[t^" + std::to_string(i) + "] q*x = " + expr + " = 0", xy.product[i].level(),
                    xy.product[i].is_zero());
        }
        add_row("x != 0", 0, xy.x_nonzero);
        add_row("q = q0 + t nondegenerate", 0, xy.q_nondegenerate);
        r.lines.push_back("ring: V1 over " + k.to_string() + ", N = " + std::to_string(n));
    } else {
        throw Error(ErrorKind::invalid_argument, "unknown --check '" + inv.check + "'");
    }
    r.doc["rows"] = jrows;
    auto t = table(rows);
    r.lines.insert(r.lines.end(), t.begin(), t.end());
    return r;
}

Report do_bizzard(const Invocation& inv) {
    const BizzardCompletion b = bizzard_completion(inv.p, inv.n);
    Report r;
    r.field("quotient", "Z[t]/(t - " + std::to_string(b.p) + ", t^" + std::to_string(b.n) + ") = Z/" +
                            std::to_string(b.modulus));
    r.field("modulus", static_cast<std::size_t>(b.modulus));
    r.field("t_image", static_cast<std::size_t>(b.t_image));
    r.field("t - p -> 0", verdict(b.kills_t_minus_p));
    r.field("t^n -> 0", verdict(b.kills_t_power));
    r.ok = b.kills_t_minus_p && b.kills_t_power;
    return r;
}

std::string render(const Report& r, const std::string& format) {
    if (format == "json") return r.doc.dump(2) + "\n";
    return join(r.lines, "\n") + "\n";
}

bool is_domain_error(ErrorKind k) {
    return k == ErrorKind::not_in_n1 || k == ErrorKind::no_divide || k == ErrorKind::indeterminate;
}

}  // namespace

Outcome run(const Invocation& inv) {
    Outcome out;
    if (inv.output != "text" && inv.output != "json") {
        out.exit_code = 1;
        out.err = "error: --output must be text or json\n";
        return out;
    }
    try {
        if (inv.precision && *inv.precision == 0) throw Error(ErrorKind::invalid_argument, "--N must be >= 1");
        Report r;
        if (inv.subcommand == "prepare")
            r = do_prepare(inv);
        else if (inv.subcommand == "divide")
            r = do_divide(inv);
        else if (inv.subcommand == "lift")
            r = do_lift(inv);
        else if (inv.subcommand == "fiber")
            r = do_fiber(inv);
        else if (inv.subcommand == "patho")
            r = do_patho(inv);
        else if (inv.subcommand == "bizzard")
            r = do_bizzard(inv);
        else
            throw Error(ErrorKind::parse_error, "unknown subcommand '" + inv.subcommand + "'");
        out.out = render(r, inv.output);
        out.exit_code = r.ok ? 0 : 2;
    } catch (const Error& e) {
        const std::string name(error_name(e.kind()));
        if (is_domain_error(e.kind())) {
            out.exit_code = 2;
            Report r;
            r.field("error", name);
            r.field("message", e.what());
            r.field("witness", e.witness());
            out.out = render(r, inv.output);
        } else {
            out.exit_code = 1;
            out.err = "error: " + std::string(e.what()) + (e.witness().empty() ? "" : " [" + e.witness() + "]") + "\n";
        }
    } catch (const std::exception& e) {
        out.exit_code = 1;
        out.err = std::string("error: ") + e.what() + "\n";
    }
    return out;
}

Invocation parse_args(const std::vector<std::string>& args, std::string* help) {
    Invocation inv;
    CLI::App app{"Weierstrass preparation, Newton lifting of arcs and the counterexample rings"};
    app.name("arclift");
    app.require_subcommand(1);

    std::string ring, series, poly, by, map, arc;
    std::size_t precision = 0, power = 0;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--ring", ring, "coefficient ring, e.g. Fp(5), Q, Zmod(9), Artin(Fp(5); eps; 2)");
        sub->add_option("--N", precision, "precision");
        sub->add_option("--output", inv.output, "text or json")->check(CLI::IsMember({"text", "json"}));
    };

    auto* prepare = app.add_subcommand("prepare", "strict Weierstrass factorization x = u q");
    common(prepare);
    prepare->add_option("--series", series, "series [c0, c1, ...] + O(t^N)");

    auto* divide = app.add_subcommand("divide", "division by q, q | t^n, or Laurent division");
    common(divide);
    divide->add_option("--series", series, "dividend");
    divide->add_option("--poly", poly, "monic divisor q");
    divide->add_option("--power", power, "test whether q divides t^n");
    divide->add_option("--by", by, "divisor series (Laurent division)");

    auto* lift = app.add_subcommand("lift", "Newton lifting of an arc to a solution");
    common(lift);
    lift->add_option("--map", map, "vars: [..]; split: k; eqs: [..]");
    lift->add_option("--arc", arc, "components separated by ';'");

    auto* fiber = app.add_subcommand("fiber", "kernel of (a, v) -> q v + a over a field");
    common(fiber);
    fiber->add_option("--poly", poly, "monic q");

    auto* patho = app.add_subcommand("patho", "identities in V1 and R1");
    common(patho);
    patho->add_option("--check", inv.check, "identities, sawed or xy")
        ->check(CLI::IsMember({"identities", "sawed", "xy"}));
    patho->add_option("--bound", inv.bound, "largest index for identities");
    patho->add_option("--n", inv.n, "power of p0 for sawed");
    patho->add_option("--c", inv.c, "unit substituted for q0");

    auto* bizzard = app.add_subcommand("bizzard", "completion of Z[t]/(t - p)");
    bizzard->add_option("--output", inv.output, "text or json")->check(CLI::IsMember({"text", "json"}));
    bizzard->add_option("--p", inv.p, "prime");
    bizzard->add_option("--n", inv.n, "power of t");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        if (help) *help = app.help();
        inv.subcommand = "help";
        return inv;
    } catch (const CLI::ParseError& e) {
        throw Error(ErrorKind::parse_error, e.what());
    }
    inv.subcommand = app.get_subcommands().front()->get_name();
    const CLI::App* sub = app.get_subcommands().front();
    auto given = [&](const char* flag) { return sub->get_option_no_throw(flag) && sub->count(flag) > 0; };
    if (given("--ring")) inv.ring = ring;
    if (given("--N")) inv.precision = precision;
    if (given("--series")) inv.series = series;
    if (given("--poly")) inv.poly = poly;
    if (given("--by")) inv.by = by;
    if (given("--power")) inv.power = power;
    if (given("--map")) inv.map = map;
    if (given("--arc")) inv.arc = arc;
    return inv;
}

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    Invocation inv;
    std::string help;
    try {
        inv = parse_args(args, &help);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    if (inv.subcommand == "help") {
        std::cout << help;
        return 0;
    }
    const Outcome o = run(inv);
    std::cout << o.out;
    std::cerr << o.err;
    return o.exit_code;
}

}  // namespace arclift::cli

#include "termirial/cli.hpp"

#include "termirial/core.hpp"
#include "termirial/fractal.hpp"
#include "termirial/identities.hpp"
#include "termirial/loopnest.hpp"
#include "termirial/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace termirial::cli {

namespace {

using nlohmann::json;

constexpr int kDefaultMaxOrder = 10'000;
constexpr std::int64_t kMaxSweepValue = 100'000;
constexpr std::uint64_t kDefaultMaxInstances = 1'000'000;

struct Globals {
    bool json = false;
    bool pretty = false;
    std::uint64_t budget = oracle::kDefaultBudget;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Range {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    std::string str() const { return std::to_string(lo) + ".." + std::to_string(hi); }
    std::uint64_t size() const { return static_cast<std::uint64_t>(hi - lo + 1); }
};

std::int64_t parse_int(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(text, &used);
    } catch (const std::exception&) {
        throw UsageError("invalid " + what + ": '" + text + "'");
    }
    if (used != text.size()) throw UsageError("invalid " + what + ": '" + text + "'");
    return v;
}

// "a..b" inclusive on both ends, or a single value "a".
Range parse_range(const std::string& text, const std::string& what) {
    const auto dots = text.find("..");
    Range r;
    if (dots == std::string::npos) {
        r.lo = r.hi = parse_int(text, what);
    } else {
        r.lo = parse_int(text.substr(0, dots), what);
        r.hi = parse_int(text.substr(dots + 2), what);
    }
    if (r.lo > r.hi) throw UsageError("empty " + what + " range '" + text + "'");
    return r;
}

Natural parse_n(const std::string& text, const std::string& what) {
    try {
        return parse_natural(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(what + " must be a non-negative integer, got '" + text + "'");
    }
}

std::uint64_t to_u64(const Natural& v, const std::string& what) {
    if (v > std::numeric_limits<std::uint64_t>::max()) throw UsageError(what + " is too large");
    return static_cast<std::uint64_t>(v);
}

class Printer {
public:
    Printer(const Globals& g, std::ostream& out) : g_(g), out_(out) {}

    std::string num(const Natural& v) const { return to_decimal(v, g_.pretty ? ' ' : '\0'); }
    static std::string plain(const Natural& v) { return to_decimal(v); }

    bool json_mode() const { return g_.json; }
    std::ostream& text() { return json_mode() ? sink_ : out_; }

    void envelope(const std::string& command, json inputs, json result, json checks) {
        if (!json_mode()) return;
        json env;
        env["command"] = command;
        env["inputs"] = std::move(inputs);
        env["result"] = std::move(result);
        env["checks"] = checks.is_null() ? json::array() : std::move(checks);
        out_ << env.dump(2) << '\n';
    }

private:
    const Globals& g_;
    std::ostream& out_;
    std::ostringstream sink_;
};

std::string join(const std::vector<Natural>& terms, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) s += sep;
        s += to_decimal(terms[i]);
    }
    return s;
}

std::string termirial_notation(const std::string& n, int p) { return n + "^(" + std::to_string(p) + ")"; }

// ---------------------------------------------------------------- eval

struct EvalArgs {
    std::string n;
    int p = 0;
    bool oracle = false;
    int max_order = kDefaultMaxOrder;
    std::string max_n = "1000000000000000000";
};

int cmd_eval(const EvalArgs& a, const Globals& g, std::ostream& out) {
    const Natural n = parse_n(a.n, "n");
    if (n > parse_n(a.max_n, "--max-n")) throw UsageError("n exceeds --max-n " + a.max_n);
    if (a.p < Order::kMin) throw UsageError("order p must be >= -1");
    if (a.p > a.max_order) throw UsageError("order p exceeds --max-order " + std::to_string(a.max_order));

    const TermirialExpr e = make_expr(n, Order(a.p));
    Printer pr(g, out);
    json result{{"value", Printer::plain(e.value)},
                {"termirial", termirial_notation(Printer::plain(n), a.p)},
                {"binomial", {{"top", Printer::plain(e.top)}, {"bottom", Printer::plain(e.bottom)}}}};
    json checks = json::array();

    pr.text() << pr.num(e.value) << '\n';
    pr.text() << "termirial: " << termirial_notation(Printer::plain(n), a.p) << '\n';
    pr.text() << "binomial: C(" << e.top << ", " << e.bottom << ")\n";

    int code = kOk;
    if (a.oracle) {
        if (n < 1 || a.p < 0) throw UsageError("the nested-sum oracle needs n >= 1 and p >= 0");
        const Natural o = oracle::nested_sum(to_u64(n, "n"), a.p, g.budget);
        const bool agree = o == e.value;
        result["oracle"] = Printer::plain(o);
        checks.push_back({{"name", "nested_sum"}, {"pass", agree}});
        pr.text() << "nested sum: " << pr.num(o) << (agree ? " (agrees)" : " (MISMATCH)") << '\n';
        if (!agree) code = kIdentityFailure;
    }
    pr.envelope("eval", {{"n", Printer::plain(n)}, {"p", a.p}, {"oracle", a.oracle}}, std::move(result),
                std::move(checks));
    return code;
}

// ---------------------------------------------------------------- check

struct CheckArgs {
    std::string identity;
    std::string n = "1..20";
    std::string m = "1..20";
    std::string p;
    bool verbose = false;
    int max_order = kDefaultMaxOrder;
    std::uint64_t max_instances = kDefaultMaxInstances;
};

int cmd_check(const CheckArgs& a, const Globals& g, std::ostream& out) {
    const auto id = parse_identity(a.identity);
    if (!id) throw UsageError("unknown identity '" + a.identity + "'");
    const IdentityAxes axes = identity_axes(*id);

    const Range nr = parse_range(a.n, "n");
    const Range mr = axes.uses_m ? parse_range(a.m, "m") : Range{0, 0};
    const std::string p_text = a.p.empty() ? (*id == Identity::recurrence ? "0..6" : "-1..8") : a.p;
    const Range pr_ = axes.uses_p ? parse_range(p_text, "p") : Range{0, 0};

    if (nr.lo < 0 || mr.lo < 0) throw UsageError("n and m must be non-negative");
    if (nr.hi > kMaxSweepValue || mr.hi > kMaxSweepValue) {
        throw UsageError("n and m must be <= " + std::to_string(kMaxSweepValue));
    }
    if (axes.uses_p) {
        const std::int64_t min_p = *id == Identity::recurrence ? 0 : Order::kMin;
        if (pr_.lo < min_p) throw UsageError(a.identity + " needs p >= " + std::to_string(min_p));
        if (pr_.hi > a.max_order) throw UsageError("p exceeds --max-order " + std::to_string(a.max_order));
    }
    const std::uint64_t total = nr.size() * mr.size() * pr_.size();
    if (total > a.max_instances) {
        throw UsageError("sweep has " + std::to_string(total) + " instances, --max-instances is " +
                         std::to_string(a.max_instances));
    }

    Printer pr(g, out);
    json checks = json::array();
    std::uint64_t passed = 0, failed = 0;
    const bool show_each = a.verbose || total == 1;

    for (std::int64_t n = nr.lo; n <= nr.hi; ++n) {
        for (std::int64_t m = mr.lo; m <= mr.hi; ++m) {
            for (std::int64_t p = pr_.lo; p <= pr_.hi; ++p) {
                const IdentityInstance inst =
                    evaluate_identity(*id, Natural(n), Natural(m), Order(static_cast<int>(p)));
                std::string label = "n=" + std::to_string(n);
                if (axes.uses_m) label += " m=" + std::to_string(m);
                if (axes.uses_p) label += " p=" + std::to_string(p);
                const bool ok = inst.holds();
                ok ? ++passed : ++failed;
                checks.push_back({{"name", std::string(identity_name(*id)) + " " + label}, {"pass", ok}});
                if (show_each || !ok) {
                    pr.text() << identity_name(*id) << ' ' << label << ": " << pr.num(inst.lhs) << " = "
                              << join(inst.rhs_terms, " + ");
                    if (!ok) pr.text() << " (rhs " << pr.num(inst.rhs) << ")";
                    pr.text() << (ok ? " pass" : " FAIL") << '\n';
                }
            }
        }
    }
    pr.text() << identity_name(*id) << ": " << total << " checked, " << passed << " passed, " << failed
              << " failed\n";

    json inputs{{"identity", a.identity}, {"n", nr.str()}};
    if (axes.uses_m) inputs["m"] = mr.str();
    if (axes.uses_p) inputs["p"] = pr_.str();
    pr.envelope("check", std::move(inputs), {{"checked", total}, {"passed", passed}, {"failed", failed}},
                std::move(checks));
    return failed == 0 ? kOk : kIdentityFailure;
}

// ---------------------------------------------------------------- enum

struct EnumArgs {
    std::int64_t n = 0;
    std::int64_t p = 0;
    bool list = false;
};

int cmd_enum(const EnumArgs& a, const Globals& g, std::ostream& out) {
    if (a.n < 0 || a.p < 0) throw UsageError("n and p must be non-negative");
    if (a.p > a.n) throw UsageError("subset size p must not exceed n");
    if (a.n > 20) throw GuardExceeded("subset enumeration needs n <= 20");
    const auto n = static_cast<std::uint32_t>(a.n);
    const auto p = static_cast<std::uint32_t>(a.p);

    Printer pr(g, out);
    const auto subsets = oracle::subsets(n, p, g.budget);
    const Natural expected = binomial(n, p);
    json checks = json::array();
    json result;
    bool all_ok = true;
    auto check = [&](const std::string& name, bool ok) {
        checks.push_back({{"name", name}, {"pass", ok}});
        all_ok = all_ok && ok;
    };

    pr.text() << "C(" << n << ", " << p << ") = " << pr.num(expected) << " subsets of size " << p << " from {1.."
              << n << "}\n";
    check("subset count = C(n, p)", Natural(subsets.size()) == expected);
    result["subset_count"] = subsets.size();

    if (a.list) {
        json listing = json::array();
        for (const auto& s : subsets) {
            std::string line = "{";
            for (std::size_t i = 0; i < s.size(); ++i) line += (i ? "," : "") + std::to_string(s[i]);
            line += "}";
            pr.text() << line << '\n';
            listing.push_back(s);
        }
        result["subsets"] = std::move(listing);
    }

    if (p >= 1) {
        const auto d = oracle::decompose_by_leading(n, p, g.budget);
        json groups = json::array();
        std::string counts;
        for (const auto& grp : d.groups) {
            // C(n-s, p-1) read as a termirial of order p-2.
            const int order = static_cast<int>(p) - 2;
            const std::int64_t arg = static_cast<std::int64_t>(n) - grp.leading - order;
            const Natural reading = termirial_p(Natural(arg), Order(order));
            const std::string note = termirial_notation(std::to_string(arg), order);
            pr.text() << "leading " << grp.leading << ": " << grp.count << " = " << note << '\n';
            check("group " + std::to_string(grp.leading) + " = " + note, reading == grp.count);
            groups.push_back({{"leading", grp.leading}, {"count", grp.count}, {"termirial", note}});
            counts += (counts.empty() ? "" : ",") + std::to_string(grp.count);
        }
        const int sum_order = static_cast<int>(p) - 1;
        const std::string sum_note = termirial_notation(std::to_string(n - p + 1), sum_order);
        pr.text() << "counts: " << counts << '\n';
        pr.text() << "sum: " << d.total() << " = " << sum_note << '\n';
        check("sum = " + sum_note, termirial_p(Natural(n - p + 1), Order(sum_order)) == d.total());
        result["counts"] = d.counts();
        result["groups"] = std::move(groups);
        result["sum"] = d.total();
    }
    pr.envelope("enum", {{"n", a.n}, {"p", a.p}}, std::move(result), std::move(checks));
    return all_ok ? kOk : kIdentityFailure;
}

// ---------------------------------------------------------------- loops

struct LoopsArgs {
    std::string file;
    std::string n;
    bool simulate = false;
};

int cmd_loops(const LoopsArgs& a, const Globals& g, std::istream& in, std::ostream& out, std::ostream& err) {
    std::string source;
    std::string origin = a.file.empty() || a.file == "-" ? "<stdin>" : a.file;
    if (origin == "<stdin>") {
        source.assign(std::istreambuf_iterator<char>(in), {});
    } else {
        std::ifstream f(a.file, std::ios::binary);
        if (!f) throw UsageError("cannot read '" + a.file + "'");
        source.assign(std::istreambuf_iterator<char>(f), {});
    }

    Printer pr(g, out);
    loopnest::LoopNestProgram program;
    try {
        program = loopnest::parse(source);
    } catch (const loopnest::ParseError& e) {
        err << origin << ':' << e.pos().line << ':' << e.pos().column << ": " << loopnest::error_kind_name(e.kind())
            << ": " << e.detail() << '\n';
        if (pr.json_mode()) {
            pr.envelope("loops", {{"file", origin}},
                        {{"error",
                          {{"kind", loopnest::error_kind_name(e.kind())},
                           {"line", e.pos().line},
                           {"column", e.pos().column},
                           {"message", e.detail()}}}},
                        json::array());
        }
        return kUsage;
    }

    std::optional<Natural> n_override;
    if (!a.n.empty()) n_override = parse_n(a.n, "--n");
    const auto r = loopnest::analyze(program, n_override);

    json result{{"depth", r.depth},
                {"order", r.closed_form.order},
                {"closed_form", {{"termirial", r.closed_form.termirial}, {"binomial", r.closed_form.binomial}}},
                {"theta_exponent", r.theta_exponent}};
    json checks = json::array();

    const std::string& sym = r.closed_form.n_symbol;
    pr.text() << "loops: " << r.depth << '\n';
    pr.text() << "closed form: " << r.closed_form.termirial << " = " << r.closed_form.binomial << '\n';
    if (r.exact_count) {
        pr.text() << "count: " << pr.num(*r.exact_count) << ", Θ(" << sym << '^' << r.theta_exponent << ")\n";
        pr.text() << "  with " << sym << " = " << pr.num(*r.param_value) << ": C(" << *r.binomial_top << ", "
                  << r.depth << ")\n";
        result["param_value"] = Printer::plain(*r.param_value);
        result["exact_count"] = Printer::plain(*r.exact_count);
    } else {
        pr.text() << "count: " << r.closed_form.termirial << ", Θ(" << sym << '^' << r.theta_exponent << ")\n";
    }

    int code = kOk;
    if (a.simulate) {
        if (!r.param_value) throw UsageError("--simulate needs a value for " + sym + " (binding or --n)");
        const std::uint64_t sim = loopnest::simulate(program, to_u64(*r.param_value, sym), g.budget);
        const bool agree = Natural(sim) == *r.exact_count;
        pr.text() << "simulated: " << pr.num(Natural(sim)) << (agree ? " (agrees)" : " (MISMATCH)") << '\n';
        result["simulated"] = std::to_string(sim);
        checks.push_back({{"name", "simulate = analyze"}, {"pass", agree}});
        if (!agree) code = kIdentityFailure;
    }

    json inputs{{"file", origin}, {"simulate", a.simulate}};
    if (n_override) inputs["n"] = Printer::plain(*n_override);
    pr.envelope("loops", std::move(inputs), std::move(result), std::move(checks));
    return code;
}

// ---------------------------------------------------------------- fractal

struct FractalArgs {
    std::int64_t n = 0;
    int p = 0;
    std::string format = "ascii";
    bool report = false;
    bool report_only = false;
    std::string out_path;
    std::uint64_t cell_budget = fractal::kDefaultCellBudget;
};

std::string rational_str(const Rational& r) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string fixed(double v) {
    std::ostringstream s;
    s << std::setprecision(15) << v;
    return s.str();
}

int cmd_fractal(const FractalArgs& a, const Globals& g, std::ostream& out) {
    if (a.n < 1) throw UsageError("fractal needs n >= 1");
    if (a.p < 0) throw UsageError("fractal needs p >= 0");
    if ((a.report || a.report_only) && a.p < 1) throw UsageError("--report needs p >= 1");
    const auto n = static_cast<std::uint64_t>(a.n);
    const fractal::Format format = a.format == "svg" ? fractal::Format::svg : fractal::Format::ascii;

    Printer pr(g, out);
    json result;
    json checks = json::array();

    if (!a.report_only) {
        const auto fig = fractal::build(n, a.p, a.cell_budget);
        std::string figure = fractal::render(fig, format);
        if (format == fractal::Format::ascii) figure += '\n';
        result["grey_cells"] = fig.grey_count();
        result["cell_side"] = rational_str(fig.cell_side);
        if (!a.out_path.empty()) {
            std::ofstream f(a.out_path, std::ios::binary);
            if (!f) throw UsageError("cannot write '" + a.out_path + "'");
            f << figure;
            result["out"] = a.out_path;
        } else if (pr.json_mode()) {
            result["figure"] = figure;
        } else {
            out << figure;
        }
        const bool ok = Natural(fig.grey_count()) == termirial_p(n, Order(a.p));
        checks.push_back({{"name", "grey cells = termirial"}, {"pass", ok}});
        if (!a.out_path.empty() || a.report) {
            pr.text() << "grey cells: " << fig.grey_count() << " = " << termirial_notation(std::to_string(n), a.p)
                      << '\n';
        }
    }

    if (a.report || a.report_only) {
        const auto rep = fractal::surface_report(n, a.p, a.cell_budget);
        pr.text() << "ratio S_" << a.p - 1 << "/S_" << a.p << " = 4(p+n)/(p+1) = " << rational_str(rep.ratio) << '\n';
        pr.text() << "dimension estimate: " << fixed(rep.dimension_estimate) << '\n';
        json report{{"ratio", rational_str(rep.ratio)}, {"dimension_estimate", rep.dimension_estimate}};
        if (rep.measured_ratio) {
            pr.text() << "measured: S_" << a.p - 1 << " = " << rational_str(*rep.surface_prev) << ", S_" << a.p
                      << " = " << rational_str(*rep.surface_curr) << ", ratio " << rational_str(*rep.measured_ratio)
                      << (rep.consistent() ? " (matches closed form)" : " (differs from closed form)") << '\n';
            pr.text() << "measured dimension: " << fixed(*rep.measured_dimension) << '\n';
            report["measured_ratio"] = rational_str(*rep.measured_ratio);
            report["surface_prev"] = rational_str(*rep.surface_prev);
            report["surface_curr"] = rational_str(*rep.surface_curr);
            report["measured_dimension"] = *rep.measured_dimension;
            report["consistent"] = rep.consistent();
        }
        result["report"] = std::move(report);
    }

    pr.envelope("fractal", {{"n", a.n}, {"p", a.p}, {"format", a.format}}, std::move(result), std::move(checks));
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact termirial (simplicial polytopic number) toolkit", "termirial"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "Emit one JSON envelope instead of text");
    app.add_flag("--pretty", g.pretty, "Group digits by thousands");
    app.add_option("--budget", g.budget, "Step budget for oracles and simulation")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "Evaluate the order-p termirial of n");
    eval->add_option("n", ea.n, "Argument n >= 0")->required();
    eval->add_option("p", ea.p, "Order p >= -1")->required();
    eval->add_flag("--oracle", ea.oracle, "Also run the nested-sum oracle");
    eval->add_option("--max-order", ea.max_order)->capture_default_str();
    eval->add_option("--max-n", ea.max_n)->capture_default_str();

    CheckArgs ca;
    auto* check = app.add_subcommand("check", "Sweep an identity over ranges");
    check->add_option("identity", ca.identity, "pascal | newton | split1 | split2 | recurrence | closedform")
        ->required()
        ->check(CLI::IsMember({"pascal", "newton", "split1", "split2", "recurrence", "closedform"}));
    check->add_option("--n", ca.n, "Range a..b")->capture_default_str();
    check->add_option("--m", ca.m, "Range a..b")->capture_default_str();
    check->add_option("--p", ca.p, "Range a..b (default -1..8, 0..6 for recurrence)");
    check->add_flag("--verbose", ca.verbose, "Print every instance");
    check->add_option("--max-order", ca.max_order)->capture_default_str();
    check->add_option("--max-instances", ca.max_instances)->capture_default_str();

    EnumArgs na;
    auto* enumerate = app.add_subcommand("enum", "Enumerate p-subsets of {1..n} and group by smallest element");
    enumerate->add_option("n", na.n)->required();
    enumerate->add_option("p", na.p)->required();
    enumerate->add_flag("--list", na.list, "Print every subset");

    LoopsArgs la;
    auto* loops = app.add_subcommand("loops", "Analyze a triangular loop nest (.loop file or stdin)");
    loops->add_option("file", la.file, "Program file; '-' or omitted reads stdin");
    loops->add_option("--n", la.n, "Override the bound parameter value");
    loops->add_flag("--simulate", la.simulate, "Run the nest literally and compare");

    FractalArgs fa;
    auto* fract = app.add_subcommand("fractal", "Render the pseudo-fractal figure for (n, p)");
    fract->add_option("n", fa.n)->required();
    fract->add_option("p", fa.p)->required();
    fract->add_option("--format", fa.format)->check(CLI::IsMember({"ascii", "svg"}))->capture_default_str();
    fract->add_flag("--report", fa.report, "Print the surface ratio and dimension estimate");
    fract->add_flag("--report-only", fa.report_only, "Print the report without building the figure");
    fract->add_option("--out", fa.out_path, "Write the figure to a file");
    fract->add_option("--cell-budget", fa.cell_budget)->capture_default_str();

    for (auto* sub : {eval, check, enumerate, loops, fract}) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*eval) return cmd_eval(ea, g, out);
        if (*check) return cmd_check(ca, g, out);
        if (*enumerate) return cmd_enum(na, g, out);
        if (*loops) return cmd_loops(la, g, in, out, err);
        if (*fract) return cmd_fractal(fa, g, out);
    } catch (const GuardExceeded& e) {
        err << "termirial: resource guard: " << e.what() << '\n';
        return kGuard;
    } catch (const UsageError& e) {
        err << "termirial: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "termirial: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace termirial::cli

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include "termirial/cli.hpp"
#include "termirial/core.hpp"
#include "termirial/fractal.hpp"
#include "termirial/loopnest.hpp"
#include "termirial/oracle.hpp"

#include "corpus.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

using namespace termirial;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && pass) {
            pass = false;
            detail = what;
        }
    }
};

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string str(const Natural& v) { return to_decimal(v); }

// ------------------------------------------------------------------ criteria

Outcome eval_paper_value() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = invoke({"eval", "100", "3"});
    const double elapsed = seconds_since(t0);
    o.require(r.code == 0, "exit code " + std::to_string(r.code));
    o.require(r.out.substr(0, r.out.find('\n')) == "4421275", "printed '" + r.out.substr(0, r.out.find('\n')) + "'");
    o.require(elapsed < 0.1, "took " + std::to_string(elapsed) + " s");
    return o;
}

Outcome small_paper_values() {
    Outcome o;
    o.require(termirial::termirial(4) == 10, "termirial(4) = " + str(termirial::termirial(4)));
    o.require(termirial_p(4, Order(2)) == 20, "termirial_p(4, 2) = " + str(termirial_p(4, Order(2))));
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    int evaluated = 0;
    for (std::uint64_t n = 1; n <= 25; ++n) {
        for (int p = 0; p <= 6; ++p) {
            Natural brute;
            try {
                brute = oracle::nested_sum(n, p);
            } catch (const GuardExceeded&) {
                continue;
            }
            ++evaluated;
            const Natural closed = termirial_p(n, Order(p));
            const Natural binom = binomial(n + p, p + 1);
            const std::string at = "(" + std::to_string(n) + ", " + std::to_string(p) + ")";
            o.require(brute == closed, "nested_sum != termirial_p at " + at);
            o.require(closed == binom, "termirial_p != binomial at " + at);
        }
    }
    const double elapsed = seconds_since(t0);
    o.require(evaluated > 0, "no instance within budget");
    o.require(elapsed < 10.0, "sweep took " + std::to_string(elapsed) + " s");
    if (o.pass) o.detail = std::to_string(evaluated) + " instances within budget, " + std::to_string(elapsed) + " s";
    return o;
}

Outcome convolution_theorem() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    for (int n = 1; n <= 15; ++n) {
        for (int m = 1; m <= 15; ++m) {
            for (int p = -1; p <= 7; ++p) {
                const auto terms = convolution_terms(n, m, Order(p));
                const Natural sum = std::accumulate(terms.begin(), terms.end(), Natural(0));
                o.require(sum == termirial_p(n + m, Order(p)),
                          "fails at n=" + std::to_string(n) + " m=" + std::to_string(m) + " p=" + std::to_string(p));
            }
        }
    }
    const auto r = invoke({"check", "newton", "--n", "1..15", "--m", "1..15", "--p", "-1..7"});
    o.require(r.code == 0, "check newton exited " + std::to_string(r.code));
    const double elapsed = seconds_since(t0);
    o.require(elapsed < 5.0, "sweep took " + std::to_string(elapsed) + " s");
    return o;
}

Outcome pascal_and_splits() {
    Outcome o;
    for (int n = 1; n <= 50; ++n) {
        for (int p = -1; p <= 10; ++p) {
            const auto s = pascal_check(n, Order(p));
            o.require(s.lhs == s.rhs, "Pascal analog fails at n=" + std::to_string(n) + " p=" + std::to_string(p));
        }
        for (int m = 1; m <= 50; ++m) {
            const Natural N(n), M(m);
            const std::string at = " at n=" + std::to_string(n) + " m=" + std::to_string(m);
            o.require(termirial::termirial(N + M) == termirial::termirial(N) + N * M + termirial::termirial(M), "first-order split fails" + at);
            o.require(termirial_p(N + M, Order(2)) == termirial_p(N, Order(2)) + N * termirial::termirial(M) + M * termirial::termirial(N) +
                                                         termirial_p(M, Order(2)),
                      "second-order split fails" + at);

            // The order-1 and order-2 convolution sums, term by term.
            const auto c1 = convolution_terms(N, M, Order(1));
            o.require(c1 == std::vector<Natural>{termirial::termirial(M), N * M, termirial::termirial(N)}, "order-1 terms differ" + at);
            const auto c2 = convolution_terms(N, M, Order(2));
            o.require(c2 == std::vector<Natural>{termirial_p(M, Order(2)), N * termirial::termirial(M), M * termirial::termirial(N),
                                                 termirial_p(N, Order(2))},
                      "order-2 terms differ" + at);
        }
    }
    return o;
}

Outcome enumeration_decomposition() {
    Outcome o;
    auto d = oracle::decompose_by_leading(5, 2);
    o.require(d.counts() == std::vector<std::uint64_t>{4, 3, 2, 1} && d.total() == 10, "(5, 2) decomposition");
    d = oracle::decompose_by_leading(5, 3);
    o.require(d.counts() == std::vector<std::uint64_t>{6, 3, 1} && d.total() == 10, "(5, 3) decomposition");
    for (std::uint32_t n = 0; n <= 12; ++n) {
        for (std::uint32_t p = 0; p <= n; ++p) {
            o.require(Natural(oracle::subsets(n, p).size()) == binomial(n, p),
                      "subset count at n=" + std::to_string(n) + " p=" + std::to_string(p));
        }
    }
    return o;
}

Outcome analyzer_vs_simulator() {
    Outcome o;
    for (std::size_t depth = 1; depth <= 4; ++depth) {
        std::string src;
        std::string prev = "n";
        for (std::size_t d = 0; d < depth; ++d) {
            const std::string idx = std::string(1, static_cast<char>('i' + d));
            src += "for " + idx + " = 1 to " + prev + "\n";
            prev = idx;
        }
        const auto program = loopnest::parse(src);
        for (std::uint64_t n = 0; n <= 30; ++n) {
            const auto r = loopnest::analyze(program, Natural(n));
            o.require(Natural(loopnest::simulate(program, n)) == *r.exact_count,
                      "depth " + std::to_string(depth) + " n=" + std::to_string(n));
        }
    }
    const auto paper = loopnest::parse(corpus::slurp(corpus::kDataDir + "/paper_four_loops.loop"));
    const auto r = loopnest::analyze(paper);
    o.require(r.exact_count == Natural(4421275), "four-loop program count");
    o.require(r.theta_exponent == 4, "four-loop program theta exponent");
    return o;
}

Outcome fractal_counts_and_ratio() {
    Outcome o;
    bool counts_ok = true;
    for (std::uint64_t n = 1; n <= 10; ++n) {
        for (int p = 0; p <= 8; ++p) {
            const bool ok = Natural(fractal::build(n, p).grey_count()) == termirial_p(n, Order(p));
            counts_ok = counts_ok && ok;
            o.require(ok, "grey count at n=" + std::to_string(n) + " p=" + std::to_string(p));
        }
    }
    // Surface ratio measured from the built figures against 4(p+n)/(p+1).
    int mismatches = 0;
    std::string first;
    for (std::uint64_t n = 1; n <= 10; ++n) {
        for (int p = 1; p <= 8; ++p) {
            const auto rep = fractal::surface_report(n, p);
            if (!rep.consistent() && mismatches++ == 0) {
                std::ostringstream s;
                s << "n=" << n << " p=" << p << " measured " << *rep.measured_ratio << " vs " << rep.ratio;
                first = s.str();
            }
        }
    }
    const auto far = fractal::surface_report(4, 500);
    const bool limit_ok = std::abs(far.dimension_estimate - 2.0) < 0.01;

    std::ostringstream summary;
    summary << "counts " << (counts_ok ? "ok" : "FAIL") << "; ratio " << (mismatches == 0 ? "ok" : "FAIL")
            << (mismatches ? " on " + std::to_string(mismatches) + "/80, first " + first : "") << "; |D-2| at (4, 500) = "
            << std::abs(far.dimension_estimate - 2.0) << (limit_ok ? " ok" : " FAIL");
    o.require(mismatches == 0, "");
    o.require(limit_ok, "");
    o.detail = summary.str();
    return o;
}

Outcome parser_robustness() {
    Outcome o;
    const auto cases = corpus::malformed();
    o.require(cases.size() >= 10, "corpus has only " + std::to_string(cases.size()) + " inputs");
    for (const auto& c : cases) {
        try {
            loopnest::parse(corpus::slurp(c.path()));
            o.require(false, c.file + " parsed without error");
        } catch (const loopnest::ParseError& e) {
            o.require(loopnest::error_kind_name(e.kind()) == c.kind, c.file + " gave " +
                                                                       std::string(loopnest::error_kind_name(e.kind())));
            o.require(e.pos().line == c.line && e.pos().column == c.column, c.file + " position mismatch");
        } catch (const std::exception& e) {
            o.require(false, c.file + " threw " + e.what());
        }
        const auto r = invoke({"loops", c.path()});
        o.require(r.code == 2, c.file + " exit code " + std::to_string(r.code));
        const std::string where = ":" + std::to_string(c.line) + ":" + std::to_string(c.column) + ": ";
        o.require(r.err.find(where) != std::string::npos, c.file + " message lacks position");
    }
    if (o.pass) o.detail = std::to_string(cases.size()) + " malformed inputs";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"paper value: eval 100 3 prints 4421275 in < 0.1 s", eval_paper_value},
        {"paper values: termirial(4) = 10, termirial_p(4, 2) = 20", small_paper_values},
        {"oracle equivalence: nested_sum = termirial_p = binomial, n<=25, p<=6", oracle_equivalence},
        {"convolution theorem: n, m in 1..15, p in -1..7", convolution_theorem},
        {"Pascal analog and split identities: n, m in 1..50, p in -1..10", pascal_and_splits},
        {"enumeration decomposition: [4,3,2,1], [6,3,1], subset counts", enumeration_decomposition},
        {"loop analyzer vs simulator: depth <= 4, n <= 30; paper program", analyzer_vs_simulator},
        {"fractal counts, surface ratio, dimension limit", fractal_counts_and_ratio},
        {"parser robustness: malformed corpus", parser_robustness},
    };

    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name;
        if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
        std::cout << '\n';
        if (!o.pass) ++failed;
    }
    std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>

#include "arcmot/errors.hpp"
#include "arcmot/numtheory.hpp"
#include "arcmot/verify.hpp"

using namespace arcmot;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    long max_order = 10;
    std::string mode = "exact";
    std::uint64_t seed = 1;
    std::string format = "json";
    std::string out;
    std::string lambda_path;
    bool timings = false;
    int trials = 3;
};

Format parse_format(const std::string& s)
{
    if (s == "json") return Format::Json;
    if (s == "latex") return Format::Latex;
    if (s == "csv") return Format::Csv;
    throw UsageError("unknown format \"" + s + "\" (expected json, latex or csv)");
}

LambdaContext load_lambda(const std::string& path)
{
    if (path.empty()) return LambdaContext::symbolic();
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read lambda spec " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("lambda spec " + path + " is not valid JSON: " + e.what());
    }
    return LambdaContext::from_json(j);
}

RunConfig make_config(const Options& o)
{
    RunConfig c;
    if (o.max_order < 1) throw UsageError("--max must be at least 1");
    c.max_order = o.max_order;
    auto mode = parse_mode(o.mode);
    if (!mode) throw UsageError("unknown mode \"" + o.mode + "\" (expected exact, modp or both)");
    c.mode = *mode;
    c.seed = o.seed;
    c.format = parse_format(o.format);
    c.out_path = o.out;
    c.lambda = load_lambda(o.lambda_path);
    c.timings = o.timings;
    if (o.trials < 1) throw UsageError("--trials must be at least 1");
    c.trials = o.trials;
    return c;
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

long parse_index(const std::string& s, const char* what)
{
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("expected an integer for ") + what + ", got \"" + s + "\"");
}

std::string value_latex_name(const std::string& kind, const std::vector<long>& idx)
{
    std::string sub;
    for (std::size_t i = 0; i < idx.size(); ++i) sub += (i ? "," : "") + std::to_string(idx[i]);
    if (kind == "g") return "G_{" + sub + "}";
    if (kind == "g-deformed") return "G^{\\lambda}_{" + sub + "}";
    if (kind == "h") return "H_{" + sub + "}";
    if (kind == "s") return "S_{" + sub + "}";
    return "Z_{" + sub + "}";
}

std::string indices_text(const std::vector<long>& idx)
{
    std::string s;
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? " " : "") + std::to_string(idx[i]);
    return s;
}

// ---------------------------------------------------------------------------
// Value lookup shared by compute and table.

struct Evaluator {
    Workspace ws;
    LambdaContext ctx;
    std::string route;
    std::string variant;

    std::string route_label(const std::string& kind) const
    {
        if (kind == "g") return route.empty() ? "recurrence" : route;
        if (kind == "g-deformed") return route.empty() ? "recurrence" : route;
        if (kind == "h") return "chain-sum";
        if (kind == "s") return variant.empty() ? "direct" : variant;
        return "chain-sum";
    }

    std::size_t arity(const std::string& kind) const { return kind == "z" ? 1 : 2; }

    FactoredRational value(const std::string& kind, const std::vector<long>& idx)
    {
        if (idx.size() != arity(kind)) {
            throw UsageError(kind + " takes " + std::to_string(arity(kind)) + " indices, got " + std::to_string(idx.size()));
        }
        if (kind == "g") {
            const std::string r = route_label(kind);
            if (r == "recurrence") return ws.classical.recurrence(idx[0], idx[1]);
            if (r == "closed-form") return ws.classical.closed_form(idx[0], idx[1]);
            if (r == "divisor-sum" || r == "divisor-chains") {
                if (idx[0] != idx[1]) throw UsageError("route " + r + " needs k = m");
                require_order(idx[0], idx[1]);
                return r == "divisor-sum" ? ws.classical.diag_divisor_sum(idx[0]) : ws.classical.diag_chains(idx[0]);
            }
            throw UsageError("unknown route \"" + r + "\"");
        }
        if (kind == "g-deformed") {
            const std::string r = route_label(kind);
            if (r == "recurrence") return ws.deformed.recurrence(idx[0], idx[1], ctx);
            if (r == "closed-form") return ws.deformed.closed_form(idx[0], idx[1], ctx);
            throw UsageError("unknown route \"" + r + "\"");
        }
        if (kind == "h") return ws.deformed.h_chain_sum(idx[0], idx[1], ctx);
        if (kind == "s") {
            const long a = idx[0];
            const long k = idx[1];
            if (a < 1 || k < 1) throw InvalidOrder("a and k must be at least 1");
            const std::string v = route_label(kind);
            if (v == "direct") return s_direct(a, k);
            if (v == "mobius") return s_mobius(a, k);
            if (v == "hat") return s_hat_closed(a, k);
            if (v == "hat-sum") return s_hat_sum(a, k);
            throw UsageError("unknown variant \"" + v + "\"");
        }
        if (kind == "z") {
            if (idx[0] < 1) throw InvalidOrder("n must be at least 1");
            return ws.series.z_value(idx[0]);
        }
        throw UsageError("unknown kind \"" + kind + "\" (expected g, g-deformed, h, s or z)");
    }
};

bool is_kind(const std::string& k) { return k == "g" || k == "g-deformed" || k == "h" || k == "s" || k == "z"; }

int run_compute(const std::string& kind, const std::vector<std::string>& raw, const Options& o, const std::string& route,
                const std::string& variant)
{
    if (!is_kind(kind)) throw UsageError("unknown kind \"" + kind + "\" (expected g, g-deformed, h, s or z)");
    RunConfig c = make_config(o);
    Evaluator ev{{}, c.lambda, route, variant};
    std::vector<long> idx;
    for (const auto& s : raw) idx.push_back(parse_index(s, "index"));
    FactoredRational v = ev.value(kind, idx);

    std::string text;
    switch (c.format) {
    case Format::Json: {
        nlohmann::ordered_json j;
        j["kind"] = kind;
        j["indices"] = idx;
        j["route"] = ev.route_label(kind);
        if (kind != "g" && kind != "s") j["lambda"] = kind == "z" ? "lam_i=A*tau^i" : c.lambda.describe();
        j["value"] = to_json(v);
        j["text"] = emit_text(v);
        text = j.dump(2) + "\n";
        break;
    }
    case Format::Latex: text = value_latex_name(kind, idx) + " = " + emit_latex(v) + "\n"; break;
    case Format::Csv: text = "kind,indices,value\n" + kind + "," + indices_text(idx) + "," + emit_text(v) + "\n"; break;
    }
    write_output(c.out_path, text);
    return kExitPass;
}

int run_table(const std::string& kind, std::optional<long> positional_n, const std::string& positional_format, Options o,
              const std::string& route, const std::string& variant)
{
    if (!is_kind(kind)) throw UsageError("unknown kind \"" + kind + "\" (expected g, g-deformed, h, s or z)");
    if (positional_n) o.max_order = *positional_n;
    if (!positional_format.empty()) o.format = positional_format;
    RunConfig c = make_config(o);
    Evaluator ev{{}, c.lambda, route, variant};
    const long n = c.max_order;

    std::vector<std::vector<long>> cells;
    if (kind == "z") {
        for (long i = 1; i <= n; ++i) cells.push_back({i});
    } else if (kind == "s") {
        for (long k = 2; k <= n; ++k) {
            for (long a : divisors(k)) {
                if (a < k) cells.push_back({a, k});
            }
        }
    } else {
        // Values are symmetric in (k, m); the triangle k <= m covers the square.
        for (long k = 1; k <= n; ++k) {
            for (long m = k; m <= n; ++m) cells.push_back({k, m});
        }
    }

    const std::string header = "kind=" + kind + " route=" + ev.route_label(kind) + " max=" + std::to_string(n)
                               + (kind == "g-deformed" || kind == "h" ? " lambda=" + c.lambda.describe() : "");
    std::ostringstream os;
    switch (c.format) {
    case Format::Json: {
        nlohmann::ordered_json j;
        j["kind"] = kind;
        j["route"] = ev.route_label(kind);
        j["max"] = n;
        if (kind == "g-deformed" || kind == "h") j["lambda"] = c.lambda.describe();
        j["symmetric"] = kind != "s" && kind != "z";
        nlohmann::ordered_json entries = nlohmann::ordered_json::array();
        for (const auto& idx : cells) {
            entries.push_back({{"indices", idx}, {"value", to_json(ev.value(kind, idx))}});
        }
        j["entries"] = std::move(entries);
        os << j.dump(2) << '\n';
        break;
    }
    case Format::Csv:
        os << "# " << header << '\n' << (kind == "z" ? "n,value\n" : kind == "s" ? "a,k,value\n" : "k,m,value\n");
        for (const auto& idx : cells) {
            for (long i : idx) os << i << ',';
            os << emit_text(ev.value(kind, idx)) << '\n';
        }
        break;
    case Format::Latex:
        os << "% " << header << "\n\\begin{align*}\n";
        for (const auto& idx : cells) {
            os << value_latex_name(kind, idx) << " &= " << emit_latex(ev.value(kind, idx)) << " \\\\\n";
        }
        os << "\\end{align*}\n";
        break;
    }
    write_output(c.out_path, os.str());
    return kExitPass;
}

int run_verify(const std::string& suite, const Options& o)
{
    if (!is_suite(suite)) throw UsageError("unknown suite \"" + suite + "\"");
    RunConfig c = make_config(o);
    VerificationReport r = run_suite(suite, c);
    write_output(c.out_path, r.render(c.format));
    std::cerr << "verify " << suite << ": " << r.cell_count() - r.failed_count() << "/" << r.cell_count()
              << " cells pass";
    if (r.first_failure) std::cerr << "; first failure " << r.first_failure->identity << " " << r.first_failure->cell;
    std::cerr << '\n';
    return r.pass() ? kExitPass : kExitFail;
}

int run_bench(const Options& o, bool format_given)
{
    RunConfig c = make_config(o);
    struct Row {
        std::string suite;
        std::size_t cells;
        double exact_ms;
        double modp_ms;
        std::size_t disagreements;
    };
    std::vector<Row> rows;
    std::size_t total_disagreements = 0;
    for (const auto& suite : suite_names()) {
        if (suite == "all") continue;
        auto timed = [&](CheckMode m) {
            RunConfig rc = c;
            rc.mode = m;
            rc.timings = false;
            const auto start = std::chrono::steady_clock::now();
            VerificationReport r = run_suite(suite, rc);
            double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            return std::pair{std::move(r), ms};
        };
        auto [exact, exact_ms] = timed(CheckMode::Exact);
        auto [modp, modp_ms] = timed(CheckMode::Modp);
        std::size_t disagreements = 0;
        if (c.mode == CheckMode::Both) {
            for (std::size_t i = 0; i < exact.identities.size(); ++i) {
                for (std::size_t j = 0; j < exact.identities[i].cells.size(); ++j) {
                    if (exact.identities[i].cells[j].pass != modp.identities[i].cells[j].pass) ++disagreements;
                }
            }
        }
        total_disagreements += disagreements;
        rows.push_back({suite, exact.cell_count(), exact_ms, modp_ms, disagreements});
    }

    std::ostringstream os;
    const Format f = format_given ? c.format : Format::Csv;
    if (format_given && f == Format::Json) {
        nlohmann::ordered_json j;
        j["max"] = c.max_order;
        j["seed"] = c.seed;
        j["agreement_checked"] = c.mode == CheckMode::Both;
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            arr.push_back({{"suite", r.suite}, {"cells", r.cells}, {"exact_ms", r.exact_ms}, {"modp_ms", r.modp_ms},
                           {"disagreements", r.disagreements}});
        }
        j["suites"] = std::move(arr);
        os << j.dump(2) << '\n';
    } else if (format_given && f == Format::Latex) {
        os << "\\begin{tabular}{lrrr}\n\\hline\nsuite & cells & exact (ms) & modp (ms) \\\\\n\\hline\n";
        for (const auto& r : rows) {
            os << r.suite << " & " << r.cells << " & " << std::fixed << std::setprecision(1) << r.exact_ms << " & "
               << r.modp_ms << " \\\\\n";
        }
        os << "\\hline\n\\end{tabular}\n";
    } else if (format_given) {
        os << "suite,cells,exact_ms,modp_ms,disagreements\n";
        for (const auto& r : rows) {
            os << r.suite << ',' << r.cells << ',' << std::fixed << std::setprecision(1) << r.exact_ms << ','
               << r.modp_ms << ',' << r.disagreements << '\n';
        }
    } else {
        os << std::left << std::setw(16) << "suite" << std::right << std::setw(8) << "cells" << std::setw(14)
           << "exact ms" << std::setw(14) << "modp ms";
        if (c.mode == CheckMode::Both) os << std::setw(10) << "agree";
        os << '\n';
        for (const auto& r : rows) {
            os << std::left << std::setw(16) << r.suite << std::right << std::setw(8) << r.cells << std::setw(14)
               << std::fixed << std::setprecision(1) << r.exact_ms << std::setw(14) << r.modp_ms;
            if (c.mode == CheckMode::Both) os << std::setw(10) << (r.disagreements == 0 ? "yes" : "NO");
            os << '\n';
        }
    }
    write_output(c.out_path, os.str());
    if (total_disagreements > 0) {
        std::cerr << "bench: " << total_disagreements << " cells where modp and exact verdicts differ\n";
        return kExitFail;
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"arcmot: exact motivic arc-space integrals and identity verification"};
    app.require_subcommand(1);
    Options o;
    std::string route;
    std::string variant;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--max", o.max_order, "maximum order N (default 10)");
        sub->add_option("--mode", o.mode, "equality test: exact, modp or both");
        sub->add_option("--seed", o.seed, "seed for the randomized test");
        sub->add_option("--format", o.format, "output format: json, latex or csv");
        sub->add_option("--out", o.out, "write output to PATH instead of stdout");
        sub->add_option("--lambda", o.lambda_path, "lambda specialization JSON file, e.g. {\"lam\": {\"2\": \"L\"}}");
        sub->add_option("--trials", o.trials, "sample points per randomized comparison (default 3)");
        sub->add_flag("--timings", o.timings, "record per-cell durations in reports");
    };

    std::string kind;
    std::vector<std::string> indices;
    auto* compute = app.add_subcommand("compute", "print one exact value");
    compute->add_option("kind", kind, "g, g-deformed, h, s or z")->required();
    compute->add_option("indices", indices, "k m (g, g-deformed, h), a k (s) or n (z)")->required();
    compute->add_option("--route", route, "g: recurrence, closed-form, divisor-sum, divisor-chains; g-deformed: recurrence, closed-form");
    compute->add_option("--variant", variant, "s: direct, mobius, hat or hat-sum");
    add_common(compute);

    std::string table_kind;
    std::vector<std::string> table_rest;
    auto* table = app.add_subcommand("table", "print the triangle of values up to N");
    table->add_option("kind", table_kind, "g, g-deformed, h, s or z")->required();
    table->add_option("rest", table_rest, "[N] [json|latex|csv]");
    table->add_option("--route", route, "route used for the values");
    table->add_option("--variant", variant, "s: direct, mobius, hat or hat-sum");
    add_common(table);

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "all, routes, symmetry, s-lemma, measure, functional-eq, deformed, theorem4, z-ode");
    add_common(verify);

    auto* bench = app.add_subcommand("bench", "time every suite in exact and modp mode");
    add_common(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*compute) return run_compute(kind, indices, o, route, variant);
        if (*table) {
            std::optional<long> n;
            std::string fmt;
            if (table_rest.size() > 2) throw UsageError("table takes at most N and a format");
            for (const auto& r : table_rest) {
                if (r == "json" || r == "latex" || r == "csv") {
                    fmt = r;
                } else {
                    n = parse_index(r, "N");
                }
            }
            return run_table(table_kind, n, fmt, o, route, variant);
        }
        if (*verify) return run_verify(suite, o);
        if (*bench) return run_bench(o, bench->count("--format") > 0);
    } catch (const UsageError& e) {
        std::cerr << "arcmot: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        // InvalidOrder, NotADivisor, InvalidSequence, ZeroSubstitution
        std::cerr << "arcmot: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "arcmot: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "arcmot: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}

#include "arcmot/verify.hpp"

#include <chrono>
#include <sstream>

#include "arcmot/errors.hpp"
#include "arcmot/modp.hpp"
#include "arcmot/numtheory.hpp"

namespace arcmot {

namespace {

using Json = nlohmann::ordered_json;

Cell cell(long k, long m, std::function<Outcome()> run) { return {cell_label(k, m), std::move(run)}; }

Cell cell(long n, std::function<Outcome()> run) { return {"(" + std::to_string(n) + ")", std::move(run)}; }

template <class F>
void square(Identity& id, long n, F&& f)
{
    for (long k = 1; k <= n; ++k) {
        for (long m = 1; m <= n; ++m) id.cells.push_back(cell(k, m, [=]() -> Outcome { return f(k, m); }));
    }
}

std::string seq_label(const std::vector<long>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 1469598103934665603ULL)
{
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// ---------------------------------------------------------------------------
// Suites

void add_routes(std::vector<Identity>& out, Workspace& ws, long n)
{
    auto& ci = ws.classical;
    Identity base{"g-base", "G_{1,1} = (L-1)^2 L^-2", {}};
    base.cells.push_back(cell(1, 1, [&ci]() -> Outcome { return Sides{ci.recurrence(1, 1), l_minus_one().pow(2) * tl(0, -2)}; }));
    out.push_back(std::move(base));

    Identity closed{"recurrence-vs-closed-form", "recurrence against the chain-tuple closed form", {}};
    square(closed, n, [&ci](long k, long m) { return Sides{ci.recurrence(k, m), ci.closed_form(k, m)}; });
    out.push_back(std::move(closed));

    Identity sum{"diagonal-divisor-sum", "diagonal via the S sum over proper divisors", {}};
    Identity sum_mobius{"diagonal-divisor-sum-mobius", "diagonal via the Mobius-inverted S", {}};
    Identity chains{"diagonal-divisor-chains", "diagonal via the sum over divisor chains", {}};
    for (long k = 1; k <= n; ++k) {
        sum.cells.push_back(cell(k, k, [&ci, k]() -> Outcome { return Sides{ci.recurrence(k, k), ci.diag_divisor_sum(k)}; }));
        sum_mobius.cells.push_back(cell(k, k, [&ci, k]() -> Outcome { return Sides{ci.diag_divisor_sum(k, SRoute::Mobius), ci.diag_chains(k)}; }));
        chains.cells.push_back(cell(k, k, [&ci, k]() -> Outcome { return Sides{ci.closed_form(k, k), ci.diag_chains(k)}; }));
    }
    out.push_back(std::move(sum));
    out.push_back(std::move(sum_mobius));
    out.push_back(std::move(chains));

    Identity red{"gcd-reduction", "G_{k,m} = t^{(k-1)(m-1)-(a-1)^2} L^{2a-k-m} G_{a,a}", {}};
    square(red, n, [&ci](long k, long m) {
        auto r = g_reduce_to_gcd(k, m);
        return Sides{ci.recurrence(k, m), r.prefactor * ci.recurrence(r.a, r.a)};
    });
    out.push_back(std::move(red));

    Identity coprime{"coprime-closed-form", "gcd 1 gives (L-1)^2 t^{(k-1)(m-1)} L^{-k-m}", {}};
    for (long k = 1; k <= n; ++k) {
        for (long m = 1; m <= n; ++m) {
            if (gcd(k, m) != 1) continue;
            coprime.cells.push_back(cell(k, m, [&ci, k, m]() -> Outcome {
                return Sides{ci.closed_form(k, m), l_minus_one().pow(2) * tl((k - 1) * (m - 1), -k - m)};
            }));
        }
    }
    out.push_back(std::move(coprime));
}

void add_symmetry(std::vector<Identity>& out, Workspace& ws, long n)
{
    auto& ci = ws.classical;
    Identity g{"inversion-symmetry", "G(1/t,1/L) = t^{-2(k-1)(m-1)} L^{2k+2m-2} G", {}};
    square(g, n, [&ci](long k, long m) {
        const auto& v = ci.recurrence(k, m);
        return Sides{invert_t_l(v), inversion_factor(k, m) * v};
    });
    Identity flag{"inversion-symmetry-check", "boolean symmetry check agrees", {}};
    square(flag, n, [&ci](long k, long m) { return ci.symmetry_check(k, m); });
    Identity f{"generating-series-symmetry", "coefficient of a^k b^m in F = t^2 L^2 F(1/t,1/L; a t^-2 L^-2, b t^-2 L^-2, c, d t^2, e)", {}};
    square(f, n, [&ws](long k, long m) { return ws.series.f_symmetry_cell(k, m); });
    out.push_back(std::move(g));
    out.push_back(std::move(flag));
    out.push_back(std::move(f));
}

void add_deformed_symmetry(std::vector<Identity>& out, Workspace& ws, long n)
{
    auto& di = ws.deformed;
    Identity d{"deformed-inversion-symmetry", "G(1/t,1/L,1/lam) = t^{-2(k-1)(m-1)} L^{2k+2m-2} G", {}};
    square(d, n, [&di](long k, long m) {
        const auto& v = di.recurrence(k, m);
        return Sides{invert_all(v), inversion_factor(k, m) * v};
    });
    Identity flag{"deformed-inversion-symmetry-check", "boolean deformed symmetry check agrees", {}};
    square(flag, n, [&di](long k, long m) { return di.symmetry_check(k, m); });
    out.push_back(std::move(d));
    out.push_back(std::move(flag));
}

void add_s_inversion(std::vector<Identity>& out, long n)
{
    Identity s{"s-mobius-inversion", "S_{a,k} literal sum against the Mobius-inverted closed form", {}};
    Identity h{"s-hat-geometric", "Shat_{a,k} literal sum against its closed form", {}};
    for (long k = 2; k <= n; ++k) {
        for (long a : divisors(k)) {
            if (a == k) continue;
            std::string label = "(" + std::to_string(a) + "," + std::to_string(k) + ")";
            s.cells.push_back({label, [a, k]() -> Outcome { return Sides{s_direct(a, k), s_mobius(a, k)}; }});
            h.cells.push_back({label, [a, k]() -> Outcome { return Sides{s_hat_sum(a, k), s_hat_closed(a, k)}; }});
        }
    }
    out.push_back(std::move(s));
    out.push_back(std::move(h));
}

void add_measure(std::vector<Identity>& out, Workspace& ws, long n)
{
    auto& ci = ws.classical;
    Identity g{"t1-normalization", "derived value, not stated by the source: G_{k,m}(1, L) = (L-1)^2 L^{-k-m}", {}};
    square(g, n, [&ci](long k, long m) { return Sides{at_t_one(ci.recurrence(k, m)), l_minus_one().pow(2) * tl(0, -k - m)}; });
    Identity c{"t1-chain-sum", "derived value, not stated by the source: the chain sum at t = 1 is 1", {}};
    for (long a = 1; a <= n; ++a) {
        c.cells.push_back(cell(a, [&ci, a]() -> Outcome { return Sides{at_t_one(ci.chain_sum(a)), FactoredRational(1)}; }));
    }
    out.push_back(std::move(g));
    out.push_back(std::move(c));
}

void add_functional_eq(std::vector<Identity>& out, Workspace& ws, long n)
{
    auto& ci = ws.classical;
    Identity f{"functional-equation", "coefficient of a^k b^m on both sides of the functional equation for F", {}};
    square(f, n, [&ws](long k, long m) { return ws.series.functional_eq_cell(k, m); });
    Identity r{"rowsum-geometric", "closed row sum against the geometric tail", {}};
    Identity t{"rowsum-tail", "(L-1)(rowsum(k) - sum_{m<=k} G_{k,m}) = G_{k,k}", {}};
    for (long k = 1; k <= n; ++k) {
        r.cells.push_back(cell(k, k, [&ws, k]() -> Outcome { return ws.series.rowsum_geometric_cell(k); }));
        t.cells.push_back(cell(k, k, [&ci, k]() -> Outcome {
            FactoredRational head;
            for (long m = 1; m <= k; ++m) head += ci.recurrence(k, m);
            return Sides{l_minus_one() * (ci.rowsum(k) - head), ci.recurrence(k, k)};
        }));
    }
    out.push_back(std::move(f));
    out.push_back(std::move(r));
    out.push_back(std::move(t));
}

void add_deformed(std::vector<Identity>& out, Workspace& ws, long n, const LambdaContext& ctx)
{
    auto& ci = ws.classical;
    auto& di = ws.deformed;
    const std::string with = " [" + ctx.describe() + "]";

    Identity base{"deformed-base", "G_{1,1} = (L-1)^2 L^-2 is not deformed", {}};
    base.cells.push_back(cell(1, 1, [&di]() -> Outcome { return Sides{di.recurrence(1, 1), g_base()}; }));
    out.push_back(std::move(base));

    Identity route{"deformed-recurrence-vs-closed-form", "deformed recurrence against the deformed closed form" + with, {}};
    square(route, n, [&di, ctx](long k, long m) { return Sides{di.recurrence(k, m, ctx), di.closed_form(k, m, ctx)}; });
    out.push_back(std::move(route));

    Identity deg{"deformed-degeneration", "lam_i -> L reproduces the undeformed values", {}};
    square(deg, n, [&ci, &di](long k, long m) {
        return Sides{di.recurrence(k, m, LambdaContext::all_l()), ci.recurrence(k, m)};
    });
    out.push_back(std::move(deg));

    Identity support{"lambda-support", "only lam_d with d | gcd(k,m), d >= 2 occur", {}};
    square(support, n, [&di](long k, long m) {
        const long a = gcd(k, m);
        for (long i : lambda_indices(di.closed_form(k, m))) {
            if (i < 2 || a % i != 0) return false;
        }
        return true;
    });
    out.push_back(std::move(support));

    Identity h{"h-definition-vs-chain-sum", "ratio of t = 1 values against the chain sum" + with, {}};
    square(h, n, [&di, ctx](long k, long m) { return Sides{di.h_from_definition(k, m, ctx), di.h_chain_sum(k, m, ctx)}; });
    out.push_back(std::move(h));

    Identity norm{"h-normalization", "chain sum with lam_i -> L is 1", {}};
    square(norm, n, [&di](long k, long m) { return Sides{di.h_chain_sum(k, m, LambdaContext::all_l()), FactoredRational(1)}; });
    out.push_back(std::move(norm));

    Identity t1{"deformed-t1", "t = 1 closed formula against the substituted closed form" + with, {}};
    square(t1, n, [&di, ctx](long k, long m) { return Sides{di.t1(k, m, ctx), at_t_one(di.closed_form(k, m, ctx))}; });
    out.push_back(std::move(t1));

    add_deformed_symmetry(out, ws, n);
}

void add_lambda_derivatives(std::vector<Identity>& out, Workspace& ws, long n)
{
    auto& s = ws.series;
    Identity first{"lambda-derivative", "d H_{k,m} / d lam_alpha product formula, vanishing unless alpha | gcd(k,m)", {}};
    for (long k = 1; k <= n; ++k) {
        for (long m = 1; m <= n; ++m) {
            for (long alpha = 2; alpha <= n; ++alpha) {
                first.cells.push_back({"(" + std::to_string(k) + "," + std::to_string(m) + ";" + std::to_string(alpha) + ")",
                                       [&s, k, m, alpha]() -> Outcome { return s.lambda_derivative(k, m, alpha); }});
            }
        }
    }
    out.push_back(std::move(first));

    struct Case {
        long k, m;
        std::vector<long> alphas, orders;
    };
    const std::vector<Case> cases{{4, 4, {2, 4}, {1, 1}}, {4, 8, {2, 4}, {1, 1}}, {8, 8, {2, 4}, {1, 1}},
                                  {4, 4, {2}, {2}},       {6, 6, {2, 3}, {1, 1}}};
    const std::vector<Case> extra{{2, 2, {2}, {2}}, {8, 8, {2}, {3}}, {8, 8, {2, 4}, {2, 1}}, {8, 8, {2, 4, 8}, {1, 2, 1}}};

    auto add = [&](Identity& id, const std::vector<Case>& list, HigherPrefactor p) {
        for (const auto& c : list) {
            if (c.k > n || c.m > n) continue;
            id.cells.push_back({cell_label(c.k, c.m) + ";alpha=" + seq_label(c.alphas) + ";order=" + seq_label(c.orders),
                                [&s, c, p]() -> Outcome { return s.lambda_higher_derivative(c.k, c.m, c.alphas, c.orders, p); }});
        }
    };
    Identity higher{"lambda-higher-derivative",
                    "mixed derivatives against the product formula with prefactor L^{alpha(k_j-1)} as stated", {}};
    add(higher, cases, HigherPrefactor::Stated);
    out.push_back(std::move(higher));

    Identity corrected{"lambda-higher-derivative-corrected",
                       "mixed derivatives against the product formula with prefactor k_j! L^{-alpha(k_j-1)}", {}};
    add(corrected, cases, HigherPrefactor::Corrected);
    add(corrected, extra, HigherPrefactor::Corrected);
    out.push_back(std::move(corrected));
}

void add_z(std::vector<Identity>& out, Workspace& ws, long n)
{
    auto& s = ws.series;
    Identity ode{"z-ode", "d Z_n / d tau divisor-sum identity", {}};
    Identity chain{"z-chain-rule", "d Z_n / d tau through the lam_alpha derivatives", {}};
    Identity norm{"z-normalization", "A -> L, tau -> 1 gives Z_n = 1", {}};
    for (long k = 1; k <= n; ++k) {
        ode.cells.push_back(cell(k, [&s, k]() -> Outcome { return s.z_ode(k); }));
        chain.cells.push_back(cell(k, [&s, k]() -> Outcome { return s.z_chain_rule(k); }));
        norm.cells.push_back(cell(k, [&s, k]() -> Outcome {
            Substitution sigma{{VarId::big_a(), SignedMonomial{1, Monomial(VarId::L(), 1)}},
                               {VarId::tau(), SignedMonomial{1, Monomial{}}}};
            return Sides{substitute(s.z_value(k), sigma), FactoredRational(1)};
        }));
    }
    Identity pde{"z-pde-coefficient", "d/d tau of the a^k b^m coefficient of Z", {}};
    square(pde, n, [&s](long k, long m) { return s.z_pde_coefficient(k, m); });
    out.push_back(std::move(ode));
    out.push_back(std::move(pde));
    out.push_back(std::move(chain));
    out.push_back(std::move(norm));
}

// ---------------------------------------------------------------------------
// Running

struct Verdicts {
    std::optional<bool> exact;
    std::optional<bool> modp;
};

Verdicts compare(const Sides& s, CheckMode mode, std::uint64_t seed, int trials)
{
    Verdicts v;
    if (mode != CheckMode::Modp) v.exact = rat_eq_exact(s.lhs, s.rhs);
    if (mode != CheckMode::Exact) v.modp = rat_eq_modp(s.lhs, s.rhs, trials, seed);
    return v;
}

Json sides_json(const Sides& s)
{
    Json j;
    j["lhs"] = arcmot::to_json(s.lhs);
    j["rhs"] = arcmot::to_json(s.rhs);
    j["lhs_text"] = emit_text(s.lhs);
    j["rhs_text"] = emit_text(s.rhs);
    return j;
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string latex_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '_' || c == '&' || c == '%' || c == '#' || c == '^' || c == '{' || c == '}') {
            out += c == '^' ? "\\^{}" : std::string("\\") + c;
        } else {
            out += c;
        }
    }
    return out;
}

}  // namespace

const char* mode_name(CheckMode m)
{
    switch (m) {
    case CheckMode::Exact: return "exact";
    case CheckMode::Modp: return "modp";
    case CheckMode::Both: return "both";
    }
    return "exact";
}

std::optional<CheckMode> parse_mode(std::string_view s)
{
    if (s == "exact") return CheckMode::Exact;
    if (s == "modp") return CheckMode::Modp;
    if (s == "both") return CheckMode::Both;
    return std::nullopt;
}

bool IdentityResult::pass() const
{
    for (const auto& c : cells) {
        if (!c.pass) return false;
    }
    return true;
}

bool VerificationReport::pass() const
{
    for (const auto& i : identities) {
        if (!i.pass()) return false;
    }
    return true;
}

std::size_t VerificationReport::cell_count() const
{
    std::size_t n = 0;
    for (const auto& i : identities) n += i.cells.size();
    return n;
}

std::size_t VerificationReport::failed_count() const
{
    std::size_t n = 0;
    for (const auto& i : identities) {
        for (const auto& c : i.cells) n += c.pass ? 0 : 1;
    }
    return n;
}

Json VerificationReport::to_json() const
{
    Json j;
    j["suite"] = suite;
    j["config"] = {{"max", config.max_order},
                   {"mode", mode_name(config.mode)},
                   {"seed", config.seed},
                   {"trials", config.trials},
                   {"lambda", config.lambda.describe()},
                   {"timings", config.timings}};
    Json ids = Json::array();
    for (const auto& id : identities) {
        Json cells = Json::array();
        for (const auto& c : id.cells) {
            Json cj{{"cell", c.cell}, {"pass", c.pass}, {"mode", c.mode}, {"millis", c.millis}};
            if (c.exact && c.modp) {
                cj["exact"] = *c.exact;
                cj["modp"] = *c.modp;
            }
            if (!c.error.empty()) cj["error"] = c.error;
            cells.push_back(std::move(cj));
        }
        ids.push_back({{"name", id.name}, {"note", id.note}, {"pass", id.pass()}, {"cells", std::move(cells)}});
    }
    j["identities"] = std::move(ids);
    std::size_t failed_ids = 0;
    for (const auto& id : identities) failed_ids += id.pass() ? 0 : 1;
    j["summary"] = {{"identities", identities.size()},
                    {"identities_failed", failed_ids},
                    {"cells", cell_count()},
                    {"cells_failed", failed_count()},
                    {"pass", pass()}};
    if (first_failure) {
        Json f{{"identity", first_failure->identity}, {"cell", first_failure->cell}, {"reason", first_failure->reason}};
        if (first_failure->sides) f["sides"] = sides_json(*first_failure->sides);
        j["first_failure"] = std::move(f);
    } else {
        j["first_failure"] = nullptr;
    }
    return j;
}

std::string VerificationReport::render(Format f) const
{
    std::ostringstream os;
    switch (f) {
    case Format::Json: os << to_json().dump(2) << '\n'; break;
    case Format::Csv:
        os << "identity,cell,pass,mode,millis\n";
        for (const auto& id : identities) {
            for (const auto& c : id.cells) {
                os << csv_escape(id.name) << ',' << csv_escape(c.cell) << ',' << (c.pass ? "true" : "false") << ','
                   << c.mode << ',' << c.millis << '\n';
            }
        }
        break;
    case Format::Latex:
        os << "\\begin{tabular}{lrrl}\n\\hline\nidentity & cells & failed & verdict \\\\\n\\hline\n";
        for (const auto& id : identities) {
            std::size_t failed = 0;
            for (const auto& c : id.cells) failed += c.pass ? 0 : 1;
            os << "\\texttt{" << latex_escape(id.name) << "} & " << id.cells.size() << " & " << failed << " & "
               << (id.pass() ? "pass" : "fail") << " \\\\\n";
        }
        os << "\\hline\n\\end{tabular}\n";
        break;
    }
    return os.str();
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"all",        "routes",        "symmetry", "s-lemma", "measure",
                                                "functional-eq", "deformed", "theorem4", "z-ode"};
    return names;
}

bool is_suite(std::string_view name)
{
    for (const auto& s : suite_names()) {
        if (s == name) return true;
    }
    return false;
}

std::vector<Identity> build_suite(std::string_view suite, Workspace& ws, long n, const LambdaContext& ctx)
{
    if (n < 1) throw InvalidOrder("max order must be at least 1");
    std::vector<Identity> out;
    const bool all = suite == "all";
    if (all || suite == "routes") add_routes(out, ws, n);
    if (all || suite == "symmetry") {
        add_symmetry(out, ws, n);
        if (!all) add_deformed_symmetry(out, ws, n);
    }
    if (all || suite == "s-lemma") add_s_inversion(out, n);
    if (all || suite == "measure") add_measure(out, ws, n);
    if (all || suite == "functional-eq") add_functional_eq(out, ws, n);
    if (all || suite == "deformed") add_deformed(out, ws, n, ctx);
    if (all || suite == "theorem4") add_lambda_derivatives(out, ws, n);
    if (all || suite == "z-ode") add_z(out, ws, n);
    if (out.empty()) throw std::invalid_argument("unknown suite \"" + std::string(suite) + "\"");
    return out;
}

VerificationReport run_identities(std::string suite, std::vector<Identity> identities, const RunConfig& config)
{
    VerificationReport report;
    report.suite = std::move(suite);
    report.config = config;
    for (const auto& id : identities) {
        IdentityResult ir{id.name, id.note, {}};
        for (const auto& c : id.cells) {
            CellResult r;
            r.cell = c.label;
            r.mode = mode_name(config.mode);
            std::optional<Sides> sides;
            std::string reason;
            const auto start = std::chrono::steady_clock::now();
            try {
                Outcome o = c.run();
                if (auto* b = std::get_if<bool>(&o)) {
                    r.pass = *b;
                    r.mode = "exact";
                    if (!r.pass) reason = "check returned false";
                } else {
                    sides = std::move(std::get<Sides>(o));
                    const std::uint64_t seed = fnv1a(c.label, fnv1a(id.name, config.seed));
                    Verdicts v = compare(*sides, config.mode, seed, config.trials);
                    if (config.mode == CheckMode::Both) {
                        r.exact = v.exact;
                        r.modp = v.modp;
                        r.pass = *v.exact && *v.modp;
                        if (*v.exact != *v.modp) {
                            reason = "randomized verdict disagrees with exact verdict";
                        } else if (!r.pass) {
                            reason = "sides differ";
                        }
                    } else {
                        r.pass = v.exact ? *v.exact : *v.modp;
                        if (!r.pass) reason = "sides differ";
                    }
                }
            } catch (const std::exception& e) {
                r.pass = false;
                r.error = e.what();
                reason = std::string("error: ") + e.what();
            }
            if (config.timings) {
                r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
            }
            if (!r.pass && !report.first_failure) report.first_failure = FailureDetail{id.name, r.cell, reason, sides};
            ir.cells.push_back(std::move(r));
        }
        report.identities.push_back(std::move(ir));
    }
    return report;
}

VerificationReport run_suite(std::string_view suite, const RunConfig& config)
{
    Workspace ws;
    return run_identities(std::string(suite), build_suite(suite, ws, config.max_order, config.lambda), config);
}

}  // namespace arcmot

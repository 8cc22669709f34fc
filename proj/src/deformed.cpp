#include "arcmot/deformed.hpp"

#include <tuple>

#include "arcmot/errors.hpp"
#include "arcmot/numtheory.hpp"
#include "arcmot/serialize.hpp"

namespace arcmot {

namespace {

std::int32_t narrow(long v)
{
    if (v < INT32_MIN || v > INT32_MAX) throw std::overflow_error("exponent out of range");
    return static_cast<std::int32_t>(v);
}

Monomial tl_mono(long te, long le) { return Monomial{{VarId::t(), narrow(te)}, {VarId::L(), narrow(le)}}; }

Monomial lam_mono(long i) { return Monomial(VarId::lam(narrow(i)), 1); }

FactoredRational lam_minus_one(long i)
{
    return FactoredRational(LaurentPoly(lam_mono(i)) - LaurentPoly(1));
}

std::set<VarId> lambda_vars(const FactoredRational& x)
{
    std::set<VarId> out;
    auto scan = [&out](const Monomial& m) {
        for (const auto& en : m.entries()) {
            if (en.var.kind() == VarId::Kind::Lam) out.insert(en.var);
        }
    };
    scan(x.unit());
    for (const auto& t : x.num().terms()) scan(t.mono);
    for (const auto& [f, e] : x.den()) scan(f.body());
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// LambdaContext

LambdaContext LambdaContext::all_l()
{
    LambdaContext c;
    c.rule_ = Rule::AllL;
    return c;
}

LambdaContext LambdaContext::a_tau()
{
    LambdaContext c;
    c.rule_ = Rule::ATau;
    return c;
}

LambdaContext LambdaContext::assign(std::map<long, SubstImage> assignment)
{
    for (const auto& [i, img] : assignment) {
        if (i < 2) throw std::invalid_argument("lambda indices start at 2 (lam_1 is always L)");
    }
    LambdaContext c;
    c.assignment_ = std::move(assignment);
    return c;
}

LambdaContext LambdaContext::from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("lam") || !j["lam"].is_object()) {
        throw ParseError("lambda spec must look like {\"lam\": {\"2\": \"L\"}}");
    }
    std::map<long, SubstImage> assignment;
    for (const auto& [key, value] : j["lam"].items()) {
        long i = 0;
        try {
            std::size_t used = 0;
            i = std::stol(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw ParseError("bad lambda index \"" + key + "\"");
        }
        if (i < 2) throw ParseError("lambda indices start at 2, got " + key);
        if (!value.is_string()) throw ParseError("lambda image must be a string");
        assignment.emplace(i, parse_signed_monomial(value.get<std::string>()));
    }
    return assign(std::move(assignment));
}

std::optional<SubstImage> LambdaContext::image(long i) const
{
    if (auto it = assignment_.find(i); it != assignment_.end()) return it->second;
    switch (rule_) {
    case Rule::AllL: return SignedMonomial{1, Monomial(VarId::L(), 1)};
    case Rule::ATau: return SignedMonomial{1, Monomial{{VarId::big_a(), 1}, {VarId::tau(), narrow(i)}}};
    case Rule::None: break;
    }
    return std::nullopt;
}

FactoredRational LambdaContext::apply(const FactoredRational& x) const
{
    if (mode() == Mode::Symbolic) return x;
    Substitution sigma;
    for (VarId v : lambda_vars(x)) {
        if (auto img = image(v.lam_index())) sigma.emplace(v, *img);
    }
    return substitute(x, sigma);
}

std::string LambdaContext::describe() const
{
    switch (rule_) {
    case Rule::AllL: return "lam_i=L";
    case Rule::ATau: return "lam_i=A*tau^i";
    case Rule::None: break;
    }
    return assignment_.empty() ? "symbolic" : "assigned";
}

std::set<long> lambda_indices(const FactoredRational& x)
{
    std::set<long> out;
    for (VarId v : lambda_vars(x)) out.insert(v.lam_index());
    return out;
}

FactoredRational rescale_lambda(const FactoredRational& x, long alpha)
{
    Substitution sigma{{VarId::L(), SignedMonomial{1, Monomial(VarId::L(), narrow(alpha))}}};
    for (VarId v : lambda_vars(x)) sigma.emplace(v, SignedMonomial{1, lam_mono(v.lam_index() * alpha)});
    return substitute(x, sigma);
}

FactoredRational invert_all(const FactoredRational& x)
{
    Substitution sigma{{VarId::t(), SignedMonomial{1, Monomial(VarId::t(), -1)}},
                       {VarId::L(), SignedMonomial{1, Monomial(VarId::L(), -1)}}};
    for (VarId v : lambda_vars(x)) sigma.emplace(v, SignedMonomial{1, Monomial(v, -1)});
    return substitute(x, sigma);
}

FactoredRational at_t_one(const FactoredRational& x)
{
    return substitute(x, Substitution{{VarId::t(), SignedMonomial{1, Monomial{}}}});
}

// ---------------------------------------------------------------------------
// DeformedIntegrals

const FactoredRational& DeformedIntegrals::recurrence(long k, long m)
{
    require_order(k, m);
    if (k > m) std::swap(k, m);
    if (const auto* hit = recurrence_.find(k, m)) return *hit;
    if (k == 1 && m == 1) return recurrence_.store(1, 1, g_base());
    if (m > k) {
        FactoredRational v = tl(k * (k - 1), -k) * recurrence(k, m - k);
        return recurrence_.store(k, m, std::move(v));
    }
    FactoredRational lower;
    for (long j = 1; j < k; ++j) lower += recurrence(k, j);
    Monomial body = tl_mono(k * (k - 1), -k) * lam_mono(k);
    FactoredRational pre = lam_minus_one(k) * tl(k * (k - 1), -k) * FactoredRational::inverse_one_minus(body);
    return recurrence_.store(k, k, pre * lower);
}

const FactoredRational& DeformedIntegrals::closed_form(long k, long m)
{
    require_order(k, m);
    if (const auto* hit = closed_form_.find(k, m)) return *hit;
    const long a = gcd(k, m);
    auto it = chain_sums_.find(a);
    if (it == chain_sums_.end()) {
        std::map<std::tuple<long, long, long>, FactoredRational> steps;
        auto step = [&](long prev, long b, long aj) -> const FactoredRational& {
            auto key = std::tuple{prev, b, aj};
            if (auto s = steps.find(key); s != steps.end()) return s->second;
            FactoredRational v = FactoredRational(mobius(b / prev)) * lam_minus_one(aj) * tl((aj - 1) * b, -b)
                                 * FactoredRational::one_minus(tl_mono((aj - 1) * (aj - b), b - aj))
                                 * FactoredRational::inverse_one_minus(lam_mono(aj) * tl_mono(aj * (aj - 1), -aj))
                                 * FactoredRational::inverse_one_minus(tl_mono((aj - 1) * b, -b));
            return steps.emplace(key, std::move(v)).first->second;
        };
        FactoredRational sum;
        for (const auto& tuple : enumerate_chain_tuples(a)) {
            FactoredRational prod(1);
            for (std::size_t j = 1; j < tuple.a.size() && !prod.is_zero(); ++j) {
                prod *= step(tuple.a[j - 1], tuple.b[j - 1], tuple.a[j]);
            }
            sum += prod;
        }
        it = chain_sums_.emplace(a, std::move(sum)).first;
    }
    FactoredRational v = l_minus_one().pow(2) * tl((k - 1) * (m - 1), -k - m) * it->second;
    return closed_form_.store(k, m, std::move(v));
}

const FactoredRational& DeformedIntegrals::h_chain_sum(long k, long m)
{
    require_order(k, m);
    const long a = gcd(k, m);
    if (auto it = h_sums_.find(a); it != h_sums_.end()) return it->second;
    FactoredRational sum;
    for (const auto& tuple : enumerate_chain_tuples(a)) {
        FactoredRational prod(1);
        for (std::size_t j = 1; j < tuple.a.size() && !prod.is_zero(); ++j) {
            const long prev = tuple.a[j - 1];
            const long b = tuple.b[j - 1];
            const long aj = tuple.a[j];
            prod *= FactoredRational(mobius(b / prev)) * lam_minus_one(aj) * tl(0, -b)
                    * FactoredRational::one_minus(Monomial(VarId::L(), narrow(b - aj)))
                    * FactoredRational::inverse_one_minus(lam_mono(aj) * Monomial(VarId::L(), narrow(-aj)))
                    * FactoredRational::inverse_one_minus(Monomial(VarId::L(), narrow(-b)));
        }
        sum += prod;
    }
    return h_sums_.emplace(a, std::move(sum)).first->second;
}

FactoredRational DeformedIntegrals::h_from_definition(long k, long m, const LambdaContext& ctx)
{
    FactoredRational deformed = at_t_one(closed_form(k, m, ctx));
    FactoredRational classical = at_t_one(closed_form(k, m, LambdaContext::all_l()));
    return deformed / classical;
}

FactoredRational DeformedIntegrals::t1(long k, long m, const LambdaContext& ctx)
{
    require_order(k, m);
    FactoredRational sum;
    for (const auto& tuple : enumerate_chain_tuples(gcd(k, m))) {
        FactoredRational prod(1);
        for (std::size_t j = 1; j < tuple.a.size() && !prod.is_zero(); ++j) {
            const long prev = tuple.a[j - 1];
            const long b = tuple.b[j - 1];
            const long aj = tuple.a[j];
            // (lam_a - 1) L^{-b} (1 - L^{b-a}) / ((1 - lam_a L^{-a}) (1 - L^{-b}))
            FactoredRational numerator = lam_minus_one(aj) * (tl(0, -b) - tl(0, -aj));
            FactoredRational denominator = (FactoredRational(1) - FactoredRational::monomial(lam_mono(aj)) * tl(0, -aj))
                                           * (FactoredRational(1) - tl(0, -b));
            prod *= FactoredRational(mobius(b / prev)) * numerator / denominator;
        }
        sum += prod;
    }
    return ctx.apply(l_minus_one().pow(2) * tl(0, -k - m) * sum);
}

bool DeformedIntegrals::symmetry_check(long k, long m)
{
    const auto& g = recurrence(k, m);
    return rat_eq_exact(invert_all(g), inversion_factor(k, m) * g);
}

}  // namespace arcmot

#include "arcmot/serialize.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

#include "arcmot/errors.hpp"

namespace arcmot {

using nlohmann::ordered_json;

namespace {

ordered_json exps_json(const Monomial& m)
{
    ordered_json j = ordered_json::object();
    for (const auto& en : m.entries()) j[en.var.name()] = en.exp;
    return j;
}

ordered_json coef_json(const mpz_class& c)
{
    if (c.fits_slong_p()) return static_cast<std::int64_t>(c.get_si());
    return c.get_str();
}

Monomial exps_from_json(const ordered_json& j)
{
    if (!j.is_object()) throw ParseError("\"exps\" must be an object");
    Monomial m;
    for (const auto& [name, e] : j.items()) {
        auto v = VarId::from_name(name);
        if (!v) throw ParseError("unknown variable \"" + name + "\"");
        if (!e.is_number_integer()) throw ParseError("exponent of " + name + " must be an integer");
        auto x = e.get<std::int64_t>();
        if (x == 0 || x < std::numeric_limits<std::int32_t>::min() || x > std::numeric_limits<std::int32_t>::max()) {
            throw ParseError("exponent of " + name + " out of range or zero");
        }
        if (m.contains(*v)) throw ParseError("duplicate variable " + name);
        m *= Monomial(*v, static_cast<std::int32_t>(x));
    }
    return m;
}

mpz_class coef_from_json(const ordered_json& j)
{
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        mpz_class c;
        if (c.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer coefficient");
        return c;
    }
    throw ParseError("coefficient must be an integer or a decimal string");
}

const ordered_json& field(const ordered_json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

// Monomial as a product string with a separator between factors.
std::string monomial_text(const Monomial& m, bool latex)
{
    std::string out;
    for (const auto& en : m.entries()) {
        if (latex) {
            out += en.var.latex();
            if (en.exp != 1) out += "^{" + std::to_string(en.exp) + "}";
        } else {
            if (!out.empty()) out += "*";
            out += en.var.name();
            if (en.exp != 1) out += "^" + std::to_string(en.exp);
        }
    }
    return out;
}

std::string poly_text(const LaurentPoly& p, bool latex)
{
    std::string out;
    const auto terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        mpz_class c = it->coef;
        bool neg = c < 0;
        if (neg) c = -c;
        if (neg) {
            out += "-";
        } else if (!out.empty()) {
            out += "+";
        }
        std::string mono = monomial_text(it->mono, latex);
        if (mono.empty()) {
            out += c.get_str();
        } else if (c == 1) {
            out += mono;
        } else {
            out += c.get_str() + (latex ? "" : "*") + mono;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace

ordered_json to_json(const FactoredRational& x)
{
    ordered_json j;
    j["unit"] = {{"sign", x.sign()}, {"exps", exps_json(x.unit())}};
    ordered_json num = ordered_json::array();
    const auto terms = x.num().terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        num.push_back({{"c", coef_json(it->coef)}, {"exps", exps_json(it->mono)}});
    }
    j["num"] = std::move(num);
    ordered_json den = ordered_json::array();
    for (const auto& [f, e] : x.den()) den.push_back({{"body", exps_json(f.body())}, {"mult", e}});
    j["den"] = std::move(den);
    return j;
}

FactoredRational from_json(const ordered_json& j)
{
    try {
        const auto& unit = field(j, "unit");
        const auto& sign = field(unit, "sign");
        if (!sign.is_number_integer() || (sign.get<int>() != 1 && sign.get<int>() != -1)) {
            throw ParseError("unit sign must be 1 or -1");
        }
        Monomial u = exps_from_json(field(unit, "exps"));
        const auto& num = field(j, "num");
        if (!num.is_array()) throw ParseError("\"num\" must be an array");
        std::vector<Term> terms;
        for (const auto& t : num) terms.push_back(Term{exps_from_json(field(t, "exps")), coef_from_json(field(t, "c"))});
        const auto& den = field(j, "den");
        if (!den.is_array()) throw ParseError("\"den\" must be an array");
        Denominator d;
        for (const auto& f : den) {
            Monomial body = exps_from_json(field(f, "body"));
            if (!CanonFactor::is_canonical(body)) throw ParseError("denominator body is not canonical");
            const auto& mult = field(f, "mult");
            if (!mult.is_number_integer() || mult.get<std::int64_t>() < 1 || mult.get<std::int64_t>() > 1'000'000) {
                throw ParseError("multiplicity must be a positive integer");
            }
            d[CanonFactor::from_canonical(body)] += mult.get<int>();
        }
        return FactoredRational::from_parts(sign.get<int>(), u, LaurentPoly::from_terms(std::move(terms)), std::move(d));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
}

std::string emit_json(const FactoredRational& x) { return to_json(x).dump(); }

FactoredRational parse_json(std::string_view text)
{
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
    return from_json(j);
}

std::string emit_latex(const FactoredRational& x)
{
    if (x.is_zero()) return "0";
    std::string numerator;
    bool poly_is_one = x.num() == LaurentPoly(1);
    std::string unit = monomial_text(x.unit(), true);
    if (poly_is_one) {
        numerator = unit.empty() ? "1" : unit;
    } else if (x.num().size() == 1) {
        numerator = unit + poly_text(x.num(), true);
    } else {
        numerator = unit + "\\left(" + poly_text(x.num(), true) + "\\right)";
    }
    if (x.sign() < 0) numerator = "-" + numerator;
    if (x.den().empty()) return numerator;
    std::string den;
    for (const auto& [f, e] : x.den()) {
        den += "\\left(1-" + monomial_text(f.body(), true) + "\\right)";
        if (e != 1) den += "^{" + std::to_string(e) + "}";
    }
    return "\\frac{" + numerator + "}{" + den + "}";
}

std::string emit_text(const FactoredRational& x)
{
    if (x.is_zero()) return "0";
    std::string out = x.sign() < 0 ? "-" : "";
    std::string unit = monomial_text(x.unit(), false);
    bool poly_is_one = x.num() == LaurentPoly(1);
    if (!unit.empty()) out += unit;
    if (!poly_is_one) {
        if (!unit.empty()) out += "*";
        out += x.num().size() == 1 ? poly_text(x.num(), false) : "(" + poly_text(x.num(), false) + ")";
    } else if (unit.empty()) {
        out += "1";
    }
    if (x.den().empty()) return out;
    out += "/(";
    bool first = true;
    for (const auto& [f, e] : x.den()) {
        if (!first) out += "*";
        first = false;
        out += "(1-" + monomial_text(f.body(), false) + ")";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out + ")";
}

SignedMonomial parse_signed_monomial(std::string_view text)
{
    auto fail = [&](const std::string& why) -> ParseError {
        return ParseError("bad monomial \"" + std::string(text) + "\": " + why);
    };
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    SignedMonomial out;
    std::string_view rest = s;
    if (rest.starts_with('-')) {
        out.sign = -1;
        rest.remove_prefix(1);
    } else if (rest.starts_with('+')) {
        rest.remove_prefix(1);
    }
    if (rest.empty()) throw fail("empty");
    while (true) {
        auto star = rest.find('*');
        std::string_view factor = rest.substr(0, star);
        if (factor.empty()) throw fail("empty factor");
        auto caret = factor.find('^');
        std::string_view name = factor.substr(0, caret);
        std::int32_t e = 1;
        if (caret != std::string_view::npos) {
            auto digits = factor.substr(caret + 1);
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), e);
            if (ec != std::errc{} || ptr != digits.data() + digits.size()) throw fail("bad exponent");
        }
        if (name == "1") {
            if (caret != std::string_view::npos) throw fail("exponent on constant");
        } else {
            auto v = VarId::from_name(name);
            if (!v) throw fail("unknown variable \"" + std::string(name) + "\"");
            out.mono *= Monomial(*v, e);
        }
        if (star == std::string_view::npos) break;
        rest.remove_prefix(star + 1);
    }
    return out;
}

}  // namespace arcmot
